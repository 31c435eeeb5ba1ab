#include "fmbend/io.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fmbend/error.hpp"
#include "fmbend/skeleton.hpp"

namespace fmb {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string id_of(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string id");
  return j.get<std::string>();
}

std::string integer_text(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  schema(path, "expected an integer string");
}

Rational rational_of(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_array() && j.size() == 2) {
      return make_rational(integer_text(j[0], path + "[0]"), integer_text(j[1], path + "[1]"));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema(path, e.what());
  }
  schema(path, "expected a decimal string or a [numerator, denominator] pair");
}

json rational_json(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Point2 point_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [x, y]");
  return Point2(rational_of(j[0], path + "[0]"), rational_of(j[1], path + "[1]"));
}

json point_json(const Point2& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

EdgeRef edge_of_key(const std::string& key, const std::string& path) {
  auto colon = key.find(':');
  if (colon == std::string::npos) schema(path, "bend key must be 'fixed_id:mobile_id'");
  return {key.substr(0, colon), key.substr(colon + 1)};
}

Instance instance_from(const json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  std::vector<FixedVertex> fixed;
  const json& jf = field(j, "fixed", "$");
  if (!jf.is_array()) schema("$.fixed", "expected an array");
  for (std::size_t i = 0; i < jf.size(); ++i) {
    std::string p = "$.fixed[" + std::to_string(i) + "]";
    fixed.push_back({id_of(field(jf[i], "id", p), p + ".id"),
                     Point2(rational_of(field(jf[i], "x", p), p + ".x"), rational_of(field(jf[i], "y", p), p + ".y"))});
  }
  std::vector<std::string> mobile;
  const json& jm = field(j, "mobile", "$");
  if (!jm.is_array()) schema("$.mobile", "expected an array");
  for (std::size_t i = 0; i < jm.size(); ++i) {
    std::string p = "$.mobile[" + std::to_string(i) + "]";
    mobile.push_back(jm[i].is_string() ? jm[i].get<std::string>() : id_of(field(jm[i], "id", p), p + ".id"));
  }
  std::vector<EdgeRef> edges;
  const json& je = field(j, "edges", "$");
  if (!je.is_array()) schema("$.edges", "expected an array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string p = "$.edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) schema(p, "expected [fixed_id, mobile_id]");
    edges.push_back({id_of(je[i][0], p + "[0]"), id_of(je[i][1], p + "[1]")});
  }
  Instance out{FMBigraph(std::move(fixed), std::move(mobile), std::move(edges)), std::nullopt};
  if (auto it = j.find("strips"); it != j.end()) {
    if (!it->is_array()) schema("$.strips", "expected an array");
    StripSet strips;
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string p = "$.strips[" + std::to_string(i) + "]";
      strips.push_back({rational_of(field((*it)[i], "y_top", p), p + ".y_top"),
                        rational_of(field((*it)[i], "y_bottom", p), p + ".y_bottom")});
    }
    out.strips = std::move(strips);
  }
  return out;
}

}  // namespace

Instance parse_instance_unchecked(std::string_view text) { return instance_from(parse_json(text)); }

Instance parse_instance(std::string_view text) {
  Instance inst = parse_instance_unchecked(text);
  if (!inst.graph.issues().empty()) throw Error(ErrorCode::InvariantError, inst.graph.issues().front().message);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["fixed"] = json::array();
  for (const auto& f : inst.graph.fixed()) {
    j["fixed"].push_back({{"id", f.id}, {"x", rational_json(f.position.x)}, {"y", rational_json(f.position.y)}});
  }
  j["mobile"] = json::array();
  for (const auto& m : inst.graph.mobile()) j["mobile"].push_back({{"id", m}});
  j["edges"] = json::array();
  for (const auto& e : inst.graph.edge_refs()) j["edges"].push_back(json::array({e.fixed_id, e.mobile_id}));
  if (inst.strips) {
    j["strips"] = json::array();
    for (const auto& s : *inst.strips) {
      j["strips"].push_back({{"y_top", rational_json(s.y_top)}, {"y_bottom", rational_json(s.y_bottom)}});
    }
  }
  return j.dump(2) + "\n";
}

Drawing parse_drawing(std::string_view text) {
  json j = parse_json(text);
  Drawing d;
  const json& jp = field(j, "positions", "$");
  if (!jp.is_object()) schema("$.positions", "expected an object");
  for (auto it = jp.begin(); it != jp.end(); ++it) d.positions[it.key()] = point_of(it.value(), "$.positions." + it.key());
  if (auto jb = j.find("bends"); jb != j.end()) {
    if (!jb->is_object()) schema("$.bends", "expected an object");
    for (auto it = jb->begin(); it != jb->end(); ++it) {
      std::string p = "$.bends." + it.key();
      if (!it.value().is_array()) schema(p, "expected a list of points");
      std::vector<Point2> pts;
      for (std::size_t i = 0; i < it.value().size(); ++i) pts.push_back(point_of(it.value()[i], p + "[" + std::to_string(i) + "]"));
      d.bends[edge_of_key(it.key(), p)] = std::move(pts);
    }
  }
  return d;
}

std::string serialize_drawing(const Drawing& d) {
  json j;
  j["positions"] = json::object();
  for (const auto& [id, p] : d.positions) j["positions"][id] = point_json(p);
  j["bends"] = json::object();
  for (const auto& [e, pts] : d.bends) {
    json list = json::array();
    for (const auto& p : pts) list.push_back(point_json(p));
    j["bends"][edge_key(e)] = std::move(list);
  }
  return j.dump(2) + "\n";
}

BpsewcInstance parse_bpsewc(std::string_view text) {
  json j = parse_json(text);
  BpsewcInstance inst;
  const json& jv = field(j, "vertices", "$");
  if (!jv.is_array()) schema("$.vertices", "expected an array");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    std::string p = "$.vertices[" + std::to_string(i) + "]";
    std::string id = id_of(field(jv[i], "id", p), p + ".id");
    index[id] = i;
    inst.vertices.push_back(id);
    inst.points.emplace_back(rational_of(field(jv[i], "x", p), p + ".x"), rational_of(field(jv[i], "y", p), p + ".y"));
  }
  const json& je = field(j, "edges", "$");
  if (!je.is_array()) schema("$.edges", "expected an array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string p = "$.edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) schema(p, "expected [u, v]");
    auto u = index.find(id_of(je[i][0], p + "[0]"));
    auto v = index.find(id_of(je[i][1], p + "[1]"));
    if (u == index.end() || v == index.end()) schema(p, "unknown vertex");
    inst.edges.emplace_back(u->second, v->second);
  }
  if (auto b = j.find("bends"); b != j.end()) {
    if (!b->is_number_unsigned()) schema("$.bends", "expected a non-negative integer");
    inst.bends = b->get<std::size_t>();
  }
  check_bpsewc(inst);
  return inst;
}

std::string serialize_bpsewc(const BpsewcInstance& inst) {
  json j;
  j["vertices"] = json::array();
  for (std::size_t i = 0; i < inst.vertices.size(); ++i) {
    j["vertices"].push_back({{"id", inst.vertices[i]}, {"x", rational_json(inst.points[i].x)}, {"y", rational_json(inst.points[i].y)}});
  }
  j["edges"] = json::array();
  for (auto [u, v] : inst.edges) j["edges"].push_back(json::array({inst.vertices[u], inst.vertices[v]}));
  j["bends"] = inst.bends;
  return j.dump(2) + "\n";
}

std::string cell_graph_json(const CellGraph& cg, const IntersectionGraph& gx) {
  json j;
  j["clusters"] = json::array();
  for (const auto& c : cg.clusters()) {
    json cells = json::array();
    for (const auto& cell : c.cells) cells.push_back({{"id", cell.id}, {"representative", point_json(cell.representative)}});
    j["clusters"].push_back({{"mobile", c.mobile_id}, {"size", c.cells.size()}, {"cells", cells}});
  }
  j["intersection_edges"] = json::array();
  for (auto [u, v] : gx.edges()) j["intersection_edges"].push_back(json::array({gx.nodes[u], gx.nodes[v]}));
  j["adjacency"] = json::array();
  for (const auto& [a, b] : cg.adjacency()) {
    j["adjacency"].push_back(json::array({json::array({cg.clusters()[a.first].mobile_id, cg.clusters()[a.first].cells[a.second].id}),
                                          json::array({cg.clusters()[b.first].mobile_id, cg.clusters()[b.first].cells[b.second].id})}));
  }
  return j.dump(2) + "\n";
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const FMBigraph& g, const Drawing& d, const SvgOptions& options) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  auto grow = [&](const Point2& p) {
    double x = to_double(p.x), y = to_double(p.y);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& [id, p] : d.positions) grow(p);
  for (const auto& [e, pts] : d.bends)
    for (const auto& p : pts) grow(p);
  if (options.strips) {
    for (const auto& s : *options.strips) {
      miny = std::min(miny, to_double(s.y_bottom));
      maxy = std::max(maxy, to_double(s.y_top));
    }
  }
  double span = std::max({maxx - minx, maxy - miny, 1.0});
  double pad = span * 0.1;
  minx -= pad;
  maxx += pad;
  miny -= pad;
  maxy += pad;
  span = std::max(maxx - minx, maxy - miny);
  const double S = options.size;
  auto X = [&](double x) { return num((x - minx) / span * S); };
  auto Y = [&](double y) { return num((maxy - y) / span * S); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(S) << "\" height=\"" << num(S)
    << "\" viewBox=\"0 0 " << num(S) << " " << num(S) << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << num(S) << "\" height=\"" << num(S) << "\" fill=\"white\"/>\n";
  if (options.strips) {
    for (const auto& s : *options.strips) {
      double top = to_double(s.y_top), bottom = to_double(s.y_bottom);
      o << "<rect class=\"strip\" x=\"0\" y=\"" << Y(top) << "\" width=\"" << num(S) << "\" height=\""
        << num((top - bottom) / span * S) << "\" fill=\"#dddddd\"/>\n";
    }
  }
  o << "<line class=\"axis\" x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << num(S) << "\" y2=\"" << Y(0)
    << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  o << "<line class=\"axis\" x1=\"" << X(0) << "\" y1=\"0\" x2=\"" << X(0) << "\" y2=\"" << num(S)
    << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";

  for (const auto& e : g.edge_refs()) {
    auto pf = d.positions.find(e.fixed_id);
    auto pm = d.positions.find(e.mobile_id);
    if (pf == d.positions.end() || pm == d.positions.end()) continue;
    std::vector<Point2> pts{pf->second};
    if (auto b = d.bends.find(e); b != d.bends.end()) pts.insert(pts.end(), b->second.begin(), b->second.end());
    pts.push_back(pm->second);
    o << "<polyline class=\"edge\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << X(to_double(pts[i].x)) << "," << Y(to_double(pts[i].y));
    o << "\"/>\n";
    if (auto b = d.bends.find(e); b != d.bends.end()) {
      for (const auto& p : b->second) {
        o << "<rect class=\"bend\" x=\"" << num((to_double(p.x) - minx) / span * S - 1.5) << "\" y=\""
          << num((maxy - to_double(p.y)) / span * S - 1.5) << "\" width=\"3.000\" height=\"3.000\" fill=\"#666666\"/>\n";
      }
    }
  }
  for (const auto& f : g.fixed()) {
    auto it = d.positions.find(f.id);
    if (it == d.positions.end()) continue;
    o << "<circle class=\"fixed\" cx=\"" << X(to_double(it->second.x)) << "\" cy=\"" << Y(to_double(it->second.y))
      << "\" r=\"4\" fill=\"black\"><title>" << escape(f.id) << "</title></circle>\n";
  }
  for (const auto& m : g.mobile()) {
    auto it = d.positions.find(m);
    if (it == d.positions.end()) continue;
    o << "<circle class=\"mobile\" cx=\"" << X(to_double(it->second.x)) << "\" cy=\"" << Y(to_double(it->second.y))
      << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"><title>" << escape(m) << "</title></circle>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "collinear") return GeneratorKind::Collinear;
  if (name == "convex_hull_cactus" || name == "convex-hull-cactus" || name == "convex-hull") return GeneratorKind::ConvexHullCactus;
  if (name == "strip") return GeneratorKind::Strip;
  return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;

// Portable bounded draw (standard distributions differ across libraries).
std::size_t draw(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<std::size_t> sample(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + draw(rng, n - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::string fid(std::size_t i) { return "f" + std::to_string(i + 1); }
std::string mid(std::size_t i) { return "m" + std::to_string(i + 1); }

GeneratedInstance gen_collinear(const GeneratorParams& p) {
  Rng rng(p.seed);
  std::vector<std::size_t> xs = sample(rng, 4 * std::max<std::size_t>(p.n_fixed, 1), p.n_fixed);
  std::vector<FixedVertex> fixed;
  for (std::size_t i = 0; i < p.n_fixed; ++i) fixed.push_back({fid(i), Point2(static_cast<long>(xs[i]), 0L)});
  std::vector<std::string> mobile;
  std::vector<EdgeRef> edges;
  std::size_t maxd = std::min(p.max_degree, p.n_fixed);
  for (std::size_t m = 0; m < p.n_mobile; ++m) {
    mobile.push_back(mid(m));
    std::size_t deg = maxd == 0 ? 0 : 1 + draw(rng, maxd);
    for (std::size_t f : sample(rng, p.n_fixed, deg)) edges.push_back({fid(f), mid(m)});
  }
  return {{FMBigraph(std::move(fixed), std::move(mobile), std::move(edges)), std::nullopt}, "collinear"};
}

GeneratedInstance gen_cactus(const GeneratorParams& p) {
  if (p.n_fixed < 3 && p.n_mobile > 0) throw Error(ErrorCode::GenerationFailed, "need at least three fixed vertices");
  Rng rng(p.seed);
  std::size_t grid = 3 * std::max<std::size_t>(p.n_fixed, 2);
  for (std::size_t attempt = 0; attempt < p.retries; ++attempt) {
    std::vector<std::size_t> cells = sample(rng, grid * grid, p.n_fixed);
    std::vector<FixedVertex> fixed;
    for (std::size_t i = 0; i < p.n_fixed; ++i) {
      fixed.push_back({fid(i), Point2(static_cast<long>(cells[i] % grid), static_cast<long>(cells[i] / grid))});
    }
    std::vector<std::string> mobile;
    std::vector<EdgeRef> edges;
    bool ok = true;
    std::size_t maxd = std::max<std::size_t>(3, std::min(p.max_degree, p.n_fixed));
    for (std::size_t m = 0; m < p.n_mobile && ok; ++m) {
      mobile.push_back(mid(m));
      bool found = false;
      for (int t = 0; t < 50 && !found; ++t) {
        std::size_t deg = 3 + draw(rng, maxd - 2);
        auto nb = sample(rng, p.n_fixed, deg);
        std::vector<Point2> pts;
        for (std::size_t f : nb) pts.push_back(fixed[f].position);
        if (!convex_hull(pts).full_dimensional()) continue;
        for (std::size_t f : nb) edges.push_back({fid(f), mid(m)});
        found = true;
      }
      ok = found;
    }
    if (!ok) continue;
    FMBigraph g(fixed, mobile, edges);
    IntersectionGraph gx = build_intersection_graph(g);
    std::string note;
    bool cactus = true;
    for (const auto& comp : gx.components()) {
      IntersectionGraph sub(std::vector<std::string>(comp.size()));
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j)
          if (gx.adjacent(comp[i], comp[j])) sub.add_edge(i, j);
      GxClass c = classify_intersection_graph(sub);
      if (c == GxClass::Other) cactus = false;
      if (!note.empty()) note += ",";
      note += std::string(to_string(c));
    }
    if (cactus) return {{std::move(g), std::nullopt}, note};
  }
  throw Error(ErrorCode::GenerationFailed, "no cactus intersection graph after " + std::to_string(p.retries) + " attempts");
}

GeneratedInstance gen_strip(const GeneratorParams& p) {
  const std::size_t h = std::max<std::size_t>(p.strips, 1);
  if (p.n_fixed < h) throw Error(ErrorCode::GenerationFailed, "need at least one fixed vertex per strip");
  Rng rng(p.seed);
  StripSet strips;
  for (std::size_t k = 0; k < h; ++k) {
    long c = -10 * static_cast<long>(k);
    strips.push_back({Rational(c + 1), Rational(c - 1)});
  }
  std::vector<std::size_t> xs = sample(rng, 4 * p.n_fixed, p.n_fixed);
  std::vector<std::size_t> strip_of(p.n_fixed);
  for (std::size_t i = 0; i < p.n_fixed; ++i) strip_of[i] = i < h ? i : draw(rng, h);
  std::vector<FixedVertex> fixed;
  std::vector<std::vector<std::size_t>> members(h);
  for (std::size_t i = 0; i < p.n_fixed; ++i) {
    long c = -10 * static_cast<long>(strip_of[i]);
    Rational y = Rational(c) + ratio(static_cast<long>(draw(rng, 5)) - 2, 2);
    fixed.push_back({fid(i), Point2(Rational(static_cast<long>(xs[i])), y)});
    members[strip_of[i]].push_back(i);
  }
  std::vector<std::string> mobile;
  std::vector<EdgeRef> edges;
  for (std::size_t m = 0; m < p.n_mobile; ++m) {
    mobile.push_back(mid(m));
    std::vector<std::size_t> nb;
    if (h >= 2 && draw(rng, 2) == 0) {
      std::size_t s = draw(rng, h - 1);
      const auto& up = members[s];
      const auto& down = members[s + 1];
      std::size_t du = 1 + draw(rng, std::min(up.size(), std::max<std::size_t>(1, p.max_degree / 2)));
      std::size_t dd = 1 + draw(rng, std::min(down.size(), std::max<std::size_t>(1, p.max_degree / 2)));
      for (std::size_t i : sample(rng, up.size(), du)) nb.push_back(up[i]);
      for (std::size_t i : sample(rng, down.size(), dd)) nb.push_back(down[i]);
    } else {
      std::size_t s = draw(rng, h);
      const auto& in = members[s];
      std::size_t d = 1 + draw(rng, std::min(in.size(), std::max<std::size_t>(1, p.max_degree)));
      for (std::size_t i : sample(rng, in.size(), d)) nb.push_back(in[i]);
    }
    for (std::size_t f : nb) edges.push_back({fid(f), mid(m)});
  }
  return {{FMBigraph(std::move(fixed), std::move(mobile), std::move(edges)), std::move(strips)}, "strip"};
}

}  // namespace

GeneratedInstance generate_random(GeneratorKind kind, const GeneratorParams& params) {
  switch (kind) {
    case GeneratorKind::Collinear: return gen_collinear(params);
    case GeneratorKind::ConvexHullCactus: return gen_cactus(params);
    case GeneratorKind::Strip: return gen_strip(params);
  }
  throw Error(ErrorCode::GenerationFailed, "unknown generator");
}

}  // namespace fmb
