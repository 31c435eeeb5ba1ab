#include "fmbend/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fmbend/error.hpp"

namespace fmb {

void check_bpsewc(const BpsewcInstance& inst) {
  if (inst.points.size() != inst.vertices.size()) throw Error(ErrorCode::InvalidInput, "one point per vertex required");
  if (inst.bends % 2 == 0) throw Error(ErrorCode::InvalidInput, "bend budget must be odd");
  std::set<std::string> ids(inst.vertices.begin(), inst.vertices.end());
  if (ids.size() != inst.vertices.size()) throw Error(ErrorCode::InvalidInput, "duplicate vertex id");
  std::vector<Point2> pts = inst.points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw Error(ErrorCode::InvalidInput, "points must be distinct");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : inst.edges) {
    if (u >= inst.vertices.size() || v >= inst.vertices.size() || u == v) throw Error(ErrorCode::InvalidInput, "bad edge");
    if (!seen.insert(std::minmax(u, v)).second) throw Error(ErrorCode::InvalidInput, "parallel edge");
  }
}

std::string subdivision_id(const BpsewcInstance& inst, std::size_t e) {
  std::set<std::string> taken(inst.vertices.begin(), inst.vertices.end());
  std::string id;
  for (std::size_t i = 0; i <= e; ++i) {
    auto [u, v] = inst.edges[i];
    id = "w_" + inst.vertices[u] + "_" + inst.vertices[v];
    while (taken.count(id)) id += "_" + std::to_string(i);
    taken.insert(id);
  }
  return id;
}

FMBigraph bpsewc_to_fm(const BpsewcInstance& inst) {
  check_bpsewc(inst);
  std::vector<FixedVertex> fixed;
  for (std::size_t i = 0; i < inst.vertices.size(); ++i) fixed.push_back({inst.vertices[i], inst.points[i]});
  std::vector<std::string> mobile;
  std::vector<EdgeRef> edges;
  std::set<std::string> taken(inst.vertices.begin(), inst.vertices.end());
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    auto [u, v] = inst.edges[e];
    std::string id = "w_" + inst.vertices[u] + "_" + inst.vertices[v];
    while (taken.count(id)) id += "_" + std::to_string(e);
    taken.insert(id);
    mobile.push_back(id);
    edges.push_back({inst.vertices[u], id});
    edges.push_back({inst.vertices[v], id});
  }
  return FMBigraph(std::move(fixed), std::move(mobile), std::move(edges));
}

PolylineDrawing fm_drawing_to_bpsewc(const BpsewcInstance& inst, const Drawing& d, std::size_t k) {
  FMBigraph g = bpsewc_to_fm(inst);
  ValidationOptions opts;
  opts.max_bends = k;
  auto report = validate_drawing(g, d, opts);
  if (!report.planar) {
    throw Error(ErrorCode::InvalidInput, "drawing is not valid: " + report.violations.front().message);
  }
  PolylineDrawing out;
  out.positions = inst.points;
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    auto [u, v] = inst.edges[e];
    const std::string& w = g.mobile()[e];
    std::vector<Point2> poly;
    auto bu = d.bends.find({inst.vertices[u], w});
    if (bu != d.bends.end()) poly.insert(poly.end(), bu->second.begin(), bu->second.end());
    poly.push_back(d.positions.at(w));
    auto bv = d.bends.find({inst.vertices[v], w});
    if (bv != d.bends.end()) poly.insert(poly.end(), bv->second.rbegin(), bv->second.rend());
    out.bends.push_back(std::move(poly));
  }
  return out;
}

std::vector<PolylineCrossing> polyline_drawing_crossings(const BpsewcInstance& inst, const PolylineDrawing& d) {
  std::vector<PolylineEdge> edges;
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    auto [u, v] = inst.edges[e];
    edges.push_back({u, v, d.bends[e], inst.vertices[u] + "-" + inst.vertices[v]});
  }
  return find_polyline_crossings(d.positions, edges);
}

SatInstance parse_dimacs(std::istream& in) {
  SatInstance sat;
  std::string line;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<long> current;
  auto finish = [&]() {
    if (current.empty()) throw Error(ErrorCode::InvalidInput, "empty clause");
    if (current.size() > 3) throw Error(ErrorCode::InvalidInput, "clause with more than three literals");
    while (current.size() < 3) current.push_back(current.back());
    std::array<Literal, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) {
      long lit = current[i];
      std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var == 0 || var > sat.variables) throw Error(ErrorCode::ParseError, "literal out of range");
      c[i] = {var - 1, lit > 0};
    }
    sat.clauses.push_back(c);
    current.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> sat.variables >> declared_clauses) || fmt != "cnf") {
        throw Error(ErrorCode::ParseError, "bad DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::ParseError, "clause before header");
    std::istringstream rest(line);
    long lit;
    while (rest >> lit) {
      if (lit == 0) finish();
      else current.push_back(lit);
    }
    if (!rest.eof()) throw Error(ErrorCode::ParseError, "bad literal in: " + line);
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing DIMACS header");
  if (!current.empty()) finish();
  return sat;
}

bool satisfies(const SatInstance& sat, const std::vector<bool>& assignment) {
  return std::all_of(sat.clauses.begin(), sat.clauses.end(), [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment.at(l.variable) == l.positive; });
  });
}

SatReduction sat_to_skeleton(const SatInstance& sat) {
  SatReduction red;
  red.variables = sat.variables;
  std::vector<Cluster> clusters;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < sat.variables; ++x) {
    std::string name = "x" + std::to_string(x + 1);
    // '+' sorts before '-': cell 0 is the positive literal.
    clusters.push_back({name, {{"+", Point2(0, 0), std::nullopt}, {"-", Point2(0, 0), std::nullopt}}});
    names.push_back(name);
  }
  for (std::size_t c = 0; c < sat.clauses.size(); ++c) {
    std::string name = "c" + std::to_string(c + 1);
    Cluster cl{name, {}};
    for (std::size_t i = 0; i < 3; ++i) {
      const Literal& l = sat.clauses[c][i];
      cl.cells.push_back({std::to_string(i) + ":" + (l.positive ? "" : "~") + "x" + std::to_string(l.variable + 1),
                          Point2(0, 0), std::nullopt});
    }
    clusters.push_back(std::move(cl));
    names.push_back(name);
  }
  red.gc = CellGraph(std::move(clusters));
  red.gx = IntersectionGraph(std::move(names));
  for (std::size_t c = 0; c < sat.clauses.size(); ++c) {
    std::size_t node = sat.variables + c;
    const auto& clause = sat.clauses[c];
    for (const auto& l : clause) red.gx.add_edge(node, l.variable);
    for (std::size_t i = 0; i < 3; ++i) {
      const Literal& l = clause[i];
      red.gc.connect(node, i, l.variable, l.positive ? 0 : 1);
      for (const auto& other : clause) {
        if (other.variable == l.variable) continue;
        red.gc.connect(node, i, other.variable, 0);
        red.gc.connect(node, i, other.variable, 1);
      }
    }
  }
  return red;
}

std::vector<bool> skeleton_to_assignment(const SatReduction& red, const Skeleton& s) {
  bool ok = false;
  try {
    ok = check_skeleton(red.gc, red.gx, s);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) throw Error(ErrorCode::InvalidSkeleton, "selection is not a skeleton of the reduction");
  std::vector<bool> out(red.variables);
  for (std::size_t x = 0; x < red.variables; ++x) out[x] = s.cells[x] == 0;
  return out;
}

}  // namespace fmb
