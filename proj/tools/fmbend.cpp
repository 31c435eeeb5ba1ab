#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmbend/arrangement.hpp"
#include "fmbend/cell_graph.hpp"
#include "fmbend/collinear.hpp"
#include "fmbend/convex_hull.hpp"
#include "fmbend/error.hpp"
#include "fmbend/io.hpp"
#include "fmbend/planarity.hpp"
#include "fmbend/reductions.hpp"
#include "fmbend/skeleton.hpp"
#include "fmbend/strip.hpp"

using json = nlohmann::ordered_json;
using namespace fmb;

namespace {

enum Exit { kYes = 0, kNo = 1, kUnsupported = 2, kInputError = 3 };

struct Globals {
  std::string svg;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultBruteForceCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unsupported:
    case ErrorCode::CapExceeded:
    case ErrorCode::NotCollinear:
    case ErrorCode::TooLarge:
    case ErrorCode::DegenerateHull:
    case ErrorCode::NotAPath:
    case ErrorCode::NotACycle:
    case ErrorCode::NotACactus:
      return kUnsupported;
    case ErrorCode::Infeasible:
    case ErrorCode::InfeasibleForAllPartitions:
    case ErrorCode::NotPlanar:
      return kNo;
    default:
      return kInputError;
  }
}

// Output collects a JSON verdict; text mode prints it as key: value lines.
struct Output {
  const Globals& globals;
  json j = json::object();

  int finish(int code) {
    if (globals.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
    return code;
  }
};

json drawing_json(const Drawing& d) { return json::parse(serialize_drawing(d)); }

void maybe_svg(const Globals& globals, const FMBigraph& g, const Drawing& d, std::optional<StripSet> strips = {}) {
  if (globals.svg.empty()) return;
  SvgOptions opts;
  opts.strips = std::move(strips);
  write_file(globals.svg, render_svg(g, d, opts));
}

json sides_json(const FMBigraph& g, const std::vector<Side>& sides) {
  json j = json::object();
  for (std::size_t m = 0; m < sides.size(); ++m) j[g.mobile()[m]] = std::string(to_string(sides[m]));
  return j;
}

json strips_json(const StripSet& s) {
  json j = json::array();
  for (const auto& strip : s) j.push_back({{"y_top", format_rational(strip.y_top)}, {"y_bottom", format_rational(strip.y_bottom)}});
  return j;
}

json gaps_json(const FMBigraph& g, const StripDecision& dec) {
  json j = json::object();
  for (std::size_t m = 0; m < dec.gaps.size(); ++m) j[g.mobile()[m]] = dec.gaps[m];
  return j;
}

json violations_json(const ValidationReport& r) {
  json j = json::array();
  for (const auto& v : r.violations) {
    json e = {{"kind", std::string(to_string(v.kind))}, {"message", v.message}};
    if (v.first) e["first"] = edge_key(*v.first);
    if (v.second) e["second"] = edge_key(*v.second);
    if (v.witness) e["witness"] = to_string(*v.witness);
    j.push_back(std::move(e));
  }
  return j;
}

json skeleton_json(const CellGraph& cg, const Skeleton& s) {
  json j = json::object();
  for (const auto& [m, cell] : skeleton_selection(cg, s)) j[m] = cell;
  return j;
}

int cmd_validate(const Globals& gl, const std::string& path, const std::string& drawing_path, const std::string& mode,
                 std::optional<std::size_t> max_bends) {
  Output out{gl};
  Instance inst = parse_instance_unchecked(read_file(path));
  ValidationReport ir = validate_instance(inst.graph);
  out.j["command"] = "validate";
  if (drawing_path.empty() || !ir.planar) {
    out.j["valid"] = ir.planar;
    out.j["violations"] = violations_json(ir);
    return out.finish(ir.planar ? kYes : kNo);
  }
  Drawing d = parse_drawing(read_file(drawing_path));
  ValidationOptions opts;
  opts.max_bends = max_bends;
  if (mode == "strip") {
    if (!inst.strips) throw Error(ErrorCode::InvalidInput, "strip mode needs strips in the instance");
    opts.mode = DrawingMode::Strip;
    opts.strips = *inst.strips;
  } else if (mode == "convex-hull") {
    opts.mode = DrawingMode::ConvexHull;
  }
  ValidationReport r = validate_drawing(inst.graph, d, opts);
  out.j["mode"] = mode;
  out.j["planar"] = r.planar;
  out.j["violations"] = violations_json(r);
  maybe_svg(gl, inst.graph, d, inst.strips);
  return out.finish(r.planar ? kYes : kNo);
}

int cmd_collinear(const Globals& gl, const std::string& path) {
  Output out{gl};
  Instance inst = parse_instance(read_file(path));
  CollinearResult res = solve_collinear(inst.graph);
  out.j["command"] = "collinear";
  out.j["verdict"] = res.decision.drawable ? "drawable" : "not_drawable";
  if (res.decision.drawable) {
    out.j["sides"] = sides_json(inst.graph, res.decision.sides);
    out.j["drawing"] = drawing_json(*res.drawing);
    maybe_svg(gl, inst.graph, *res.drawing);
  }
  return out.finish(res.decision.drawable ? kYes : kNo);
}

int cmd_convex_hull(const Globals& gl, const std::string& path) {
  Output out{gl};
  Instance inst = parse_instance(read_file(path));
  ConvexHullSolution sol = solve_convex_hull(inst.graph, gl.cap);
  out.j["command"] = "convex-hull";
  out.j["verdict"] = std::string(to_string(sol.verdict));
  json comps = json::array();
  for (const auto& c : sol.components) {
    json names = json::array();
    for (std::size_t i : c.clusters) names.push_back(sol.gx.nodes[i]);
    comps.push_back({{"mobiles", names}, {"class", std::string(to_string(c.kind))}, {"method", c.method}});
  }
  out.j["components"] = comps;
  out.j["cluster_sizes"] = sol.cluster_sizes;
  if (sol.verdict == HullVerdict::Drawable) {
    out.j["skeleton"] = skeleton_json(sol.gc, *sol.skeleton);
    out.j["drawing"] = drawing_json(*sol.drawing);
    maybe_svg(gl, inst.graph, *sol.drawing);
  }
  switch (sol.verdict) {
    case HullVerdict::Drawable: return out.finish(kYes);
    case HullVerdict::NotDrawable: return out.finish(kNo);
    case HullVerdict::Unsupported: return out.finish(kUnsupported);
  }
  return out.finish(kUnsupported);
}

int cmd_strip(const Globals& gl, const std::string& path, std::size_t auto_h) {
  Output out{gl};
  Instance inst = parse_instance(read_file(path));
  out.j["command"] = "strip";
  StripResult res;
  if (auto_h > 0) {
    try {
      res = enumerate_strip_partitions(inst.graph, auto_h);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfeasibleForAllPartitions) throw;
      out.j["verdict"] = "not_drawable";
      out.j["reason"] = e.what();
      return out.finish(kNo);
    }
  } else {
    if (!inst.strips) throw Error(ErrorCode::InvalidInput, "instance has no strips; use --auto H");
    try {
      res = solve_strip(inst.graph, *inst.strips);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
      out.j["verdict"] = "not_drawable";
      out.j["reason"] = e.what();
      return out.finish(kNo);
    }
  }
  out.j["verdict"] = res.decision.drawable ? "drawable" : "not_drawable";
  out.j["strips"] = strips_json(res.strips);
  if (res.decision.drawable) {
    out.j["gaps"] = gaps_json(inst.graph, res.decision);
    out.j["construction_incomplete"] = res.construction_incomplete;
    if (res.construction_incomplete) out.j["problem"] = res.problem;
    if (res.drawing) {
      out.j["drawing"] = drawing_json(*res.drawing);
      maybe_svg(gl, inst.graph, *res.drawing, res.strips);
    }
  }
  return out.finish(res.decision.drawable ? kYes : kNo);
}

int cmd_skeleton(const Globals& gl, const std::string& path) {
  Output out{gl};
  Instance inst = parse_instance(read_file(path));
  IntersectionGraph gx = build_intersection_graph(inst.graph);
  CellGraph cg = build_cell_graph(inst.graph, build_arrangement(inst.graph));
  SkeletonSolution sol = solve_skeleton(cg, gx, gl.cap);
  out.j["command"] = "skeleton";
  out.j["cell_graph"] = json::parse(cell_graph_json(cg, gx));
  out.j["verdict"] = sol.verdict == SkeletonVerdict::Exists ? "exists" : sol.verdict == SkeletonVerdict::None ? "none" : "unsupported";
  if (sol.skeleton) out.j["skeleton"] = skeleton_json(cg, *sol.skeleton);
  return out.finish(sol.verdict == SkeletonVerdict::Exists ? kYes : sol.verdict == SkeletonVerdict::None ? kNo : kUnsupported);
}

int cmd_reduce_bpsewc(const Globals& gl, const std::string& path) {
  BpsewcInstance b = parse_bpsewc(read_file(path));
  Instance inst{bpsewc_to_fm(b), std::nullopt};
  std::string text = serialize_instance(inst);
  if (gl.format == "json") {
    std::cout << text;
  } else {
    std::cout << "fixed: " << inst.graph.n_fixed() << "\nmobile: " << inst.graph.n_mobile() << "\n" << text;
  }
  return kYes;
}

int cmd_reduce_sat(const Globals& gl, const std::string& path) {
  Output out{gl};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  SatInstance sat = parse_dimacs(in);
  SatReduction red = sat_to_skeleton(sat);
  out.j["command"] = "reduce sat";
  out.j["variables"] = sat.variables;
  out.j["clauses"] = sat.clauses.size();
  out.j["cell_graph"] = json::parse(cell_graph_json(red.gc, red.gx));
  std::optional<Skeleton> s = brute_force_skeleton(red.gc, red.gx, gl.cap);
  out.j["skeleton_exists"] = s.has_value();
  if (s) {
    std::vector<bool> a = skeleton_to_assignment(red, *s);
    json assignment = json::array();
    for (std::size_t v = 0; v < a.size(); ++v) assignment.push_back(a[v] ? static_cast<long>(v + 1) : -static_cast<long>(v + 1));
    out.j["assignment"] = assignment;
  }
  return out.finish(s ? kYes : kNo);
}

int cmd_gen(const Globals& gl, const std::string& kind_name, GeneratorParams params, const std::string& output) {
  auto kind = parse_generator_kind(kind_name);
  if (!kind) throw Error(ErrorCode::InvalidInput, "unknown generator kind '" + kind_name + "'");
  params.seed = gl.seed;
  GeneratedInstance gen = generate_random(*kind, params);
  std::string text = serialize_instance(gen.instance);
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
    std::cerr << "note: " << gen.note << "\n";
  }
  return kYes;
}

int cmd_oracle(const Globals& gl, const std::string& which, const std::string& path) {
  Output out{gl};
  Instance inst = parse_instance(read_file(path));
  const FMBigraph& g = inst.graph;
  out.j["command"] = "oracle " + which;
  if (which == "planarity") {
    SimpleGraph sg(g.n());
    for (const auto& e : g.edges()) sg.add_edge(e.fixed, g.n_fixed() + e.mobile);
    bool oracle = oracle_is_planar(sg);
    out.j["oracle_planar"] = oracle;
    out.j["engine_planar"] = is_planar(sg);
    return out.finish(oracle ? kYes : kNo);
  }
  if (which == "skeleton") {
    IntersectionGraph gx = build_intersection_graph(g);
    CellGraph cg = build_cell_graph(g, build_arrangement(g));
    std::optional<Skeleton> s = brute_force_skeleton(cg, gx, gl.cap);
    out.j["verdict"] = s ? "exists" : "none";
    if (s) out.j["skeleton"] = skeleton_json(cg, *s);
    return out.finish(s ? kYes : kNo);
  }
  if (which == "convex-hull") {
    BruteForceHullResult r = brute_force_convex_hull(g, gl.cap);
    out.j["verdict"] = r.drawable ? "drawable" : "not_drawable";
    out.j["assignments_checked"] = r.leaves_checked;
    if (r.drawing) {
      out.j["drawing"] = drawing_json(*r.drawing);
      maybe_svg(gl, g, *r.drawing);
    }
    return out.finish(r.drawable ? kYes : kNo);
  }
  if (which == "strip") {
    if (!inst.strips) throw Error(ErrorCode::InvalidInput, "instance has no strips");
    VertexClassification cls = classify_vertices(g, *inst.strips);
    AugmentedStripGraph aug = build_augmented_graph(g, *inst.strips, cls);
    bool oracle = oracle_is_planar(aug.graph);
    out.j["augmented_vertices"] = aug.graph.vertex_count();
    out.j["oracle_planar"] = oracle;
    out.j["decide_strip"] = decide_strip(g, *inst.strips).drawable;
    return out.finish(oracle ? kYes : kNo);
  }
  throw Error(ErrorCode::InvalidInput, "unknown oracle '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar k-bend drawings of fixed-mobile bigraphs"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--svg", gl.svg, "Write an SVG rendering of the drawing")->type_name("PATH");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--cap", gl.cap, "Brute-force enumeration cap");

  std::string input, drawing, mode = "generic", kind, output, which;
  std::size_t max_bends = 0, auto_h = 0;
  GeneratorParams params;

  auto* validate = app.add_subcommand("validate", "Validate an instance, and optionally a drawing of it");
  validate->add_option("instance", input)->required();
  validate->add_option("--drawing", drawing, "Drawing JSON to validate");
  validate->add_option("--mode", mode)->check(CLI::IsMember({"generic", "strip", "convex-hull"}));
  auto* bends_opt = validate->add_option("--max-bends", max_bends);

  auto* collinear = app.add_subcommand("collinear", "Decide and draw an instance with collinear fixed vertices");
  collinear->add_option("instance", input)->required();

  auto* hull = app.add_subcommand("convex-hull", "Decide and draw a 0-bend convex-hull drawing");
  hull->add_option("instance", input)->required();

  auto* strip = app.add_subcommand("strip", "Decide and draw a 1-bend drawing in horizontal strips");
  strip->add_option("instance", input)->required();
  strip->add_option("--auto", auto_h, "Search strip partitions with H strips")->type_name("H");

  auto* skeleton = app.add_subcommand("skeleton", "Dump the cell graph and solve for a skeleton");
  skeleton->add_option("instance", input)->required();

  auto* reduce = app.add_subcommand("reduce", "Run a reduction");
  reduce->require_subcommand(1);
  auto* bpsewc = reduce->add_subcommand("bpsewc", "Point-set embedding instance to fixed-mobile instance");
  bpsewc->add_option("file", input)->required();
  auto* sat = reduce->add_subcommand("sat", "DIMACS 3SAT formula to a clustered cell graph");
  sat->add_option("file", input)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", kind, "collinear, convex_hull_cactus or strip")->required();
  gen->add_option("--fixed", params.n_fixed);
  gen->add_option("--mobile", params.n_mobile);
  gen->add_option("--strips", params.strips);
  gen->add_option("--max-degree", params.max_degree);
  gen->add_option("--retries", params.retries);
  gen->add_option("-o,--output", output);

  auto* oracle = app.add_subcommand("oracle", "Run a brute-force oracle");
  oracle->add_option("which", which, "planarity, skeleton, convex-hull or strip")
      ->required()
      ->check(CLI::IsMember({"planarity", "skeleton", "convex-hull", "strip"}));
  oracle->add_option("instance", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) {
      return cmd_validate(gl, input, drawing, mode, bends_opt->count() ? std::optional<std::size_t>(max_bends) : std::nullopt);
    }
    if (*collinear) return cmd_collinear(gl, input);
    if (*hull) return cmd_convex_hull(gl, input);
    if (*strip) return cmd_strip(gl, input, auto_h);
    if (*skeleton) return cmd_skeleton(gl, input);
    if (*bpsewc) return cmd_reduce_bpsewc(gl, input);
    if (*sat) return cmd_reduce_sat(gl, input);
    if (*gen) return cmd_gen(gl, kind, params, output);
    if (*oracle) return cmd_oracle(gl, which, input);
  } catch (const Error& e) {
    int code = exit_for(e.code());
    if (gl.format == "json") {
      std::cout << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return code;
  }
  return kInputError;
}
