#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <sstream>

#include "fmbend/collinear.hpp"
#include "fmbend/convex_hull.hpp"
#include "fmbend/error.hpp"
#include "fmbend/io.hpp"
#include "fmbend/planarity.hpp"
#include "fmbend/reductions.hpp"
#include "fmbend/strip.hpp"

namespace py = pybind11;
using json = nlohmann::ordered_json;
using namespace fmb;

namespace {

json drawing_json(const Drawing& d) { return json::parse(serialize_drawing(d)); }

json strips_json(const StripSet& strips) {
  json out = json::array();
  for (const auto& s : strips) out.push_back({{"y_top", format_rational(s.y_top)}, {"y_bottom", format_rational(s.y_bottom)}});
  return out;
}

json report_json(const ValidationReport& r) {
  json out = {{"valid", r.planar}, {"violations", json::array()}};
  for (const auto& v : r.violations) {
    json item = {{"kind", std::string(to_string(v.kind))}, {"message", v.message}};
    if (v.first) item["first"] = edge_key(*v.first);
    if (v.second) item["second"] = edge_key(*v.second);
    if (v.witness) item["witness"] = {format_rational(v.witness->x), format_rational(v.witness->y)};
    out["violations"].push_back(std::move(item));
  }
  return out;
}

DrawingMode mode_of(const std::string& name) {
  if (name == "generic") return DrawingMode::Generic;
  if (name == "strip") return DrawingMode::Strip;
  if (name == "convex-hull") return DrawingMode::ConvexHull;
  throw Error(ErrorCode::InvalidInput, "unknown mode '" + name + "'");
}

std::string validate_instance_json(const std::string& text) {
  return report_json(validate_instance(parse_instance_unchecked(text).graph)).dump();
}

std::string validate_drawing_json(const std::string& instance, const std::string& drawing, const std::string& mode,
                                  std::optional<std::size_t> max_bends) {
  Instance inst = parse_instance(instance);
  ValidationOptions opts;
  opts.mode = mode_of(mode);
  opts.max_bends = max_bends;
  if (inst.strips) opts.strips = *inst.strips;
  return report_json(validate_drawing(inst.graph, parse_drawing(drawing), opts)).dump();
}

std::string solve_collinear_json(const std::string& text) {
  Instance inst = parse_instance(text);
  CollinearResult r = solve_collinear(inst.graph);
  json out = {{"drawable", r.decision.drawable}};
  if (r.decision.drawable) {
    json sides = json::object();
    for (std::size_t m = 0; m < r.decision.sides.size(); ++m) sides[inst.graph.mobile()[m]] = std::string(to_string(r.decision.sides[m]));
    out["sides"] = sides;
  }
  if (r.drawing) out["drawing"] = drawing_json(*r.drawing);
  return out.dump();
}

std::string solve_convex_hull_json(const std::string& text, std::uint64_t cap) {
  Instance inst = parse_instance(text);
  ConvexHullSolution s = solve_convex_hull(inst.graph, cap);
  json out = {{"verdict", std::string(to_string(s.verdict))}, {"cluster_sizes", s.cluster_sizes}, {"components", json::array()}};
  for (const auto& c : s.components) {
    json mobiles = json::array();
    for (std::size_t i : c.clusters) mobiles.push_back(inst.graph.mobile()[i]);
    out["components"].push_back({{"mobiles", mobiles}, {"class", std::string(to_string(c.kind))}, {"method", c.method}});
  }
  if (s.skeleton && inst.graph.n_mobile() > 0) out["skeleton"] = skeleton_selection(s.gc, *s.skeleton);
  if (s.drawing) out["drawing"] = drawing_json(*s.drawing);
  return out.dump();
}

std::string solve_strip_json(const std::string& text, std::optional<std::size_t> h) {
  Instance inst = parse_instance(text);
  StripResult r;
  if (h) {
    try {
      r = enumerate_strip_partitions(inst.graph, *h);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfeasibleForAllPartitions) throw;
      return json{{"drawable", false}, {"reason", e.what()}}.dump();
    }
  } else {
    if (!inst.strips) throw Error(ErrorCode::InvalidInput, "instance has no strips; pass h");
    try {
      r = solve_strip(inst.graph, *inst.strips);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
      return json{{"drawable", false}, {"reason", e.what()}}.dump();
    }
  }
  json out = {{"drawable", r.decision.drawable}, {"strips", strips_json(r.strips)}};
  if (r.decision.drawable) {
    json gaps = json::object();
    for (std::size_t m = 0; m < r.decision.gaps.size(); ++m) gaps[inst.graph.mobile()[m]] = r.decision.gaps[m];
    out["gaps"] = gaps;
    out["construction_incomplete"] = r.construction_incomplete;
  }
  if (r.drawing) out["drawing"] = drawing_json(*r.drawing);
  return out.dump();
}

std::string reduce_bpsewc_json(const std::string& text) {
  return serialize_instance({bpsewc_to_fm(parse_bpsewc(text)), std::nullopt});
}

std::string reduce_sat_json(const std::string& dimacs, std::uint64_t cap) {
  std::istringstream in(dimacs);
  SatInstance sat = parse_dimacs(in);
  SatReduction red = sat_to_skeleton(sat);
  auto s = brute_force_skeleton(red.gc, red.gx, cap);
  json out = {{"variables", sat.variables}, {"clauses", sat.clauses.size()}, {"skeleton_exists", s.has_value()}};
  if (s) out["assignment"] = skeleton_to_assignment(red, *s);
  return out.dump();
}

std::string generate_json(const std::string& kind, std::uint64_t seed, std::size_t n_fixed, std::size_t n_mobile,
                          std::size_t strips, std::size_t max_degree) {
  auto k = parse_generator_kind(kind);
  if (!k) throw Error(ErrorCode::InvalidInput, "unknown generator kind '" + kind + "'");
  GeneratorParams p;
  p.seed = seed;
  p.n_fixed = n_fixed;
  p.n_mobile = n_mobile;
  p.strips = strips;
  p.max_degree = max_degree;
  return serialize_instance(generate_random(*k, p).instance);
}

std::string render_svg_text(const std::string& instance, const std::string& drawing) {
  Instance inst = parse_instance(instance);
  SvgOptions opts;
  opts.strips = inst.strips;
  return render_svg(inst.graph, parse_drawing(drawing), opts);
}

SimpleGraph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

PYBIND11_MODULE(_fmbend, m) {
  static py::exception<Error> error(m, "FmbendError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("validate_instance", &validate_instance_json, py::arg("instance"));
  m.def("validate_drawing", &validate_drawing_json, py::arg("instance"), py::arg("drawing"), py::arg("mode") = "generic",
        py::arg("max_bends") = py::none());
  m.def("solve_collinear", &solve_collinear_json, py::arg("instance"));
  m.def("solve_convex_hull", &solve_convex_hull_json, py::arg("instance"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("solve_strip", &solve_strip_json, py::arg("instance"), py::arg("h") = py::none());
  m.def("reduce_bpsewc", &reduce_bpsewc_json, py::arg("bpsewc"));
  m.def("reduce_sat", &reduce_sat_json, py::arg("dimacs"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("generate", &generate_json, py::arg("kind"), py::arg("seed") = 1, py::arg("n_fixed") = 5, py::arg("n_mobile") = 3,
        py::arg("strips") = 2, py::arg("max_degree") = 4);
  m.def("render_svg", &render_svg_text, py::arg("instance"), py::arg("drawing"));
  m.def("is_planar", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) { return is_planar(graph_of(n, edges)); },
        py::arg("n"), py::arg("edges"));
  m.def("oracle_is_planar", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) { return oracle_is_planar(graph_of(n, edges)); },
        py::arg("n"), py::arg("edges"));
}
