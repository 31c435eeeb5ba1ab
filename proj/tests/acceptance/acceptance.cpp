#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fmbend/arrangement.hpp"
#include "fmbend/cell_graph.hpp"
#include "fmbend/collinear.hpp"
#include "fmbend/convex_hull.hpp"
#include "fmbend/error.hpp"
#include "fmbend/planarity.hpp"
#include "fmbend/reductions.hpp"
#include "fmbend/skeleton.hpp"
#include "fmbend/strip.hpp"
#include "support.hpp"

using namespace fmbtest;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message and counters.
struct Check {
  bool ok = true;
  std::string first;
  void fail(const std::string& why) {
    if (ok) first = why;
    ok = false;
  }
};

Outcome planarity_engine() {
  Rng rng(101);
  Check c;
  std::size_t planar = 0;
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = chance(rng, 85) ? between(rng, 5, 9) : between(rng, 1, 4);
    SimpleGraph g = random_graph(rng, n, static_cast<unsigned>(between(rng, 20, 95)));
    bool engine = is_planar(g);
    bool oracle = oracle_is_planar(g);
    if (engine != oracle) c.fail("graph " + std::to_string(i) + ": engine and oracle disagree");
    if (engine) {
      ++planar;
      CombinatorialEmbedding emb = planar_embedding(g);
      if (!emb.satisfies_euler(g) || !emb.faces_consistent(g)) c.fail("graph " + std::to_string(i) + ": bad embedding");
    }
  }
  return {c.ok, c.ok ? "2000/2000 agree (" + std::to_string(planar) + " planar)" : c.first};
}

Outcome collinear_decision() {
  Rng rng(202);
  Check c;
  std::size_t positive = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t nm = between(rng, 0, 8);
    std::size_t nf = between(rng, 1, std::min<std::size_t>(7, 12 - nm));
    if (nf == 2 && nf + nm + 2 > 12) nm = 8;
    if (nf == 2 && nf + nm + 2 > 12) nf = 3;
    FMBigraph g = random_collinear(rng, nf, nm, 5);
    CollinearityCertificate cert = check_collinear(g);
    bool decided = decide_collinear(g, cert).drawable;
    bool oracle = oracle_is_planar(augmented_collinear_graph(g, cert));
    bool sides = side_assignment_feasible(g, cert);
    std::string tag = "instance " + std::to_string(i);
    if (decided != oracle) c.fail(tag + ": differs from augmented-graph oracle");
    if (decided != sides) c.fail(tag + ": differs from side-assignment oracle");
    if (decided) {
      ++positive;
      try {
        CollinearResult res = solve_collinear(g);
        if (!res.drawing || !validate_drawing(g, *res.drawing).planar) c.fail(tag + ": drawing missing or not planar");
      } catch (const Error& e) {
        c.fail(tag + ": " + e.what());
      }
    }
  }
  return {c.ok, c.ok ? "300/300 agree, " + std::to_string(positive) + " drawings validated" : c.first};
}

Outcome cell_equivalence() {
  Rng rng(303);
  Check c;
  std::size_t adjacency_checks = 0, perturbations = 0;
  ValidationOptions hull_mode;
  hull_mode.mode = DrawingMode::ConvexHull;
  for (int i = 0; i < 100; ++i) {
    FMBigraph g = random_convex_hull(rng, between(rng, 4, 7), between(rng, 2, 4), 4);
    std::string tag = "instance " + std::to_string(i);
    Arrangement arr = build_arrangement(g);
    IntersectionGraph gx = build_intersection_graph(g);
    std::vector<HullCells> hulls = decompose_hulls(g, arr);
    CellGraph base = build_cell_graph(g, arr);
    auto expected = base.adjacency();
    for (int r = 0; r < 5; ++r) {
      Rng local(rng());
      CellGraph alt = build_cell_graph(g, gx, hulls, [&](std::size_t, const Cell& cell) {
        return random_interior_point(local, cell.polygon);
      });
      ++adjacency_checks;
      if (alt.adjacency() != expected) c.fail(tag + ": adjacency changed under alternative representatives");
    }
    std::vector<Skeleton> assignments;
    SkeletonSolution sol = solve_skeleton(base, gx);
    if (sol.skeleton) assignments.push_back(*sol.skeleton);
    Skeleton random_pick;
    for (std::size_t m = 0; m < base.size(); ++m) random_pick.cells.push_back(pick(rng, base.cell_count(m)));
    assignments.push_back(random_pick);
    for (const auto& s : assignments) {
      Drawing d = drawing_from_skeleton(g, base, s);
      bool verdict = validate_drawing(g, d, hull_mode).planar;
      for (std::size_t m = 0; m < g.n_mobile(); ++m) {
        const ConvexPolygon& cell = hulls[m].cells[s.cells[m]].polygon;
        for (int k = 0; k < 10; ++k) {
          Drawing p = d;
          p.positions[g.mobile()[m]] = random_interior_point(rng, cell);
          ++perturbations;
          if (validate_drawing(g, p, hull_mode).planar != verdict) c.fail(tag + ": perturbation flipped the verdict");
        }
      }
    }
  }
  return {c.ok, c.ok ? std::to_string(adjacency_checks) + " re-representations identical, " + std::to_string(perturbations) +
                           " perturbations stable"
                     : c.first};
}

Outcome skeleton_equivalence() {
  Rng rng(404);
  Check c;
  std::size_t done = 0, positive = 0, skipped = 0;
  ValidationOptions hull_mode;
  hull_mode.mode = DrawingMode::ConvexHull;
  while (done < 300) {
    FMBigraph g = random_convex_hull(rng, between(rng, 3, 7), between(rng, 1, 4), 4);
    IntersectionGraph gx = build_intersection_graph(g);
    CellGraph cg = build_cell_graph(g, build_arrangement(g));
    std::optional<Skeleton> s;
    BruteForceHullResult placement;
    try {
      s = brute_force_skeleton(cg, gx);
      placement = brute_force_convex_hull(g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      ++skipped;
      continue;
    }
    std::string tag = "instance " + std::to_string(done);
    ++done;
    if (s.has_value() != placement.drawable) c.fail(tag + ": placement and skeleton brute force disagree");
    if (placement.drawable && (!placement.drawing || !validate_drawing(g, *placement.drawing, hull_mode).planar)) {
      c.fail(tag + ": placement drawing not planar");
    }
    if (s) {
      ++positive;
      if (!validate_drawing(g, drawing_from_skeleton(g, cg, *s), hull_mode).planar) c.fail(tag + ": skeleton drawing not planar");
    }
  }
  return {c.ok, c.ok ? "300/300 agree (" + std::to_string(positive) + " drawable, " + std::to_string(skipped) +
                           " over cap resampled)"
                     : c.first};
}

Outcome specialized_solvers() {
  Rng rng(505);
  Check c;
  std::ostringstream summary;
  const char* names[] = {"path", "cycle", "cactus"};
  for (int kind = 0; kind < 3; ++kind) {
    std::size_t positive = 0;
    for (int i = 0; i < 1000; ++i) {
      IntersectionGraph gx;
      if (kind == 0) gx = random_path_gx(rng, between(rng, 2, 8));
      if (kind == 1) gx = random_cycle_gx(rng, between(rng, 3, 8));
      if (kind == 2) {
        do gx = random_cactus_gx(rng, between(rng, 5, 8));
        while (classify_intersection_graph(gx) != GxClass::Cactus);
      }
      CellGraph cg = random_cell_graph(rng, gx, 5, static_cast<unsigned>(between(rng, 25, 75)));
      std::optional<Skeleton> got;
      if (kind == 0) got = solve_path(cg, gx, path_order(gx));
      if (kind == 1) got = solve_cycle(cg, gx, cycle_order(gx));
      if (kind == 2) got = solve_cactus(cg, gx);
      bool expected = brute_force_skeleton(cg, gx).has_value();
      std::string tag = std::string(names[kind]) + " instance " + std::to_string(i);
      if (got.has_value() != expected) c.fail(tag + ": verdict differs from brute force");
      if (got && !check_skeleton(cg, gx, *got)) c.fail(tag + ": returned skeleton fails check");
      positive += got.has_value();
    }
    summary << (kind ? ", " : "") << names[kind] << " 1000/1000 (" << positive << " positive)";
  }
  return {c.ok, c.ok ? summary.str() : c.first};
}

Outcome sat_reduction() {
  Rng rng(606);
  Check c;
  std::size_t satisfiable = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = between(rng, 3, 10);
    std::size_t m = static_cast<std::size_t>(static_cast<double>(n) * (3.5 + static_cast<double>(pick(rng, 20)) / 10.0));
    SatInstance sat = random_sat(rng, n, m);
    SatReduction red = sat_to_skeleton(sat);
    std::optional<Skeleton> s = brute_force_skeleton(red.gc, red.gx, UINT64_MAX);
    bool sat_ok = sat_oracle(sat);
    std::string tag = "formula " + std::to_string(i);
    if (s.has_value() != sat_ok) c.fail(tag + ": skeleton existence differs from satisfiability");
    if (s && !satisfies(sat, skeleton_to_assignment(red, *s))) c.fail(tag + ": decoded assignment unsatisfying");
    satisfiable += sat_ok;
  }
  return {c.ok, c.ok ? "200/200 agree (" + std::to_string(satisfiable) + " satisfiable)" : c.first};
}

Outcome strip_decision() {
  Rng rng(707);
  Check c;
  std::size_t positive = 0, built = 0, incomplete = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t h = chance(rng, 50) ? 1 : 2;
    std::size_t nf = h == 1 ? (chance(rng, 80) ? between(rng, 3, 5) : between(rng, 1, 2)) : between(rng, 2, 4);
    std::size_t room = 12 - 3 * h - nf;
    std::size_t nm = chance(rng, 75) ? between(rng, room > 2 ? room - 2 : 0, room) : between(rng, 0, room);
    StripInstance si = random_strip_instance(rng, h, nf, nm);
    std::string tag = "instance " + std::to_string(i);
    VertexClassification cls = classify_vertices(si.graph, si.strips);
    AugmentedStripGraph aug = build_augmented_graph(si.graph, si.strips, cls);
    if (aug.graph.vertex_count() > 12) c.fail(tag + ": augmented graph too large for the oracle");
    StripDecision dec = decide_strip(si.graph, si.strips);
    if (dec.drawable != oracle_is_planar(aug.graph)) c.fail(tag + ": decision differs from oracle");
    if (!dec.drawable) continue;
    ++positive;
    for (std::size_t m = 0; m < si.graph.n_mobile(); ++m) {
      const MobileClass& mc = cls.mobiles[m];
      std::size_t gap = dec.gaps[m];
      if (mc.color == VertexColor::Gray && gap != mc.strip + 1) c.fail(tag + ": gray vertex outside its forced gap");
      if (mc.color == VertexColor::White && gap != mc.strip && gap != mc.strip + 1) c.fail(tag + ": white vertex in a far gap");
    }
    StripConstruction con = construct_strip_drawing(si.graph, si.strips, dec);
    if (!con.drawing) {
      ++incomplete;
      continue;
    }
    ++built;
    ValidationOptions opts;
    opts.mode = DrawingMode::Strip;
    opts.strips = si.strips;
    opts.max_bends = 1;
    if (!validate_drawing(si.graph, *con.drawing, opts).planar) c.fail(tag + ": construction fails strip validation");
  }
  return {c.ok, c.ok ? "500/500 agree (" + std::to_string(positive) + " positive, " + std::to_string(built) +
                           " constructions validated, " + std::to_string(incomplete) + " incomplete)"
                     : c.first};
}

FMBigraph splitting_instance(const std::vector<std::pair<long, long>>& xy, const std::vector<std::pair<int, int>>& edges,
                             std::size_t mobiles) {
  std::vector<std::pair<std::string, Point2>> fixed;
  for (std::size_t i = 0; i < xy.size(); ++i) fixed.push_back({"f" + std::to_string(i + 1), Point2(xy[i].first, xy[i].second)});
  std::vector<std::string> mobile;
  for (std::size_t m = 0; m < mobiles; ++m) mobile.push_back("m" + std::to_string(m + 1));
  std::vector<std::pair<std::string, std::string>> e;
  for (auto [f, m] : edges) e.push_back({"f" + std::to_string(f), "m" + std::to_string(m)});
  return make_graph(fixed, mobile, e);
}

// decide_strip verdict, cross-checked against the oracle on G' (after
// planarity-preserving reduction, since these instances exceed its size limit).
std::optional<bool> checked_verdict(const FMBigraph& g, const StripSet& s, Check& c, const std::string& tag) {
  VertexClassification cls = classify_vertices(g, s);
  bool oracle = reduced_oracle_is_planar(build_augmented_graph(g, s, cls).graph);
  bool decided = decide_strip(g, s).drawable;
  if (oracle != decided) c.fail(tag + ": decide_strip differs from oracle");
  return decided;
}

Outcome strip_splitting() {
  Check c;
  // Single strip: m3 reaches f4, which lies between neighbours of m1 and m4.
  FMBigraph a = splitting_instance({{4, 0}, {6, 1}, {1, 2}, {5, 3}},
                                   {{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {2, 4}, {3, 1}, {3, 3}, {3, 4}, {4, 3}}, 4);
  StripSet a1 = strip_partitions(a, 1).front();
  if (*checked_verdict(a, a1, c, "splitting (a), h=1")) c.fail("splitting (a) is feasible with one strip");
  StripResult a2 = enumerate_strip_partitions(a, 2);
  if (!*checked_verdict(a, a2.strips, c, "splitting (a), h=2")) c.fail("splitting (a) not feasible with two strips");
  if (a2.drawing) {
    ValidationOptions opts;
    opts.mode = DrawingMode::Strip;
    opts.strips = a2.strips;
    opts.max_bends = 1;
    if (!validate_drawing(a, *a2.drawing, opts).planar) c.fail("splitting (a): drawing invalid");
  }

  FMBigraph b = splitting_instance({{0, 0}, {2, 1}, {6, 2}, {1, 3}},
                                   {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 3}, {4, 2}, {4, 4}}, 4);
  StripSet b1 = strip_partitions(b, 1).front();
  if (!*checked_verdict(b, b1, c, "splitting (b), h=1")) c.fail("splitting (b) infeasible with one strip");
  // Split between the two middle y-levels: {f4, f3} above, {f2, f1} below.
  StripSet b2 = strip_partitions(b, 2).at(1);
  if (*checked_verdict(b, b2, c, "splitting (b), h=2")) c.fail("splitting (b) still feasible after the split");
  return {c.ok, c.ok ? "(a) h=1 infeasible, h=2 feasible; (b) h=1 feasible, split {f4,f3}|{f2,f1} infeasible" : c.first};
}

Outcome bpsewc_mapping() {
  Rng rng(909);
  Check c;
  std::size_t drawings = 0;
  for (std::size_t k : {0, 1}) {
    int count = k == 0 ? 100 : 50;
    for (int i = 0; i < count; ++i) {
      BpsewcInstance inst = random_plane_bpsewc(rng, between(rng, 3, 7), between(rng, 1, 9));
      FMBigraph g = bpsewc_to_fm(inst);
      Drawing d = random_reduction_drawing(rng, inst, k);
      std::string tag = "k=" + std::to_string(k) + " drawing " + std::to_string(i);
      ValidationOptions opts;
      opts.max_bends = k;
      if (!validate_drawing(g, d, opts).planar) {
        c.fail(tag + ": generated drawing invalid");
        continue;
      }
      PolylineDrawing back = fm_drawing_to_bpsewc(inst, d, k);
      ++drawings;
      for (std::size_t v = 0; v < inst.points.size(); ++v)
        if (back.positions[v] != inst.points[v]) c.fail(tag + ": vertex moved");
      for (const auto& bends : back.bends)
        if (bends.size() > 2 * k + 1) c.fail(tag + ": bend budget exceeded");
      if (!polyline_drawing_crossings(inst, back).empty()) c.fail(tag + ": mapped drawing has crossings");
    }
  }
  return {c.ok, c.ok ? std::to_string(drawings) + " drawings mapped (100 with k=0, 50 with k=1), budgets respected" : c.first};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  std::vector<Criterion> criteria = {
      {"planarity engine vs Kuratowski oracle", planarity_engine, 120},
      {"collinear decision vs oracles", collinear_decision, 0},
      {"cell equivalence", cell_equivalence, 0},
      {"placement vs skeleton brute force", skeleton_equivalence, 0},
      {"path/cycle/cactus solvers vs brute force", specialized_solvers, 0},
      {"3SAT reduction", sat_reduction, 300},
      {"strip decision vs oracle on G'", strip_decision, 0},
      {"strip splitting phenomena", strip_splitting, 0},
      {"point-set embedding mapping", bpsewc_mapping, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && seconds > criteria[i].limit_seconds) {
      out.pass = false;
      out.detail += " (over time limit)";
    }
    failures += !out.pass;
    std::printf("criterion %zu %s: %s: %s [%.1fs]\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].name,
                out.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
