#include "fmbend/convex_hull.hpp"

#include <functional>

#include "fmbend/error.hpp"

namespace fmb {

std::string_view to_string(HullVerdict v) {
  switch (v) {
    case HullVerdict::Drawable: return "drawable";
    case HullVerdict::NotDrawable: return "not_drawable";
    case HullVerdict::Unsupported: return "unsupported";
  }
  return "?";
}

namespace {

Drawing fixed_only(const FMBigraph& g) {
  Drawing d;
  for (const auto& f : g.fixed()) d.positions[f.id] = f.position;
  return d;
}

}  // namespace

ConvexHullSolution solve_convex_hull(const FMBigraph& g, std::uint64_t cap) {
  g.require_valid();
  ConvexHullSolution out;
  if (g.n_mobile() == 0) {
    out.verdict = HullVerdict::Drawable;
    out.skeleton = Skeleton{};
    out.drawing = fixed_only(g);
    return out;
  }
  out.gx = build_intersection_graph(g);
  out.gc = build_cell_graph(g, build_arrangement(g));
  for (std::size_t i = 0; i < out.gc.size(); ++i) out.cluster_sizes.push_back(out.gc.cell_count(i));
  SkeletonSolution sol = solve_skeleton(out.gc, out.gx, cap);
  out.components = sol.components;
  switch (sol.verdict) {
    case SkeletonVerdict::Exists: {
      out.verdict = HullVerdict::Drawable;
      out.skeleton = sol.skeleton;
      out.drawing = drawing_from_skeleton(g, out.gc, *sol.skeleton);
      ValidationOptions opts;
      opts.mode = DrawingMode::ConvexHull;
      auto report = validate_drawing(g, *out.drawing, opts);
      if (!report.planar) {
        throw Error(ErrorCode::InvariantError, "skeleton drawing rejected: " + report.violations.front().message);
      }
      break;
    }
    case SkeletonVerdict::None: out.verdict = HullVerdict::NotDrawable; break;
    case SkeletonVerdict::Unsupported: out.verdict = HullVerdict::Unsupported; break;
  }
  return out;
}

BruteForceHullResult brute_force_convex_hull(const FMBigraph& g, std::uint64_t cap) {
  g.require_valid();
  BruteForceHullResult out;
  if (g.n_mobile() == 0) {
    out.drawable = true;
    out.drawing = fixed_only(g);
    return out;
  }
  CellGraph cg = build_cell_graph(g, build_arrangement(g));
  std::uint64_t space = selection_space(cg);
  if (space > cap) {
    throw Error(ErrorCode::CapExceeded, "assignment space " + std::to_string(space) + " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = g.n_mobile();
  std::vector<std::vector<Point2>> ends(n);
  for (std::size_t m = 0; m < n; ++m) ends[m] = g.neighbor_points(m);
  std::vector<const Point2*> placed(n, nullptr);
  ValidationOptions opts;
  opts.mode = DrawingMode::ConvexHull;

  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      ++out.leaves_checked;
      Drawing d = fixed_only(g);
      for (std::size_t m = 0; m < n; ++m) d.positions[g.mobile()[m]] = *placed[m];
      for (const auto& e : g.edge_refs()) d.bends[e] = {};
      if (!validate_drawing(g, d, opts).planar) return false;
      out.drawable = true;
      out.drawing = std::move(d);
      return true;
    }
    for (const auto& cell : cg.clusters()[i].cells) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = stars_compatible(cell.representative, ends[i], *placed[j], ends[j]);
      if (!ok) continue;
      placed[i] = &cell.representative;
      if (go(i + 1)) return true;
    }
    return false;
  };
  go(0);
  return out;
}

}  // namespace fmb
