#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmbend/arrangement.hpp"
#include "fmbend/cell_graph.hpp"
#include "fmbend/skeleton.hpp"

namespace fmb {

enum class HullVerdict { Drawable, NotDrawable, Unsupported };

std::string_view to_string(HullVerdict v);

struct ConvexHullSolution {
  HullVerdict verdict = HullVerdict::NotDrawable;
  std::optional<Skeleton> skeleton;
  std::optional<Drawing> drawing;
  IntersectionGraph gx;
  CellGraph gc;
  std::vector<ComponentReport> components;
  std::vector<std::size_t> cluster_sizes;
};

// Throws DegenerateHull.
ConvexHullSolution solve_convex_hull(const FMBigraph& g, std::uint64_t cap = kDefaultBruteForceCap);

struct BruteForceHullResult {
  bool drawable = false;
  std::optional<Drawing> drawing;
  std::uint64_t leaves_checked = 0;
};

// Tries cell assignments at the cell graph's representatives, validating each
// complete placement. Throws CapExceeded when the assignment space exceeds cap.
BruteForceHullResult brute_force_convex_hull(const FMBigraph& g, std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace fmb
