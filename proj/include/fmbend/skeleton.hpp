#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fmbend/cell_graph.hpp"

namespace fmb {

enum class GxClass { Path, Cycle, Cactus, Tree, Other };

std::string_view to_string(GxClass c);

// Requires a connected graph (throws InvalidInput otherwise).
GxClass classify_intersection_graph(const IntersectionGraph& gx);

// Nodes of gx along the path, starting from the smaller-index endpoint. Throws NotAPath.
std::vector<std::size_t> path_order(const IntersectionGraph& gx);
// Cyclic order from node 0 towards its smaller neighbour. Throws NotACycle.
std::vector<std::size_t> cycle_order(const IntersectionGraph& gx);

// Per cluster, per cell: still alive.
using CellMask = std::vector<std::vector<char>>;

CellMask full_mask(const CellGraph& cg);

std::optional<Skeleton> solve_path(const CellGraph& cg, const IntersectionGraph& gx, const std::vector<std::size_t>& order);

struct CycleAnalysis {
  CellMask alive;  // surviving cells of every cluster on the cycle after all pruning
  bool feasible = false;
};

// Runs the propagation/pruning/confirmation phases on the clusters in `order`
// (a cycle of the cell graph's clusters) starting from `initial`.
CycleAnalysis analyze_cycle(const CellGraph& cg, const std::vector<std::size_t>& order, CellMask initial);

// Cells for every cluster of the cycle with the first cluster fixed to `first_cell`,
// chosen among analysis.alive. Returns nullopt if no closed selection exists.
std::optional<std::vector<std::size_t>> reconstruct_cycle(const CellGraph& cg, const std::vector<std::size_t>& order,
                                                          const CycleAnalysis& analysis, std::size_t first_cell);

std::optional<Skeleton> solve_cycle(const CellGraph& cg, const IntersectionGraph& gx,
                                    const std::vector<std::size_t>& cyclic_order);

struct CactusNode {
  bool is_cycle = false;
  std::vector<std::size_t> clusters;  // clusters[0] is the anchor; cycles in cyclic order
  std::optional<std::size_t> parent;
  std::size_t attach = 0;  // cluster of the parent node this node hangs from
  std::vector<std::size_t> children;

  std::size_t anchor() const { return clusters.front(); }
  bool coincident() const { return parent && attach == anchor(); }
};

struct CactusDecomposition {
  std::vector<CactusNode> nodes;
  std::size_t root = 0;
};

// Throws NotACactus. Requires a connected graph.
CactusDecomposition decompose_cactus(const IntersectionGraph& gx);

struct CactusTrace {
  std::vector<CellMask> node_alive;  // per node, per member position, per cell
  std::vector<std::vector<char>> active;  // per node, anchor activity
};

std::optional<Skeleton> solve_cactus(const CellGraph& cg, const IntersectionGraph& gx, CactusTrace* trace = nullptr);

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

// Product of cluster sizes, saturating at UINT64_MAX.
std::uint64_t selection_space(const CellGraph& cg);

// Throws CapExceeded when selection_space(cg) > cap.
std::optional<Skeleton> brute_force_skeleton(const CellGraph& cg, const IntersectionGraph& gx,
                                             std::uint64_t cap = kDefaultBruteForceCap);

// Visits every valid skeleton in lexicographic order until the visitor returns false.
void enumerate_skeletons(const CellGraph& cg, const IntersectionGraph& gx,
                         const std::function<bool(const Skeleton&)>& visit);

enum class SkeletonVerdict { Exists, None, Unsupported };

struct ComponentReport {
  std::vector<std::size_t> clusters;
  GxClass kind;
  std::string method;
};

struct SkeletonSolution {
  SkeletonVerdict verdict = SkeletonVerdict::None;
  std::optional<Skeleton> skeleton;
  std::vector<ComponentReport> components;
};

// Solves every connected component of gx with the matching algorithm and merges.
SkeletonSolution solve_skeleton(const CellGraph& cg, const IntersectionGraph& gx,
                                std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace fmb
