#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmbend/arrangement.hpp"
#include "fmbend/model.hpp"

namespace fmb {

// Intersection graph of the mobile hulls. Node i is the i-th mobile vertex.
struct IntersectionGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::size_t>> adjacency;  // ascending

  IntersectionGraph() = default;
  explicit IntersectionGraph(std::vector<std::string> names);

  std::size_t size() const { return nodes.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v, sorted
  std::size_t edge_count() const;
  std::vector<std::vector<std::size_t>> components() const;
};

struct CellVertex {
  CellId id;
  Point2 representative;
  std::optional<ConvexPolygon> polygon;
};

struct Cluster {
  std::string mobile_id;
  std::vector<CellVertex> cells;  // sorted by id
};

class CellGraph {
 public:
  CellGraph() = default;
  explicit CellGraph(std::vector<Cluster> clusters);

  const std::vector<Cluster>& clusters() const { return clusters_; }
  std::size_t size() const { return clusters_.size(); }
  std::size_t cell_count(std::size_t cluster) const { return clusters_[cluster].cells.size(); }

  void connect(std::size_t u, std::size_t a, std::size_t v, std::size_t b);
  bool adjacent(std::size_t u, std::size_t a, std::size_t v, std::size_t b) const;
  // ((u, a), (v, b)) with u < v.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> adjacency() const;
  std::size_t adjacency_count() const;

  std::optional<std::size_t> cell_index(std::size_t cluster, const CellId& id) const;

 private:
  std::vector<Cluster> clusters_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<char>> matrix_;
};

// One selected cell index per cluster.
struct Skeleton {
  std::vector<std::size_t> cells;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

std::map<std::string, CellId> skeleton_selection(const CellGraph& cg, const Skeleton& s);
// Throws Error(UnknownCell).
Skeleton skeleton_from_selection(const CellGraph& cg, const std::map<std::string, CellId>& selection);

// Throws Error(DegenerateHull) for mobiles of degree <= 2 or with collinear neighbours.
IntersectionGraph build_intersection_graph(const FMBigraph& g);

std::vector<HullCells> decompose_hulls(const FMBigraph& g, const Arrangement& arr);

CellGraph build_cell_graph(const FMBigraph& g, const Arrangement& arr);

// Representative chooser: (cluster index, cell) -> interior point.
using RepresentativeRule = std::function<Point2(std::size_t, const Cell&)>;
CellGraph build_cell_graph(const FMBigraph& g, const IntersectionGraph& gx, const std::vector<HullCells>& hulls,
                           const RepresentativeRule& rule);

// Default rule: centroid, or for cells shared by several clusters,
// centroid + (v0 - centroid) / (3 + cluster index).
Point2 default_representative(std::size_t cluster, const Cell& cell, bool shared);

// Throws Error(UnknownCell) if a selection is out of range.
bool check_skeleton(const CellGraph& cg, const IntersectionGraph& gx, const Skeleton& s);

Drawing drawing_from_skeleton(const FMBigraph& g, const CellGraph& cg, const Skeleton& s);

// Induced sub-instance on the given clusters (in the given order).
std::pair<CellGraph, IntersectionGraph> restrict_instance(const CellGraph& cg, const IntersectionGraph& gx,
                                                          const std::vector<std::size_t>& clusters);

}  // namespace fmb
