#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fmbend/geometry.hpp"

namespace fmb {

struct FixedVertex {
  std::string id;
  Point2 position;
};

// Edges always name the fixed endpoint first.
struct EdgeRef {
  std::string fixed_id;
  std::string mobile_id;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string edge_key(const EdgeRef& e);  // "fixed_id:mobile_id"

enum class InstanceIssueKind {
  DuplicateFixedPosition,
  DuplicateId,
  DuplicateEdge,
  UnknownEndpoint,
  NonBipartiteEdge,
};

struct InstanceIssue {
  InstanceIssueKind kind;
  std::string message;
  std::vector<std::string> ids;
};

// A fixed-mobile bigraph: fixed vertices pinned to points, mobile vertices free.
// Construction never throws; structural problems are recorded and surfaced by
// validate_instance(). Solvers call require_valid().
class FMBigraph {
 public:
  struct Edge {
    std::size_t fixed;
    std::size_t mobile;
  };

  FMBigraph() = default;
  FMBigraph(std::vector<FixedVertex> fixed, std::vector<std::string> mobile, std::vector<EdgeRef> edges);

  const std::vector<FixedVertex>& fixed() const { return fixed_; }
  const std::vector<std::string>& mobile() const { return mobile_; }
  // Well-formed edges only, sorted by (fixed_id, mobile_id).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeRef>& edge_refs() const { return edge_refs_; }
  const std::vector<InstanceIssue>& issues() const { return issues_; }

  std::size_t n_fixed() const { return fixed_.size(); }
  std::size_t n_mobile() const { return mobile_.size(); }
  std::size_t n() const { return fixed_.size() + mobile_.size(); }

  std::optional<std::size_t> fixed_index(const std::string& id) const;
  std::optional<std::size_t> mobile_index(const std::string& id) const;

  // Fixed neighbor indices of a mobile vertex, ascending.
  const std::vector<std::size_t>& mobile_neighbors(std::size_t mobile) const { return mobile_adj_[mobile]; }
  const std::vector<std::size_t>& fixed_neighbors(std::size_t fixed) const { return fixed_adj_[fixed]; }
  std::vector<Point2> neighbor_points(std::size_t mobile) const;

  EdgeRef ref(const Edge& e) const { return {fixed_[e.fixed].id, mobile_[e.mobile]}; }

  void require_valid() const;

 private:
  std::vector<FixedVertex> fixed_;
  std::vector<std::string> mobile_;
  std::vector<Edge> edges_;
  std::vector<EdgeRef> edge_refs_;
  std::vector<InstanceIssue> issues_;
  std::unordered_map<std::string, std::size_t> fixed_by_id_;
  std::unordered_map<std::string, std::size_t> mobile_by_id_;
  std::vector<std::vector<std::size_t>> mobile_adj_;
  std::vector<std::vector<std::size_t>> fixed_adj_;
};

struct Drawing {
  std::map<std::string, Point2> positions;
  // Bend points ordered from the fixed endpoint towards the mobile endpoint.
  std::map<EdgeRef, std::vector<Point2>> bends;

  friend bool operator==(const Drawing&, const Drawing&) = default;
};

// Horizontal strip, closed: y_bottom <= y <= y_top.
struct Strip {
  Rational y_top;
  Rational y_bottom;
};

using StripSet = std::vector<Strip>;  // top to bottom

enum class ViolationKind {
  DuplicateFixedPosition,
  DuplicateId,
  DuplicateEdge,
  UnknownEndpoint,
  NonBipartiteEdge,
  FixedMoved,
  VertexCollision,
  TooManyBends,
  SelfIntersection,
  VertexOnEdge,
  Crossing,
  MobileNotFree,
  BendNotOnStripBoundary,
  SegmentNotFree,
  NotVertical,
  StripBoundaryTwice,
  HullContainment,
  InvalidStrips,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<EdgeRef> first;
  std::optional<EdgeRef> second;
  std::optional<Point2> witness;
  std::string message;
};

struct ValidationReport {
  bool planar = true;  // true iff violations is empty
  std::vector<Violation> violations;

  void add(Violation v) {
    violations.push_back(std::move(v));
    planar = false;
  }
};

ValidationReport validate_instance(const FMBigraph& g);

enum class DrawingMode { Generic, Strip, ConvexHull };

struct ValidationOptions {
  DrawingMode mode = DrawingMode::Generic;
  StripSet strips;                 // used in Strip mode
  std::optional<std::size_t> max_bends;
};

// Throws Error(MissingPosition) when a vertex has no coordinates.
ValidationReport validate_drawing(const FMBigraph& g, const Drawing& d, const ValidationOptions& options = {});

// Generic polyline crossing engine shared by validators of non-bipartite
// drawings (used by the BPSEWC back-mapping). Vertex ids index `positions`.
struct PolylineEdge {
  std::size_t u;
  std::size_t v;
  std::vector<Point2> bends;  // ordered from u to v
  std::string label;
};

struct PolylineCrossing {
  std::size_t first;
  std::size_t second;
  Point2 witness;
  ViolationKind kind;
};

std::vector<PolylineCrossing> find_polyline_crossings(std::span<const Point2> positions,
                                                      std::span<const PolylineEdge> edges);

// Pairwise star test used by the cell graph and brute-force searches:
// true iff the straight stars of a and b (to their fixed neighbours) are
// crossing-free in the validator's sense (touching only at shared fixed ends).
bool stars_compatible(const Point2& a, std::span<const Point2> a_ends, const Point2& b,
                      std::span<const Point2> b_ends);

}  // namespace fmb
