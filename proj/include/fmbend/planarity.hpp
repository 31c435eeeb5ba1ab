#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fmb {

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t add_vertex();
  // Throws Error(InvalidInput) on self-loops and parallel edges.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

struct CombinatorialEmbedding {
  // Cyclic order of neighbours around every vertex (one consistent orientation).
  std::vector<std::vector<std::size_t>> rotation;
  // Facial walks of every nontrivial component, as vertex sequences.
  std::vector<std::vector<std::size_t>> faces;
  std::size_t components = 0;
  std::size_t isolated_vertices = 0;

  // Faces of the whole drawing (outer faces of components merged).
  std::size_t face_count() const;
  // v - e + f == 1 + c
  bool satisfies_euler(const SimpleGraph& g) const;
  // Every directed edge appears in exactly one facial walk.
  bool faces_consistent(const SimpleGraph& g) const;
  // Position of w in rotation[v].
  std::size_t rotation_index(std::size_t v, std::size_t w) const;
};

bool is_planar(const SimpleGraph& g);

// Throws Error(NotPlanar).
CombinatorialEmbedding planar_embedding(const SimpleGraph& g);

inline constexpr std::size_t kOraclePlanarityLimit = 12;

// Exhaustive search for a subdivided K5 or K3,3 (Kuratowski). Independent of
// is_planar. Throws Error(TooLarge) above kOraclePlanarityLimit vertices.
bool oracle_is_planar(const SimpleGraph& g);

}  // namespace fmb
