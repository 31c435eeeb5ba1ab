#include "fmbend/planarity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fmbend/error.hpp"

namespace fmb {

std::size_t SimpleGraph::add_vertex() {
  adj_.emplace_back();
  return adj_.size() - 1;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw Error(ErrorCode::InvalidInput, "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const SimpleGraph& g) {
  BoostGraph bg(g.vertex_count());
  int index = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, ok] = boost::add_edge(u, v, bg);
    (void)ok;
    boost::put(boost::edge_index, bg, e, index++);
  }
  return bg;
}

std::size_t count_components(const SimpleGraph& g, std::size_t& isolated) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t comps = 0;
  isolated = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++comps;
    if (g.neighbors(s).empty()) ++isolated;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
  if (g.vertex_count() < 5) return true;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::size_t CombinatorialEmbedding::face_count() const {
  std::size_t nontrivial = components - isolated_vertices;
  // Each nontrivial component has its own outer face; in the plane they share one.
  std::size_t f = faces.size();
  if (nontrivial > 1) f -= nontrivial - 1;
  if (nontrivial == 0) f = 1;
  return f;
}

bool CombinatorialEmbedding::satisfies_euler(const SimpleGraph& g) const {
  long v = static_cast<long>(g.vertex_count());
  long e = static_cast<long>(g.edge_count());
  long f = static_cast<long>(face_count());
  long c = static_cast<long>(components);
  if (v == 0) return true;
  return v - e + f == 1 + c;
}

bool CombinatorialEmbedding::faces_consistent(const SimpleGraph& g) const {
  std::map<std::pair<std::size_t, std::size_t>, int> darts;
  for (const auto& face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      ++darts[{face[i], face[(i + 1) % face.size()]}];
    }
  }
  if (darts.size() != 2 * g.edge_count()) return false;
  for (auto [u, v] : g.edges()) {
    auto a = darts.find({u, v});
    auto b = darts.find({v, u});
    if (a == darts.end() || b == darts.end() || a->second != 1 || b->second != 1) return false;
  }
  return true;
}

std::size_t CombinatorialEmbedding::rotation_index(std::size_t v, std::size_t w) const {
  const auto& r = rotation[v];
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end()) throw Error(ErrorCode::InvalidInput, "not a neighbour in rotation");
  return static_cast<std::size_t>(it - r.begin());
}

CombinatorialEmbedding planar_embedding(const SimpleGraph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(g.vertex_count());
  bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                boost::boyer_myrvold_params::embedding = emb.data());
  if (!ok) throw Error(ErrorCode::NotPlanar, "graph is not planar");

  CombinatorialEmbedding out;
  out.rotation.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto& e : emb[v]) {
      std::size_t a = boost::source(e, bg), b = boost::target(e, bg);
      out.rotation[v].push_back(a == v ? b : a);
    }
  }
  out.components = count_components(g, out.isolated_vertices);

  // Face walk: after dart u->v take v->w with w following u around v.
  std::map<std::pair<std::size_t, std::size_t>, bool> used;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v : out.rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<std::size_t> face;
      std::size_t a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const auto& rot = out.rotation[b];
        std::size_t idx = out.rotation_index(b, a);
        std::size_t c = rot[(idx + 1) % rot.size()];
        a = b;
        b = c;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

struct Kuratowski {
  std::vector<Mask> adj;
  Mask alive = 0;
  Mask branch = 0;
  std::vector<std::pair<int, int>> pairs;

  bool route(std::size_t k, Mask used) {
    if (k == pairs.size()) return true;
    auto [s, t] = pairs[k];
    Mask free = alive & ~branch & ~used;
    if (adj[s] & (Mask{1} << t)) {
      if (route(k + 1, used)) return true;
    }
    return extend(k, s, t, 0, free, used);
  }

  bool extend(std::size_t k, int cur, int t, Mask path, Mask free, Mask used) {
    Mask next = adj[cur] & free & ~path;
    while (next) {
      int w = std::countr_zero(next);
      next &= next - 1;
      Mask p = path | (Mask{1} << w);
      if (adj[w] & (Mask{1} << t)) {
        if (route(k + 1, used | p)) return true;
      }
      if (extend(k, w, t, p, free, used)) return true;
    }
    return false;
  }
};

void subsets(const std::vector<int>& pool, std::size_t k, std::size_t start, std::vector<int>& cur,
             const auto& visit, bool& found) {
  if (found) return;
  if (cur.size() == k) {
    found = visit(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size() && !found; ++i) {
    cur.push_back(pool[i]);
    subsets(pool, k, i + 1, cur, visit, found);
    cur.pop_back();
  }
}

}  // namespace

bool oracle_is_planar(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  if (n > kOraclePlanarityLimit) {
    throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(kOraclePlanarityLimit) + " vertices");
  }
  Kuratowski K;
  K.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    K.adj[u] |= Mask{1} << v;
    K.adj[v] |= Mask{1} << u;
  }
  K.alive = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (std::size_t v = 0; v < n; ++v) {
      Mask bit = Mask{1} << v;
      if ((K.alive & bit) && std::popcount(K.adj[v] & K.alive) <= 1) {
        K.alive &= ~bit;
        peeled = true;
      }
    }
  }
  for (auto& a : K.adj) a &= K.alive;
  if (std::popcount(K.alive) < 5) return true;

  std::vector<int> deg3, deg4;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(K.alive & (Mask{1} << v))) continue;
    int d = std::popcount(K.adj[v]);
    if (d >= 3) deg3.push_back(static_cast<int>(v));
    if (d >= 4) deg4.push_back(static_cast<int>(v));
  }

  bool found = false;
  std::vector<int> cur;
  subsets(deg4, 5, 0, cur, [&](const std::vector<int>& b) {
    K.branch = 0;
    K.pairs.clear();
    for (int v : b) K.branch |= Mask{1} << v;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) K.pairs.emplace_back(b[i], b[j]);
    return K.route(0, 0);
  }, found);
  if (found) return false;

  subsets(deg3, 6, 0, cur, [&](const std::vector<int>& b) {
    K.branch = 0;
    for (int v : b) K.branch |= Mask{1} << v;
    // b[0] on side A; choose its two partners among the remaining five.
    for (int p = 1; p < 6; ++p) {
      for (int q = p + 1; q < 6; ++q) {
        std::vector<int> A{b[0], b[p], b[q]}, B;
        for (int i = 1; i < 6; ++i)
          if (i != p && i != q) B.push_back(b[i]);
        K.pairs.clear();
        for (int x : A)
          for (int y : B) K.pairs.emplace_back(x, y);
        if (K.route(0, 0)) return true;
      }
    }
    return false;
  }, found);
  return !found;
}

}  // namespace fmb
