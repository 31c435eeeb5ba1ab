#include "fmbend/cell_graph.hpp"

#include <algorithm>
#include <set>

#include "fmbend/error.hpp"

namespace fmb {

IntersectionGraph::IntersectionGraph(std::vector<std::string> names)
    : nodes(std::move(names)), adjacency(nodes.size()) {}

void IntersectionGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || adjacent(u, v)) return;
  adjacency[u].insert(std::lower_bound(adjacency[u].begin(), adjacency[u].end(), v), v);
  adjacency[v].insert(std::lower_bound(adjacency[v].begin(), adjacency[v].end(), u), u);
}

bool IntersectionGraph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t d = 0;
  for (const auto& a : adjacency) d += a.size();
  return d / 2;
}

std::vector<std::vector<std::size_t>> IntersectionGraph::components() const {
  std::vector<char> seen(size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adjacency[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

CellGraph::CellGraph(std::vector<Cluster> clusters) : clusters_(std::move(clusters)) {}

void CellGraph::connect(std::size_t u, std::size_t a, std::size_t v, std::size_t b) {
  if (u == v) throw Error(ErrorCode::InvalidInput, "adjacency inside a cluster");
  if (u > v) {
    std::swap(u, v);
    std::swap(a, b);
  }
  auto& m = matrix_[{u, v}];
  if (m.empty()) m.assign(cell_count(u) * cell_count(v), 0);
  m[a * cell_count(v) + b] = 1;
}

bool CellGraph::adjacent(std::size_t u, std::size_t a, std::size_t v, std::size_t b) const {
  if (u > v) {
    std::swap(u, v);
    std::swap(a, b);
  }
  auto it = matrix_.find({u, v});
  if (it == matrix_.end()) return false;
  return it->second[a * cell_count(v) + b] != 0;
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
CellGraph::adjacency() const {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> out;
  for (const auto& [key, m] : matrix_) {
    auto [u, v] = key;
    for (std::size_t a = 0; a < cell_count(u); ++a)
      for (std::size_t b = 0; b < cell_count(v); ++b)
        if (m[a * cell_count(v) + b]) out.push_back({{u, a}, {v, b}});
  }
  return out;
}

std::size_t CellGraph::adjacency_count() const {
  std::size_t n = 0;
  for (const auto& [key, m] : matrix_) n += static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
  return n;
}

std::optional<std::size_t> CellGraph::cell_index(std::size_t cluster, const CellId& id) const {
  const auto& cells = clusters_[cluster].cells;
  auto it = std::lower_bound(cells.begin(), cells.end(), id,
                             [](const CellVertex& c, const CellId& key) { return c.id < key; });
  if (it == cells.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

std::map<std::string, CellId> skeleton_selection(const CellGraph& cg, const Skeleton& s) {
  std::map<std::string, CellId> out;
  for (std::size_t i = 0; i < cg.size(); ++i) out[cg.clusters()[i].mobile_id] = cg.clusters()[i].cells.at(s.cells.at(i)).id;
  return out;
}

Skeleton skeleton_from_selection(const CellGraph& cg, const std::map<std::string, CellId>& selection) {
  Skeleton s;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    const auto& name = cg.clusters()[i].mobile_id;
    auto it = selection.find(name);
    if (it == selection.end()) throw Error(ErrorCode::UnknownCell, "no cell selected for " + name);
    auto idx = cg.cell_index(i, it->second);
    if (!idx) throw Error(ErrorCode::UnknownCell, "cell " + it->second + " not in cluster " + name);
    s.cells.push_back(*idx);
  }
  return s;
}

namespace {

Hull checked_hull(const FMBigraph& g, std::size_t m) {
  const auto& name = g.mobile()[m];
  if (g.mobile_neighbors(m).size() <= 2) {
    throw Error(ErrorCode::DegenerateHull, name + " has degree " + std::to_string(g.mobile_neighbors(m).size()));
  }
  auto pts = g.neighbor_points(m);
  Hull h = convex_hull(pts);
  if (!h.full_dimensional()) throw Error(ErrorCode::DegenerateHull, name + " has collinear neighbours");
  return h;
}

}  // namespace

IntersectionGraph build_intersection_graph(const FMBigraph& g) {
  g.require_valid();
  std::vector<ConvexPolygon> hulls;
  for (std::size_t m = 0; m < g.n_mobile(); ++m) hulls.push_back(checked_hull(g, m).polygon());
  IntersectionGraph gx(g.mobile());
  for (std::size_t u = 0; u < hulls.size(); ++u)
    for (std::size_t v = u + 1; v < hulls.size(); ++v)
      if (polygons_intersect(hulls[u], hulls[v])) gx.add_edge(u, v);
  return gx;
}

std::vector<HullCells> decompose_hulls(const FMBigraph& g, const Arrangement& arr) {
  std::vector<HullCells> out;
  for (std::size_t m = 0; m < g.n_mobile(); ++m) out.push_back(decompose_hull(arr, checked_hull(g, m), g.mobile()[m]));
  return out;
}

Point2 default_representative(std::size_t cluster, const Cell& cell, bool shared) {
  if (!shared) return cell.representative;
  const Point2& c = cell.representative;
  Rational f(1, static_cast<unsigned long>(3 + cluster));
  return c + f * (cell.polygon.vertices.front() - c);
}

CellGraph build_cell_graph(const FMBigraph& g, const IntersectionGraph& gx, const std::vector<HullCells>& hulls,
                           const RepresentativeRule& rule) {
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < hulls.size(); ++i) {
    Cluster c{hulls[i].mobile_id, {}};
    for (const auto& cell : hulls[i].cells) c.cells.push_back({cell.id, rule(i, cell), cell.polygon});
    clusters.push_back(std::move(c));
  }
  CellGraph cg(std::move(clusters));
  for (auto [u, v] : gx.edges()) {
    auto nu = g.neighbor_points(u);
    auto nv = g.neighbor_points(v);
    for (std::size_t a = 0; a < cg.cell_count(u); ++a) {
      for (std::size_t b = 0; b < cg.cell_count(v); ++b) {
        const Point2& pa = cg.clusters()[u].cells[a].representative;
        const Point2& pb = cg.clusters()[v].cells[b].representative;
        if (stars_compatible(pa, nu, pb, nv)) cg.connect(u, a, v, b);
      }
    }
  }
  return cg;
}

CellGraph build_cell_graph(const FMBigraph& g, const Arrangement& arr) {
  IntersectionGraph gx = build_intersection_graph(g);
  auto hulls = decompose_hulls(g, arr);
  std::map<CellId, int> owners;
  for (const auto& h : hulls)
    for (const auto& c : h.cells) ++owners[c.id];
  return build_cell_graph(g, gx, hulls, [&](std::size_t i, const Cell& c) {
    return default_representative(i, c, owners[c.id] > 1);
  });
}

bool check_skeleton(const CellGraph& cg, const IntersectionGraph& gx, const Skeleton& s) {
  if (s.cells.size() != cg.size()) throw Error(ErrorCode::UnknownCell, "skeleton size does not match cluster count");
  for (std::size_t i = 0; i < cg.size(); ++i) {
    if (s.cells[i] >= cg.cell_count(i)) {
      throw Error(ErrorCode::UnknownCell, "cell index out of range in cluster " + cg.clusters()[i].mobile_id);
    }
  }
  for (auto [u, v] : gx.edges())
    if (!cg.adjacent(u, s.cells[u], v, s.cells[v])) return false;
  return true;
}

Drawing drawing_from_skeleton(const FMBigraph& g, const CellGraph& cg, const Skeleton& s) {
  Drawing d;
  for (const auto& f : g.fixed()) d.positions[f.id] = f.position;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    d.positions[cg.clusters()[i].mobile_id] = cg.clusters()[i].cells.at(s.cells.at(i)).representative;
  }
  for (const auto& e : g.edge_refs()) d.bends[e] = {};
  return d;
}

std::pair<CellGraph, IntersectionGraph> restrict_instance(const CellGraph& cg, const IntersectionGraph& gx,
                                                          const std::vector<std::size_t>& clusters) {
  std::vector<Cluster> sub;
  std::vector<std::string> names;
  for (std::size_t c : clusters) {
    sub.push_back(cg.clusters()[c]);
    names.push_back(gx.nodes[c]);
  }
  CellGraph rcg(std::move(sub));
  IntersectionGraph rgx(std::move(names));
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      std::size_t u = clusters[i], v = clusters[j];
      if (!gx.adjacent(u, v)) continue;
      rgx.add_edge(i, j);
      for (std::size_t a = 0; a < cg.cell_count(u); ++a)
        for (std::size_t b = 0; b < cg.cell_count(v); ++b)
          if (cg.adjacent(u, a, v, b)) rcg.connect(i, a, j, b);
    }
  }
  return {std::move(rcg), std::move(rgx)};
}

}  // namespace fmb
