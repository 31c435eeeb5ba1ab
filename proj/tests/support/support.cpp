#include "support.hpp"

#include <algorithm>
#include <set>

namespace fmbtest {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + pick(rng, hi - lo + 1); }
bool chance(Rng& rng, unsigned percent) { return pick(rng, 100) < percent; }

std::vector<std::size_t> sample(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + pick(rng, n - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

SimpleGraph random_graph(Rng& rng, std::size_t n, unsigned edge_percent) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (chance(rng, edge_percent)) g.add_edge(u, v);
  return g;
}

SimpleGraph planarity_reduced(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<std::size_t>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (gone[u] || adj[u].size() > 2) continue;
      std::vector<std::size_t> nb(adj[u].begin(), adj[u].end());
      for (std::size_t w : nb) adj[w].erase(u);
      adj[u].clear();
      gone[u] = 1;
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      changed = true;
    }
  }
  std::vector<std::size_t> index(n, 0);
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u)
    if (!gone[u]) index[u] = k++;
  SimpleGraph out(k);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w : adj[u])
      if (!gone[u] && u < w) out.add_edge(index[u], index[w]);
  return out;
}

bool reduced_oracle_is_planar(const SimpleGraph& g) { return oracle_is_planar(planarity_reduced(g)); }

bool hull_matches_oracle(const std::vector<Point2>& input, const Hull& hull) {
  std::vector<Point2> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto inside_others = [&](std::size_t p) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
      if (a == p) continue;
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (b == p) continue;
        if (on_segment(pts[p], {pts[a], pts[b]})) return true;
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          if (c == p) continue;
          int o1 = static_cast<int>(orientation(pts[a], pts[b], pts[p]));
          int o2 = static_cast<int>(orientation(pts[b], pts[c], pts[p]));
          int o3 = static_cast<int>(orientation(pts[c], pts[a], pts[p]));
          if ((o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)) {
            if (orientation(pts[a], pts[b], pts[c]) != Orientation::Collinear) return true;
          }
        }
      }
    }
    return false;
  };
  std::vector<Point2> extreme;
  for (std::size_t p = 0; p < pts.size(); ++p)
    if (!inside_others(p)) extreme.push_back(pts[p]);
  std::vector<Point2> got = hull.vertices;
  std::sort(got.begin(), got.end());
  if (got != extreme) return false;
  if (hull.kind != HullKind::Polygon) return true;
  for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
    const Point2& a = hull.vertices[i];
    const Point2& b = hull.vertices[(i + 1) % hull.vertices.size()];
    for (const auto& p : pts)
      if (orientation(a, b, p) == Orientation::Right) return false;
  }
  return hull.vertices.front() == *std::min_element(hull.vertices.begin(), hull.vertices.end());
}

Point2 random_interior_point(Rng& rng, const ConvexPolygon& poly) {
  Rational sx(0), sy(0), total(0);
  for (const auto& v : poly.vertices) {
    Rational w(static_cast<long>(between(rng, 1, 1000)));
    sx += w * v.x;
    sy += w * v.y;
    total += w;
  }
  return Point2(Rational(sx / total), Rational(sy / total));
}

namespace {

// Neighbour parameters along the line, ascending.
std::vector<Rational> params(const FMBigraph& g, const CollinearityCertificate& cert, std::size_t m) {
  std::vector<Rational> t;
  for (std::size_t f : g.mobile_neighbors(m)) t.push_back(cert.t[f]);
  std::sort(t.begin(), t.end());
  return t;
}

bool in_single_gap(const std::vector<Rational>& w, const std::vector<Rational>& v) {
  if (v.size() <= 1) return true;
  bool outer = std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x <= v.front() || x >= v.back(); });
  if (outer) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    bool inner = std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x >= v[i] && x <= v[i + 1]; });
    if (inner) return true;
  }
  return false;
}

}  // namespace

bool side_assignment_feasible(const FMBigraph& g, const CollinearityCertificate& cert) {
  const std::size_t n = g.n_mobile();
  std::vector<std::vector<Rational>> t(n);
  for (std::size_t m = 0; m < n; ++m) t[m] = params(g, cert, m);
  std::vector<std::vector<char>> compatible(n, std::vector<char>(n, 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      compatible[a][b] = compatible[b][a] = in_single_gap(t[a], t[b]) || in_single_gap(t[b], t[a]);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if (((mask >> a) & 1) == ((mask >> b) & 1) && !compatible[a][b]) ok = false;
    if (ok) return true;
  }
  return false;
}

bool sat_oracle(const SatInstance& sat) {
  std::vector<bool> a(sat.variables);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sat.variables); ++mask) {
    for (std::size_t v = 0; v < sat.variables; ++v) a[v] = (mask >> v) & 1;
    if (satisfies(sat, a)) return true;
  }
  return false;
}

SatInstance random_sat(Rng& rng, std::size_t variables, std::size_t clauses) {
  SatInstance sat;
  sat.variables = variables;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::array<Literal, 3> clause;
    for (auto& l : clause) l = {pick(rng, variables), chance(rng, 50)};
    sat.clauses.push_back(clause);
  }
  return sat;
}

namespace {

std::string fid(std::size_t i) { return "f" + std::to_string(i); }
std::string mid(std::size_t i) { return "m" + std::to_string(i); }

}  // namespace

FMBigraph random_collinear(Rng& rng, std::size_t n_fixed, std::size_t n_mobile, std::size_t max_degree) {
  std::vector<std::size_t> xs = sample(rng, 3 * n_fixed + 3, n_fixed);
  // A random (rational) direction keeps the line non-axis-parallel sometimes.
  Point2 dir = chance(rng, 50) ? Point2(1, 0) : Point2(static_cast<long>(between(rng, 1, 3)), static_cast<long>(between(rng, 0, 3)) - 1);
  Point2 base(static_cast<long>(pick(rng, 5)), static_cast<long>(pick(rng, 5)));
  std::vector<FixedVertex> fixed;
  for (std::size_t i = 0; i < n_fixed; ++i) fixed.push_back({fid(i), base + Rational(static_cast<long>(xs[i])) * dir});
  std::shuffle(fixed.begin(), fixed.end(), rng);
  std::vector<std::string> mobile;
  std::vector<EdgeRef> edges;
  for (std::size_t m = 0; m < n_mobile; ++m) {
    mobile.push_back(mid(m));
    std::size_t top = std::min(max_degree, n_fixed);
    std::size_t deg = chance(rng, 15) ? between(rng, 0, std::min<std::size_t>(1, top)) : between(rng, std::min<std::size_t>(2, top), top);
    for (std::size_t f : sample(rng, n_fixed, deg)) edges.push_back({fixed[f].id, mid(m)});
  }
  return FMBigraph(std::move(fixed), std::move(mobile), std::move(edges));
}

FMBigraph random_convex_hull(Rng& rng, std::size_t n_fixed, std::size_t n_mobile, std::size_t max_degree) {
  const std::size_t grid = 7;
  for (;;) {
    std::vector<FixedVertex> fixed;
    for (std::size_t c : sample(rng, grid * grid, n_fixed)) {
      fixed.push_back({fid(fixed.size()), Point2(static_cast<long>(c % grid), static_cast<long>(c / grid))});
    }
    std::vector<std::string> mobile;
    std::vector<EdgeRef> edges;
    bool ok = true;
    for (std::size_t m = 0; m < n_mobile && ok; ++m) {
      mobile.push_back(mid(m));
      bool found = false;
      for (int t = 0; t < 40 && !found; ++t) {
        std::size_t deg = between(rng, 3, std::max<std::size_t>(3, std::min(max_degree, n_fixed)));
        auto nb = sample(rng, n_fixed, deg);
        std::vector<Point2> pts;
        for (std::size_t f : nb) pts.push_back(fixed[f].position);
        if (!convex_hull(pts).full_dimensional()) continue;
        for (std::size_t f : nb) edges.push_back({fixed[f].id, mid(m)});
        found = true;
      }
      ok = found;
    }
    if (ok) return FMBigraph(std::move(fixed), std::move(mobile), std::move(edges));
  }
}

namespace {

IntersectionGraph named(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  return IntersectionGraph(std::move(names));
}

// Random relabelling so solvers do not see a canonical order.
std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

IntersectionGraph random_path_gx(Rng& rng, std::size_t n) {
  IntersectionGraph gx = named(n);
  auto p = permutation(rng, n);
  for (std::size_t i = 0; i + 1 < n; ++i) gx.add_edge(p[i], p[i + 1]);
  return gx;
}

IntersectionGraph random_cycle_gx(Rng& rng, std::size_t n) {
  IntersectionGraph gx = named(n);
  auto p = permutation(rng, n);
  for (std::size_t i = 0; i < n; ++i) gx.add_edge(p[i], p[(i + 1) % n]);
  return gx;
}

IntersectionGraph random_cactus_gx(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t count = 1;
  while (count < n) {
    std::size_t root = pick(rng, count);
    std::size_t room = n - count;
    if (room >= 2 && chance(rng, 60)) {
      std::size_t len = between(rng, 3, std::min<std::size_t>(5, room + 1));
      std::size_t prev = root;
      for (std::size_t k = 1; k < len; ++k) {
        edges.emplace_back(prev, count);
        prev = count++;
      }
      edges.emplace_back(prev, root);
    } else {
      edges.emplace_back(root, count++);
    }
  }
  IntersectionGraph gx = named(n);
  auto p = permutation(rng, n);
  for (auto [u, v] : edges) gx.add_edge(p[u], p[v]);
  return gx;
}

CellGraph random_cell_graph(Rng& rng, const IntersectionGraph& gx, std::size_t max_cells, unsigned percent) {
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    Cluster c{gx.nodes[i], {}};
    std::size_t k = between(rng, 1, max_cells);
    for (std::size_t j = 0; j < k; ++j) c.cells.push_back({std::string(1, static_cast<char>('a' + j)), Point2(0, 0), std::nullopt});
    clusters.push_back(std::move(c));
  }
  CellGraph cg(std::move(clusters));
  for (auto [u, v] : gx.edges())
    for (std::size_t a = 0; a < cg.cell_count(u); ++a)
      for (std::size_t b = 0; b < cg.cell_count(v); ++b)
        if (chance(rng, percent)) cg.connect(u, a, v, b);
  return cg;
}

StripInstance random_strip_instance(Rng& rng, std::size_t h, std::size_t n_fixed, std::size_t n_mobile) {
  StripInstance out;
  for (std::size_t k = 0; k < h; ++k) {
    long c = -6 * static_cast<long>(k);
    out.strips.push_back({Rational(c + 2), Rational(c - 2)});
  }
  std::vector<std::size_t> xs = sample(rng, 3 * n_fixed + 2, n_fixed);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::vector<std::vector<std::size_t>> members(h);
  std::vector<FixedVertex> fixed;
  for (std::size_t i = 0; i < n_fixed; ++i) {
    std::size_t s = i < h ? i : pick(rng, h);
    long c = -6 * static_cast<long>(s);
    Rational y = Rational(c) + ratio(static_cast<long>(pick(rng, 9)) - 4, 2);
    fixed.push_back({fid(i), Point2(Rational(static_cast<long>(xs[i])), y)});
    members[s].push_back(i);
  }
  std::vector<std::string> mobile;
  std::vector<EdgeRef> edges;
  for (std::size_t m = 0; m < n_mobile; ++m) {
    mobile.push_back(mid(m));
    std::vector<std::size_t> nb;
    if (h >= 2 && chance(rng, 40)) {
      std::size_t s = pick(rng, h - 1);
      for (std::size_t part : {s, s + 1}) {
        const auto& in = members[part];
        for (std::size_t i : sample(rng, in.size(), between(rng, 1, std::min<std::size_t>(3, in.size())))) nb.push_back(in[i]);
      }
    } else {
      const auto& in = members[pick(rng, h)];
      std::size_t top = std::min<std::size_t>(4, in.size());
      std::size_t deg = chance(rng, 15) ? between(rng, 0, std::min<std::size_t>(1, top)) : between(rng, std::min<std::size_t>(2, top), top);
      for (std::size_t i : sample(rng, in.size(), deg)) nb.push_back(in[i]);
    }
    for (std::size_t f : nb) edges.push_back({fid(f), mid(m)});
  }
  out.graph = FMBigraph(std::move(fixed), std::move(mobile), std::move(edges));
  return out;
}

BpsewcInstance random_plane_bpsewc(Rng& rng, std::size_t n, std::size_t max_edges) {
  BpsewcInstance inst;
  const std::size_t grid = 12;
  for (std::size_t c : sample(rng, grid * grid, n)) {
    inst.vertices.push_back("v" + std::to_string(inst.vertices.size()));
    inst.points.emplace_back(static_cast<long>(c % grid), static_cast<long>(c / grid));
  }
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto [u, v] : candidates) {
    if (inst.edges.size() >= max_edges) break;
    Segment s{inst.points[u], inst.points[v]};
    bool ok = true;
    for (std::size_t w = 0; w < n && ok; ++w)
      if (w != u && w != v && on_segment(inst.points[w], s)) ok = false;
    for (auto [a, b] : inst.edges) {
      if (!ok) break;
      auto r = segments_intersect(s, {inst.points[a], inst.points[b]});
      if (r.relation == SegmentRelation::Disjoint) continue;
      if (r.relation == SegmentRelation::SharedEndpoint && (a == u || a == v || b == u || b == v)) continue;
      ok = false;
    }
    if (ok) inst.edges.emplace_back(u, v);
  }
  inst.bends = 1;
  return inst;
}

Drawing random_reduction_drawing(Rng& rng, const BpsewcInstance& inst, std::size_t k) {
  FMBigraph g = bpsewc_to_fm(inst);
  Drawing d;
  for (std::size_t i = 0; i < inst.vertices.size(); ++i) d.positions[inst.vertices[i]] = inst.points[i];
  ValidationOptions opts;
  opts.max_bends = k;
  // Start from the straight-line drawing (every w_e at its edge midpoint) and
  // accept random perturbations that keep the drawing planar.
  std::vector<Point2> base(inst.edges.size());
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    auto [u, v] = inst.edges[e];
    base[e] = Rational(1, 2) * (inst.points[u] + inst.points[v]);
    d.positions[subdivision_id(inst, e)] = base[e];
    if (k > 0) {
      d.bends[{inst.vertices[u], subdivision_id(inst, e)}] = {Rational(1, 2) * (inst.points[u] + base[e])};
      d.bends[{inst.vertices[v], subdivision_id(inst, e)}] = {Rational(1, 2) * (inst.points[v] + base[e])};
    }
  }
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    auto [u, v] = inst.edges[e];
    Point2 dir = inst.points[v] - inst.points[u];
    Point2 normal(Rational(-dir.y), dir.x);
    for (int attempt = 0; attempt < 6; ++attempt) {
      Rational scale = ratio(static_cast<long>(between(rng, 1, 9)) - 5, 20 * (1L << attempt));
      Drawing trial = d;
      Point2 w = base[e] + scale * normal;
      trial.positions[subdivision_id(inst, e)] = w;
      if (k > 0) {
        Rational s2 = ratio(static_cast<long>(between(rng, 1, 9)) - 5, 40 * (1L << attempt));
        trial.bends[{inst.vertices[u], subdivision_id(inst, e)}] = {Rational(1, 2) * (inst.points[u] + w) + s2 * normal};
        trial.bends[{inst.vertices[v], subdivision_id(inst, e)}] = {Rational(1, 2) * (inst.points[v] + w) - s2 * normal};
      }
      if (validate_drawing(g, trial, opts).planar) {
        d = std::move(trial);
        break;
      }
    }
  }
  return d;
}

FMBigraph make_graph(const std::vector<std::pair<std::string, Point2>>& fixed, const std::vector<std::string>& mobile,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<FixedVertex> f;
  for (const auto& [id, p] : fixed) f.push_back({id, p});
  std::vector<EdgeRef> e;
  for (const auto& [a, b] : edges) e.push_back({a, b});
  return FMBigraph(std::move(f), mobile, std::move(e));
}

}  // namespace fmbtest
