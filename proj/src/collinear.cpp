#include "fmbend/collinear.hpp"

#include <algorithm>
#include <numeric>

#include "fmbend/error.hpp"
#include "placement.hpp"

namespace fmb {

std::string_view to_string(Side s) { return s == Side::Above ? "above" : "below"; }

CollinearityCertificate check_collinear(const FMBigraph& g) {
  g.require_valid();
  CollinearityCertificate cert;
  const auto& fixed = g.fixed();
  if (fixed.empty()) {
    cert.a = Point2(0, 0);
    cert.b = Point2(1, 0);
    return cert;
  }
  std::vector<std::size_t> idx(fixed.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return fixed[i].position < fixed[j].position; });
  cert.a = fixed[idx[0]].position;
  cert.b = idx.size() > 1 ? fixed[idx[1]].position : cert.a + Point2(1, 0);
  for (std::size_t i : idx) {
    if (orientation(cert.a, cert.b, fixed[i].position) != Orientation::Collinear) {
      throw Error(ErrorCode::NotCollinear, "fixed vertex " + fixed[i].id + " is off the line");
    }
  }
  Point2 d = cert.b - cert.a;
  Rational dd = dot(d, d);
  cert.t.resize(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i) cert.t[i] = dot(fixed[i].position - cert.a, d) / dd;
  cert.order = std::move(idx);
  return cert;
}

SimpleGraph augmented_collinear_graph(const FMBigraph& g, const CollinearityCertificate& cert) {
  const std::size_t nf = g.n_fixed();
  SimpleGraph h(g.n());
  for (const auto& e : g.edges()) h.add_edge(e.fixed, nf + e.mobile);
  const auto& o = cert.order;
  if (o.size() >= 3) {
    for (std::size_t i = 0; i < o.size(); ++i) h.add_edge(o[i], o[(i + 1) % o.size()]);
  } else if (o.size() == 2) {
    std::size_t d1 = h.add_vertex(), d2 = h.add_vertex();
    h.add_edge(o[0], o[1]);
    h.add_edge(o[1], d1);
    h.add_edge(d1, d2);
    h.add_edge(d2, o[0]);
  }
  return h;
}

CollinearDecision decide_collinear(const FMBigraph& g, const CollinearityCertificate& cert) {
  CollinearDecision out;
  SimpleGraph h = augmented_collinear_graph(g, cert);
  if (!is_planar(h)) return out;
  out.drawable = true;
  out.sides.assign(g.n_mobile(), Side::Above);
  const auto& o = cert.order;
  if (o.size() < 2) return out;
  CombinatorialEmbedding emb = planar_embedding(h);
  const std::size_t nf = g.n_fixed();
  // Cyclic successor/predecessor of each fixed vertex on the augmenting cycle.
  for (std::size_t i = 0; i < o.size(); ++i) {
    std::size_t v = o[i];
    std::size_t next, prev;
    if (o.size() >= 3) {
      next = o[(i + 1) % o.size()];
      prev = o[(i + o.size() - 1) % o.size()];
    } else {
      next = i == 0 ? o[1] : h.vertex_count() - 2;
      prev = i == 0 ? h.vertex_count() - 1 : o[0];
    }
    const auto& rot = emb.rotation[v];
    std::size_t k = emb.rotation_index(v, next);
    bool left = true;
    for (std::size_t step = 1; step < rot.size(); ++step) {
      std::size_t w = rot[(k + step) % rot.size()];
      if (w == prev) {
        left = false;
        continue;
      }
      if (w >= nf && w < nf + g.n_mobile()) out.sides[w - nf] = left ? Side::Above : Side::Below;
    }
  }
  for (std::size_t m = 0; m < g.n_mobile(); ++m) {
    if (g.mobile_neighbors(m).size() <= 1) out.sides[m] = Side::Above;
  }
  return out;
}

namespace {

struct Star {
  std::size_t mobile;
  std::vector<Rational> ts;  // sorted neighbour parameters
};

// Index of the inner gap of `outer` containing all of `inner`, if any.
std::optional<std::size_t> containing_gap(const Star& outer, const Star& inner) {
  for (std::size_t i = 0; i + 1 < outer.ts.size(); ++i) {
    if (outer.ts[i] <= inner.ts.front() && inner.ts.back() <= outer.ts[i + 1]) return i;
  }
  return std::nullopt;
}

// Height of the triangle (l,0), (r,0), apex at parameter x.
Rational gap_height(const Rational& l, const Rational& r, const Point2& apex, const Rational& x) {
  std::optional<Rational> u;
  if (apex.x > l) u = Rational(apex.y * (x - l) / (apex.x - l));
  if (apex.x < r) {
    Rational v = apex.y * (r - x) / (r - apex.x);
    if (!u || v < *u) u = v;
  }
  return *u;
}

}  // namespace

Drawing construct_collinear_drawing(const FMBigraph& g, const CollinearityCertificate& cert,
                                    const std::vector<Side>& sides) {
  const std::size_t nm = g.n_mobile();
  std::vector<std::optional<Point2>> local(nm);  // (t, h) coordinates
  for (Side side : {Side::Above, Side::Below}) {
    std::vector<Star> stars;
    for (std::size_t m = 0; m < nm; ++m) {
      if (sides[m] != side || g.mobile_neighbors(m).size() < 2) continue;
      Star s{m, {}};
      for (std::size_t f : g.mobile_neighbors(m)) s.ts.push_back(cert.t[f]);
      std::sort(s.ts.begin(), s.ts.end());
      stars.push_back(std::move(s));
    }
    const std::size_t k = stars.size();
    auto encloses = [&](std::size_t v, std::size_t w) {
      if (!containing_gap(stars[v], stars[w])) return false;
      return !containing_gap(stars[w], stars[v]) || v < w;
    };
    std::vector<std::size_t> depth(k, 0);
    std::vector<std::optional<std::size_t>> parent(k);
    for (std::size_t w = 0; w < k; ++w)
      for (std::size_t v = 0; v < k; ++v)
        if (v != w && encloses(v, w)) ++depth[w];
    for (std::size_t w = 0; w < k; ++w) {
      for (std::size_t v = 0; v < k; ++v) {
        if (v != w && encloses(v, w) && (!parent[w] || depth[v] > depth[*parent[w]])) parent[w] = v;
      }
    }
    std::vector<std::size_t> by_depth(k);
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
    std::vector<Point2> apex(k);
    for (std::size_t w : by_depth) {
      const Star& s = stars[w];
      Rational x = (s.ts.front() + s.ts.back()) / 2;
      if (!parent[w]) {
        apex[w] = Point2(x, Rational(1));
        continue;
      }
      const Star& p = stars[*parent[w]];
      std::size_t gi = *containing_gap(p, s);
      apex[w] = Point2(x, Rational(gap_height(p.ts[gi], p.ts[gi + 1], apex[*parent[w]], x) / 2));
    }
    for (std::size_t w = 0; w < k; ++w) {
      Point2 q = apex[w];
      if (side == Side::Below) q.y = -q.y;
      local[stars[w].mobile] = q;
    }
  }

  detail::SegmentSoup soup;
  for (const auto& t : cert.t) soup.points.push_back(Point2(t, Rational(0)));
  for (std::size_t m = 0; m < nm; ++m) {
    if (!local[m]) continue;
    soup.points.push_back(*local[m]);
    for (std::size_t f : g.mobile_neighbors(m)) soup.add(Point2(cert.t[f], Rational(0)), *local[m]);
  }
  for (std::size_t m = 0; m < nm; ++m) {
    const auto& nb = g.mobile_neighbors(m);
    if (local[m] || nb.empty()) continue;
    Point2 f(cert.t[nb[0]], Rational(0));
    Point2 up(0, sides[m] == Side::Above ? 1 : -1);
    Point2 dir = detail::free_direction(soup, f, Point2(1, 0), up);
    auto p = detail::place_leaf(soup, f, dir);
    if (!p) throw Error(ErrorCode::ConstructionFailed, "no free position for " + g.mobile()[m]);
    local[m] = *p;
    soup.add(f, *p);
    soup.points.push_back(*p);
  }
  // Isolated mobiles go to the right of everything drawn so far.
  Rational xmax(0);
  for (const auto& p : soup.points) xmax = std::max(xmax, p.x);
  for (std::size_t m = 0; m < nm; ++m) {
    if (local[m]) continue;
    xmax += 1;
    local[m] = Point2(xmax, Rational(1));
  }

  Point2 d = cert.b - cert.a;
  Point2 n(Rational(-d.y), d.x);
  Drawing out;
  for (const auto& fv : g.fixed()) out.positions[fv.id] = fv.position;
  for (std::size_t m = 0; m < nm; ++m) {
    out.positions[g.mobile()[m]] = cert.a + local[m]->x * d + local[m]->y * n;
  }
  for (const auto& e : g.edge_refs()) out.bends[e] = {};

  ValidationOptions opts;
  opts.max_bends = 0;
  auto report = validate_drawing(g, out, opts);
  if (!report.planar) {
    throw Error(ErrorCode::ConstructionFailed, "collinear construction rejected: " + report.violations.front().message);
  }
  return out;
}

CollinearResult solve_collinear(const FMBigraph& g) {
  CollinearResult r;
  r.certificate = check_collinear(g);
  r.decision = decide_collinear(g, r.certificate);
  if (r.decision.drawable) r.drawing = construct_collinear_drawing(g, r.certificate, r.decision.sides);
  return r;
}

}  // namespace fmb
