#include "fmbend/strip.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fmbend/error.hpp"
#include "placement.hpp"

namespace fmb {

namespace {

bool inside(const Point2& p, const Strip& s) { return p.y <= s.y_top && p.y >= s.y_bottom; }

void check_strips(const FMBigraph& g, const StripSet& strips) {
  if (strips.empty()) throw Error(ErrorCode::InvalidInput, "no strips given");
  for (std::size_t i = 0; i < strips.size(); ++i) {
    if (!(strips[i].y_top > strips[i].y_bottom)) {
      throw Error(ErrorCode::InvalidInput, "strip " + std::to_string(i + 1) + " has non-positive height");
    }
    if (i + 1 < strips.size() && !(strips[i].y_bottom > strips[i + 1].y_top)) {
      throw Error(ErrorCode::InvalidInput,
                  "strips " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " are not separated");
    }
  }
  for (const auto& f : g.fixed()) {
    auto n = std::count_if(strips.begin(), strips.end(), [&](const Strip& s) { return inside(f.position, s); });
    if (n != 1) throw Error(ErrorCode::InvalidInput, "fixed vertex '" + f.id + "' is not inside exactly one strip");
  }
}

}  // namespace

VertexClassification classify_vertices(const FMBigraph& g, const StripSet& strips) {
  g.require_valid();
  check_strips(g, strips);
  std::map<Rational, std::string> xs;
  for (const auto& f : g.fixed()) {
    auto [it, fresh] = xs.emplace(f.position.x, f.id);
    if (!fresh) throw Error(ErrorCode::DuplicateX, "fixed vertices '" + it->second + "' and '" + f.id + "' share an x-coordinate");
  }
  VertexClassification cls;
  for (const auto& f : g.fixed()) {
    for (std::size_t i = 0; i < strips.size(); ++i) {
      if (inside(f.position, strips[i])) cls.strip_of_fixed.push_back(i);
    }
  }
  for (std::size_t m = 0; m < g.n_mobile(); ++m) {
    std::set<std::size_t> used;
    for (std::size_t f : g.mobile_neighbors(m)) used.insert(cls.strip_of_fixed[f]);
    MobileClass mc;
    if (used.size() == 1) {
      mc = {VertexColor::White, *used.begin()};
    } else if (used.size() == 2 && *used.rbegin() == *used.begin() + 1) {
      mc = {VertexColor::Gray, *used.begin()};
    } else if (!used.empty()) {
      throw Error(ErrorCode::Infeasible, "mobile vertex '" + g.mobile()[m] + "' has neighbours in non-consecutive strips");
    }
    cls.mobiles.push_back(mc);
  }
  return cls;
}

AugmentedStripGraph build_augmented_graph(const FMBigraph& g, const StripSet& strips, const VertexClassification& cls) {
  AugmentedStripGraph a;
  const std::size_t nf = g.n_fixed(), h = strips.size();
  a.graph = SimpleGraph(g.n() + 3 * h);
  for (const auto& e : g.edges()) a.graph.add_edge(e.fixed, nf + e.mobile);
  a.strip_order.resize(h);
  for (std::size_t f = 0; f < nf; ++f) a.strip_order[cls.strip_of_fixed[f]].push_back(f);
  for (auto& order : a.strip_order) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t p, std::size_t q) { return g.fixed()[p].position.x < g.fixed()[q].position.x; });
  }
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t base = g.n() + 3 * i;
    a.dummies.push_back({base, base + 1, base + 2});
    std::vector<std::size_t> cyc = a.strip_order[i];
    cyc.insert(cyc.end(), {base + 2, base + 1, base});
    for (std::size_t k = 0; k < cyc.size(); ++k) a.graph.add_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
    a.cycles.push_back(std::move(cyc));
  }
  for (std::size_t i = 0; i + 1 < h; ++i)
    for (std::size_t j = 0; j < 3; ++j) a.graph.add_edge(a.dummies[i][j], a.dummies[i + 1][j]);
  return a;
}

namespace {

// Neighbours of cycle[k] off the cycle, with true when they lie between the
// outgoing and the incoming cycle edge in rotation order.
std::vector<std::pair<std::size_t, bool>> off_cycle_sides(const CombinatorialEmbedding& emb,
                                                          const std::vector<std::size_t>& cycle, std::size_t k) {
  std::size_t v = cycle[k];
  std::size_t next = cycle[(k + 1) % cycle.size()];
  std::size_t prev = cycle[(k + cycle.size() - 1) % cycle.size()];
  const auto& rot = emb.rotation[v];
  std::size_t start = emb.rotation_index(v, next);
  std::vector<std::pair<std::size_t, bool>> out;
  bool left = true;
  for (std::size_t step = 1; step < rot.size(); ++step) {
    std::size_t w = rot[(start + step) % rot.size()];
    if (w == prev) {
      left = false;
      continue;
    }
    out.emplace_back(w, left);
  }
  return out;
}

}  // namespace

StripDecision decide_strip(const FMBigraph& g, const StripSet& strips) {
  StripDecision d;
  d.classification = classify_vertices(g, strips);
  const auto& cls = d.classification;
  AugmentedStripGraph a = build_augmented_graph(g, strips, cls);
  if (!is_planar(a.graph)) return d;
  d.drawable = true;
  CombinatorialEmbedding emb = planar_embedding(a.graph);
  const std::size_t nf = g.n_fixed(), h = strips.size();
  d.gaps.assign(g.n_mobile(), 0);

  std::vector<std::optional<bool>> white_side(g.n_mobile());
  std::vector<bool> ladder_left(h, true);
  for (std::size_t i = 0; i < h; ++i) {
    const auto& cyc = a.cycles[i];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      for (auto [w, left] : off_cycle_sides(emb, cyc, k)) {
        if (w >= nf && w < nf + g.n_mobile()) {
          std::size_t m = w - nf;
          if (cls.mobiles[m].color == VertexColor::White && cls.mobiles[m].strip == i && !white_side[m]) white_side[m] = left;
        }
        if (cyc[k] == a.dummies[i][0]) {
          if (i + 1 < h && w == a.dummies[i + 1][0]) ladder_left[i] = left;
          if (i + 1 == h && i > 0 && w == a.dummies[i - 1][0]) ladder_left[i] = left;
        }
      }
    }
  }
  for (std::size_t m = 0; m < g.n_mobile(); ++m) {
    const auto& mc = cls.mobiles[m];
    switch (mc.color) {
      case VertexColor::Isolated: d.gaps[m] = 0; break;
      case VertexColor::Gray: d.gaps[m] = mc.strip + 1; break;
      case VertexColor::White: {
        bool left = white_side[m].value_or(true);
        std::size_t i = mc.strip;
        if (h == 1) {
          d.gaps[m] = left ? 0 : 1;
        } else if (i + 1 < h) {
          // Same side as the ladder towards the next strip means below strip i.
          d.gaps[m] = left == ladder_left[i] ? i + 1 : i;
        } else {
          d.gaps[m] = left == ladder_left[i] ? i : i + 1;
        }
        break;
      }
    }
  }
  return d;
}

namespace {

struct Attachment {
  Point2 p;     // bend point on the gap boundary
  bool upper;   // on the boundary above the gap
};

struct GapStar {
  std::size_t mobile;
  std::vector<Rational> up;    // attachment x on the upper line, sorted
  std::vector<Rational> down;  // attachment x on the lower line, sorted
};

std::optional<std::size_t> inner_gap(const std::vector<Rational>& outer, const std::vector<Rational>& inner) {
  for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
    if (outer[i] <= inner.front() && inner.back() <= outer[i + 1]) return i;
  }
  return std::nullopt;
}

Rational triangle_height(const Rational& l, const Rational& r, const Point2& apex, const Rational& x) {
  std::optional<Rational> u;
  if (apex.x > l) u = Rational(apex.y * (x - l) / (apex.x - l));
  if (apex.x < r) {
    Rational v = apex.y * (r - x) / (r - apex.x);
    if (!u || v < *u) u = v;
  }
  return *u;
}

bool star_free(const detail::SegmentSoup& soup, const Point2& apex, const std::vector<Point2>& ends) {
  if (!soup.point_free(apex)) return false;
  return std::all_of(ends.begin(), ends.end(), [&](const Point2& p) { return soup.segment_free(p, apex); });
}

void commit_star(detail::SegmentSoup& soup, const Point2& apex, const std::vector<Point2>& ends) {
  for (const auto& p : ends) soup.add(p, apex);
  soup.points.push_back(apex);
}

class GapBuilder {
 public:
  GapBuilder(const FMBigraph& g, const StripSet& strips, const StripDecision& dec, std::vector<std::optional<Point2>>& pos)
      : g_(g), strips_(strips), dec_(dec), pos_(pos) {}

  std::string problem;

  bool build(std::size_t gap) {
    const std::size_t h = strips_.size();
    has_up_ = gap >= 1;
    has_down_ = gap < h;
    if (has_up_) A_ = strips_[gap - 1].y_bottom;
    if (has_down_) B_ = strips_[gap].y_top;
    hmax_ = (has_up_ && has_down_) ? Rational((A_ - B_) / 3) : Rational(1);
    soup_ = {};

    std::vector<GapStar> stars;
    std::vector<std::size_t> leaves, isolated;
    for (std::size_t m = 0; m < g_.n_mobile(); ++m) {
      if (dec_.gaps[m] != gap) continue;
      const auto& nb = g_.mobile_neighbors(m);
      if (nb.empty()) {
        isolated.push_back(m);
        continue;
      }
      if (nb.size() == 1) {
        leaves.push_back(m);
        continue;
      }
      GapStar s{m, {}, {}};
      for (std::size_t f : nb) {
        bool upper = dec_.classification.strip_of_fixed[f] + 1 == gap;
        (upper ? s.up : s.down).push_back(g_.fixed()[f].position.x);
      }
      std::sort(s.up.begin(), s.up.end());
      std::sort(s.down.begin(), s.down.end());
      stars.push_back(std::move(s));
    }

    std::vector<std::size_t> grays;
    for (std::size_t k = 0; k < stars.size(); ++k)
      if (!stars[k].up.empty() && !stars[k].down.empty()) grays.push_back(k);
    if (!place_grays(stars, grays)) return false;
    if (has_up_ && !place_whites(stars, grays, true)) return false;
    if (has_down_ && !place_whites(stars, grays, false)) return false;

    for (std::size_t m : leaves) {
      std::size_t f = g_.mobile_neighbors(m)[0];
      bool upper = dec_.classification.strip_of_fixed[f] + 1 == gap;
      Point2 p(g_.fixed()[f].position.x, upper ? A_ : B_);
      Point2 normal(0, upper ? -1 : 1);
      Point2 dir = detail::free_direction(soup_, p, Point2(1, 0), normal);
      dir = Rational(1 / abs(dir.y)) * dir;
      auto q = detail::place_leaf(soup_, p, dir, hmax_);
      if (!q) return fail("no free position for '" + g_.mobile()[m] + "'");
      soup_.add(p, *q);
      soup_.points.push_back(*q);
      pos_[m] = *q;
    }

    Rational right(0);
    for (const auto& f : g_.fixed()) right = std::max(right, f.position.x);
    for (const auto& s : soup_.segments) right = std::max({right, s.a.x, s.b.x});
    long k = 2;
    Rational y = has_up_ && has_down_ ? Rational((A_ + B_) / 2) : has_down_ ? Rational(B_ + 1) : Rational(A_ - 1);
    for (std::size_t m : isolated) {
      Point2 q;
      do {
        q = Point2(Rational(right + k++), y);
      } while (!soup_.point_free(q));
      soup_.points.push_back(q);
      pos_[m] = q;
    }
    return true;
  }

 private:
  bool fail(std::string why) {
    problem = std::move(why);
    return false;
  }

  std::vector<Point2> ends(const GapStar& s) const {
    std::vector<Point2> out;
    for (const auto& x : s.up) out.emplace_back(x, A_);
    for (const auto& x : s.down) out.emplace_back(x, B_);
    return out;
  }

  bool place_grays(const std::vector<GapStar>& stars, const std::vector<std::size_t>& grays) {
    if (grays.empty()) return true;
    Rational ymid = (A_ + B_) / 2;
    std::vector<std::pair<Rational, std::size_t>> xs;
    for (std::size_t k : grays) {
      const auto& s = stars[k];
      xs.emplace_back(Rational((s.up.front() + s.up.back() + s.down.front() + s.down.back()) / 4), k);
    }
    std::sort(xs.begin(), xs.end());
    // Grays sharing an x are simple paths between the same two bends: spread them apart.
    for (std::size_t i = 0; i < xs.size();) {
      std::size_t j = i;
      while (j < xs.size() && xs[j].first == xs[i].first) ++j;
      std::size_t cnt = j - i;
      if (cnt > 1) {
        Rational room(1);
        if (i > 0) room = std::min(room, Rational(xs[i].first - xs[i - 1].first));
        if (j < xs.size()) room = std::min(room, Rational(xs[j].first - xs[i].first));
        Rational delta = room / static_cast<long>(2 * cnt + 2);
        Rational base = xs[i].first;
        for (std::size_t t = 0; t < cnt; ++t) {
          xs[i + t].first = base + delta * (2 * static_cast<long>(t) - static_cast<long>(cnt - 1)) / 2;
        }
      }
      i = j;
    }
    for (auto& [x, k] : xs) {
      Point2 apex(x, ymid);
      auto e = ends(stars[k]);
      if (!star_free(soup_, apex, e)) return fail("gray vertex '" + g_.mobile()[stars[k].mobile] + "' cannot be placed");
      commit_star(soup_, apex, e);
      gray_apex_[k] = apex;
      pos_[stars[k].mobile] = apex;
    }
    return true;
  }

  bool place_whites(const std::vector<GapStar>& stars, const std::vector<std::size_t>& grays, bool upper) {
    const Rational& y0 = upper ? A_ : B_;
    const int dir = upper ? -1 : 1;
    auto to_local = [&](const Point2& p) { return Point2(p.x, Rational(dir * (p.y - y0))); };
    auto to_global = [&](const Rational& x, const Rational& hh) { return Point2(x, Rational(y0 + dir * hh)); };
    auto line_of = [&](const GapStar& s) -> const std::vector<Rational>& { return upper ? s.up : s.down; };

    std::vector<std::size_t> whites;
    for (std::size_t k = 0; k < stars.size(); ++k) {
      const auto& s = stars[k];
      if ((upper ? s.down : s.up).empty() && !line_of(s).empty()) whites.push_back(k);
    }
    const std::size_t n = whites.size();
    auto encloses = [&](std::size_t v, std::size_t w) {
      const auto& a = line_of(stars[whites[v]]);
      const auto& b = line_of(stars[whites[w]]);
      if (!inner_gap(a, b)) return false;
      return !inner_gap(b, a) || v < w;
    };
    std::vector<std::size_t> depth(n, 0);
    std::vector<std::optional<std::size_t>> parent(n);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if (v != w && encloses(v, w)) ++depth[w];
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if (v != w && encloses(v, w) && (!parent[w] || depth[v] > depth[*parent[w]])) parent[w] = v;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });

    std::vector<Point2> apex(n);
    for (std::size_t w : order) {
      const GapStar& s = stars[whites[w]];
      const auto& ts = line_of(s);
      Rational x = (ts.front() + ts.back()) / 2;
      Rational hh = hmax_;
      if (parent[w]) {
        const auto& pts = line_of(stars[whites[*parent[w]]]);
        std::size_t gi = *inner_gap(pts, ts);
        hh = triangle_height(pts[gi], pts[gi + 1], to_local(apex[*parent[w]]), x) / 2;
      } else {
        for (std::size_t k : grays) {
          const auto& gts = line_of(stars[k]);
          if (auto gi = inner_gap(gts, ts)) {
            hh = triangle_height(gts[*gi], gts[*gi + 1], to_local(gray_apex_.at(k)), x) / 2;
            break;
          }
        }
      }
      auto e = ends(s);
      bool placed = false;
      for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
        Point2 q = to_global(x, hh);
        if (star_free(soup_, q, e)) {
          commit_star(soup_, q, e);
          apex[w] = q;
          pos_[s.mobile] = q;
          placed = true;
        }
        hh /= 2;
      }
      if (!placed) return fail("white vertex '" + g_.mobile()[s.mobile] + "' cannot be placed");
    }
    return true;
  }

  const FMBigraph& g_;
  const StripSet& strips_;
  const StripDecision& dec_;
  std::vector<std::optional<Point2>>& pos_;
  bool has_up_ = false, has_down_ = false;
  Rational A_, B_, hmax_;
  detail::SegmentSoup soup_;
  std::map<std::size_t, Point2> gray_apex_;
};

}  // namespace

StripConstruction construct_strip_drawing(const FMBigraph& g, const StripSet& strips, const StripDecision& decision) {
  StripConstruction out;
  if (!decision.drawable) {
    out.problem = "instance is not drawable";
    return out;
  }
  std::vector<std::optional<Point2>> pos(g.n_mobile());
  GapBuilder builder(g, strips, decision, pos);
  for (std::size_t gap = 0; gap <= strips.size(); ++gap) {
    if (!builder.build(gap)) {
      out.problem = builder.problem;
      return out;
    }
  }
  Drawing d;
  for (const auto& f : g.fixed()) d.positions[f.id] = f.position;
  for (std::size_t m = 0; m < g.n_mobile(); ++m) d.positions[g.mobile()[m]] = *pos[m];
  for (const auto& e : g.edges()) {
    std::size_t s = decision.classification.strip_of_fixed[e.fixed];
    bool above = decision.gaps[e.mobile] == s;
    const Point2& u = g.fixed()[e.fixed].position;
    d.bends[g.ref(e)] = {Point2(u.x, above ? strips[s].y_top : strips[s].y_bottom)};
  }
  ValidationOptions opts;
  opts.mode = DrawingMode::Strip;
  opts.strips = strips;
  auto report = validate_drawing(g, d, opts);
  if (!report.planar) {
    out.problem = "construction rejected by validator: " + report.violations.front().message;
    return out;
  }
  out.drawing = std::move(d);
  return out;
}

StripResult solve_strip(const FMBigraph& g, const StripSet& strips) {
  StripResult r;
  r.strips = strips;
  r.decision = decide_strip(g, strips);
  if (r.decision.drawable) {
    auto c = construct_strip_drawing(g, strips, r.decision);
    r.drawing = std::move(c.drawing);
    r.construction_incomplete = !r.drawing;
    r.problem = std::move(c.problem);
  }
  return r;
}

std::vector<StripSet> strip_partitions(const FMBigraph& g, std::size_t h) {
  std::vector<StripSet> out;
  if (h == 0) return out;
  std::set<Rational, std::greater<>> level_set;
  for (const auto& f : g.fixed()) level_set.insert(f.position.y);
  std::vector<Rational> levels(level_set.begin(), level_set.end());
  const std::size_t m = levels.size();
  if (m == 0) {
    if (h == 1) out.push_back({Strip{Rational(1), Rational(-1)}});
    return out;
  }
  if (h > m) return out;
  std::vector<std::size_t> cuts(h - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  while (true) {
    // Group k covers levels [start_k, start_{k+1}).
    std::vector<std::size_t> start{0};
    start.insert(start.end(), cuts.begin(), cuts.end());
    start.push_back(m);
    StripSet set;
    for (std::size_t k = 0; k < h; ++k) {
      const Rational& ymax = levels[start[k]];
      const Rational& ymin = levels[start[k + 1] - 1];
      Rational top = ymax + 1, bottom = ymin - 1;
      if (k > 0) {
        const Rational& above = levels[start[k] - 1];
        top = ymax + (above - ymax) / 4;
      }
      if (k + 1 < h) {
        const Rational& below = levels[start[k + 1]];
        bottom = ymin - (ymin - below) / 4;
      }
      set.push_back({top, bottom});
    }
    out.push_back(std::move(set));
    // Next combination of h-1 cut positions out of 1..m-1.
    std::size_t i = cuts.size();
    while (i > 0 && cuts[i - 1] == m - (cuts.size() - i) - 1) --i;
    if (i == 0) break;
    ++cuts[i - 1];
    for (std::size_t j = i; j < cuts.size(); ++j) cuts[j] = cuts[j - 1] + 1;
  }
  return out;
}

StripResult enumerate_strip_partitions(const FMBigraph& g, std::size_t h) {
  for (const auto& strips : strip_partitions(g, h)) {
    StripDecision d;
    try {
      d = decide_strip(g, strips);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Infeasible) continue;
      throw;
    }
    if (d.drawable) return solve_strip(g, strips);
  }
  throw Error(ErrorCode::InfeasibleForAllPartitions, "no partition into " + std::to_string(h) + " strips is feasible");
}

}  // namespace fmb
