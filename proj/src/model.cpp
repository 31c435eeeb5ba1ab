#include "fmbend/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fmbend/error.hpp"

namespace fmb {

std::string edge_key(const EdgeRef& e) { return e.fixed_id + ":" + e.mobile_id; }

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateFixedPosition: return "duplicate fixed position";
    case ViolationKind::DuplicateId: return "duplicate id";
    case ViolationKind::DuplicateEdge: return "duplicate edge";
    case ViolationKind::UnknownEndpoint: return "unknown endpoint";
    case ViolationKind::NonBipartiteEdge: return "non-bipartite edge";
    case ViolationKind::FixedMoved: return "fixed vertex moved";
    case ViolationKind::VertexCollision: return "vertex collision";
    case ViolationKind::TooManyBends: return "too many bends";
    case ViolationKind::SelfIntersection: return "self intersection";
    case ViolationKind::VertexOnEdge: return "vertex on edge";
    case ViolationKind::Crossing: return "crossing";
    case ViolationKind::MobileNotFree: return "mobile not at free point";
    case ViolationKind::BendNotOnStripBoundary: return "bend not on strip boundary";
    case ViolationKind::SegmentNotFree: return "segment not free";
    case ViolationKind::NotVertical: return "inner segment not vertical";
    case ViolationKind::StripBoundaryTwice: return "edge meets strip boundary twice";
    case ViolationKind::HullContainment: return "mobile outside neighbour hull";
    case ViolationKind::InvalidStrips: return "invalid strips";
  }
  return "unknown";
}

FMBigraph::FMBigraph(std::vector<FixedVertex> fixed, std::vector<std::string> mobile, std::vector<EdgeRef> edges)
    : fixed_(std::move(fixed)), mobile_(std::move(mobile)) {
  for (auto& f : fixed_) {
    f.position.x.canonicalize();
    f.position.y.canonicalize();
  }
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    if (!fixed_by_id_.emplace(fixed_[i].id, i).second) {
      issues_.push_back({InstanceIssueKind::DuplicateId, "duplicate fixed id '" + fixed_[i].id + "'", {fixed_[i].id}});
    }
  }
  for (std::size_t i = 0; i < mobile_.size(); ++i) {
    if (fixed_by_id_.count(mobile_[i]) || !mobile_by_id_.emplace(mobile_[i], i).second) {
      issues_.push_back({InstanceIssueKind::DuplicateId, "duplicate mobile id '" + mobile_[i] + "'", {mobile_[i]}});
    }
  }
  {
    std::vector<std::size_t> order(fixed_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (fixed_[a].position != fixed_[b].position) return fixed_[a].position < fixed_[b].position;
      return a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto& a = fixed_[order[k - 1]];
      const auto& b = fixed_[order[k]];
      if (a.position == b.position) {
        issues_.push_back({InstanceIssueKind::DuplicateFixedPosition,
                           "fixed vertices '" + a.id + "' and '" + b.id + "' share position " + to_string(a.position),
                           {a.id, b.id}});
      }
    }
  }

  std::set<EdgeRef> seen;
  for (auto& e : edges) {
    auto f = fixed_by_id_.find(e.fixed_id);
    auto m = mobile_by_id_.find(e.mobile_id);
    if (f != fixed_by_id_.end() && m != mobile_by_id_.end()) {
      if (!seen.insert(e).second) {
        issues_.push_back({InstanceIssueKind::DuplicateEdge, "duplicate edge " + edge_key(e), {e.fixed_id, e.mobile_id}});
        continue;
      }
      continue;
    }
    bool fixed_is_mobile = mobile_by_id_.count(e.fixed_id) > 0;
    bool mobile_is_fixed = fixed_by_id_.count(e.mobile_id) > 0;
    if ((fixed_is_mobile || f != fixed_by_id_.end()) && (mobile_is_fixed || m != mobile_by_id_.end())) {
      issues_.push_back({InstanceIssueKind::NonBipartiteEdge, "edge " + edge_key(e) + " does not join a fixed and a mobile vertex",
                         {e.fixed_id, e.mobile_id}});
    } else {
      std::string missing = (f == fixed_by_id_.end() && !fixed_is_mobile) ? e.fixed_id : e.mobile_id;
      issues_.push_back({InstanceIssueKind::UnknownEndpoint, "edge " + edge_key(e) + " references unknown id '" + missing + "'",
                         {e.fixed_id, e.mobile_id}});
    }
  }
  edge_refs_.assign(seen.begin(), seen.end());
  mobile_adj_.assign(mobile_.size(), {});
  fixed_adj_.assign(fixed_.size(), {});
  for (const auto& e : edge_refs_) {
    Edge ix{fixed_by_id_.at(e.fixed_id), mobile_by_id_.at(e.mobile_id)};
    edges_.push_back(ix);
    mobile_adj_[ix.mobile].push_back(ix.fixed);
    fixed_adj_[ix.fixed].push_back(ix.mobile);
  }
  for (auto& a : mobile_adj_) std::sort(a.begin(), a.end());
  for (auto& a : fixed_adj_) std::sort(a.begin(), a.end());
}

std::optional<std::size_t> FMBigraph::fixed_index(const std::string& id) const {
  auto it = fixed_by_id_.find(id);
  if (it == fixed_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FMBigraph::mobile_index(const std::string& id) const {
  auto it = mobile_by_id_.find(id);
  if (it == mobile_by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<Point2> FMBigraph::neighbor_points(std::size_t mobile) const {
  std::vector<Point2> pts;
  for (auto f : mobile_adj_[mobile]) pts.push_back(fixed_[f].position);
  return pts;
}

void FMBigraph::require_valid() const {
  if (!issues_.empty()) throw Error(ErrorCode::InvariantError, issues_.front().message);
}

ValidationReport validate_instance(const FMBigraph& g) {
  ValidationReport report;
  for (const auto& issue : g.issues()) {
    ViolationKind kind = ViolationKind::UnknownEndpoint;
    switch (issue.kind) {
      case InstanceIssueKind::DuplicateFixedPosition: kind = ViolationKind::DuplicateFixedPosition; break;
      case InstanceIssueKind::DuplicateId: kind = ViolationKind::DuplicateId; break;
      case InstanceIssueKind::DuplicateEdge: kind = ViolationKind::DuplicateEdge; break;
      case InstanceIssueKind::UnknownEndpoint: kind = ViolationKind::UnknownEndpoint; break;
      case InstanceIssueKind::NonBipartiteEdge: kind = ViolationKind::NonBipartiteEdge; break;
    }
    report.add({kind, std::nullopt, std::nullopt, std::nullopt, issue.message});
  }
  return report;
}

namespace {

struct CoreEdge {
  std::size_t u;
  std::size_t v;
  std::vector<Point2> pts;  // u position, bends..., v position
};

// Returns true if a contact between segment s1 of e1 and s2 of e2 is permitted
// beyond the generic rule.
using ContactFilter =
    std::function<bool(std::size_t e1, std::size_t s1, std::size_t e2, std::size_t s2, const SegmentIntersection&)>;

using Reporter = std::function<void(ViolationKind, std::size_t e1, std::optional<std::size_t> e2, const Point2&)>;

void check_polylines(std::span<const Point2> positions, const std::vector<CoreEdge>& edges, const ContactFilter& extra,
                     const Reporter& report) {
  // Vertex points lying on edges other than at their own polyline end.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& pts = edges[e].pts;
    std::size_t nseg = pts.size() - 1;
    for (std::size_t w = 0; w < positions.size(); ++w) {
      for (std::size_t s = 0; s < nseg; ++s) {
        Segment seg{pts[s], pts[s + 1]};
        if (!on_segment(positions[w], seg)) continue;
        bool allowed = (w == edges[e].u && s == 0 && positions[w] == seg.a && !(positions[w] == seg.b)) ||
                       (w == edges[e].v && s + 1 == nseg && positions[w] == seg.b && !(positions[w] == seg.a));
        if (!allowed) {
          report(ViolationKind::VertexOnEdge, e, std::nullopt, positions[w]);
          goto next_edge;
        }
      }
    }
  next_edge:;
  }

  // Simplicity of each polyline.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& pts = edges[e].pts;
    std::size_t nseg = pts.size() - 1;
    bool bad = false;
    for (std::size_t i = 0; i < nseg && !bad; ++i) {
      for (std::size_t j = i + 1; j < nseg && !bad; ++j) {
        auto r = segments_intersect({pts[i], pts[i + 1]}, {pts[j], pts[j + 1]});
        if (r.relation == SegmentRelation::Disjoint) continue;
        if (j == i + 1 && r.relation == SegmentRelation::SharedEndpoint && *r.witness == pts[j]) continue;
        report(ViolationKind::SelfIntersection, e, std::nullopt, r.witness.value_or(pts[j]));
        bad = true;
      }
    }
  }

  // Pairwise edge crossings, one report per unordered pair.
  for (std::size_t e1 = 0; e1 < edges.size(); ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < edges.size(); ++e2) {
      const auto& A = edges[e1];
      const auto& B = edges[e2];
      bool crossed = false;
      for (std::size_t i = 0; i + 1 < A.pts.size() && !crossed; ++i) {
        for (std::size_t j = 0; j + 1 < B.pts.size() && !crossed; ++j) {
          auto r = segments_intersect({A.pts[i], A.pts[i + 1]}, {B.pts[j], B.pts[j + 1]});
          if (r.relation == SegmentRelation::Disjoint) continue;
          if (r.relation == SegmentRelation::SharedEndpoint) {
            bool common = false;
            for (std::size_t w : {A.u, A.v}) {
              if ((w == B.u || w == B.v) && positions[w] == *r.witness) common = true;
            }
            if (common) continue;
          }
          if (extra && extra(e1, i, e2, j, r)) continue;
          report(ViolationKind::Crossing, e1, e2, *r.witness);
          crossed = true;
        }
      }
    }
  }
}

bool in_closed_strip(const Point2& p, const Strip& s) { return p.y <= s.y_top && p.y >= s.y_bottom; }

// Strips must be ordered top to bottom, non-degenerate and pairwise separated.
std::optional<std::string> strips_problem(const FMBigraph& g, const StripSet& strips) {
  if (strips.empty()) return "no strips given";
  for (std::size_t i = 0; i < strips.size(); ++i) {
    if (!(strips[i].y_top > strips[i].y_bottom)) return "strip " + std::to_string(i + 1) + " has non-positive height";
    if (i + 1 < strips.size() && !(strips[i].y_bottom > strips[i + 1].y_top)) {
      return "strips " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " are not separated";
    }
  }
  for (const auto& f : g.fixed()) {
    int count = 0;
    for (const auto& s : strips) count += in_closed_strip(f.position, s) ? 1 : 0;
    if (count != 1) return "fixed vertex '" + f.id + "' is not inside exactly one strip";
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_drawing(const FMBigraph& g, const Drawing& d, const ValidationOptions& options) {
  ValidationReport report;
  const std::size_t nf = g.n_fixed();
  std::vector<Point2> positions;
  std::vector<std::string> names;
  positions.reserve(g.n());
  for (const auto& f : g.fixed()) {
    auto it = d.positions.find(f.id);
    if (it == d.positions.end()) throw Error(ErrorCode::MissingPosition, "fixed vertex '" + f.id + "'");
    if (it->second != f.position) {
      report.add({ViolationKind::FixedMoved, std::nullopt, std::nullopt, it->second,
                  "fixed vertex '" + f.id + "' drawn away from its prescribed point"});
    }
    positions.push_back(it->second);
    names.push_back(f.id);
  }
  for (const auto& m : g.mobile()) {
    auto it = d.positions.find(m);
    if (it == d.positions.end()) throw Error(ErrorCode::MissingPosition, "mobile vertex '" + m + "'");
    positions.push_back(it->second);
    names.push_back(m);
  }

  {
    std::vector<std::size_t> order(positions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (positions[a] != positions[b]) return positions[a] < positions[b];
      return a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (positions[order[k]] == positions[order[k - 1]]) {
        report.add({ViolationKind::VertexCollision, std::nullopt, std::nullopt, positions[order[k]],
                    "vertices '" + names[order[k - 1]] + "' and '" + names[order[k]] + "' coincide"});
      }
    }
  }

  const bool strip_mode = options.mode == DrawingMode::Strip;
  bool strips_ok = false;
  if (strip_mode) {
    if (auto problem = strips_problem(g, options.strips)) {
      report.add({ViolationKind::InvalidStrips, std::nullopt, std::nullopt, std::nullopt, *problem});
    } else {
      strips_ok = true;
    }
  }
  auto strip_of = [&](const Point2& p) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < options.strips.size(); ++i) {
      if (in_closed_strip(p, options.strips[i])) return i;
    }
    return std::nullopt;
  };

  std::vector<CoreEdge> core;
  std::vector<EdgeRef> refs;
  core.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    EdgeRef ref = g.ref(e);
    const std::vector<Point2>* bends = nullptr;
    if (auto it = d.bends.find(ref); it != d.bends.end()) bends = &it->second;
    std::size_t nb = bends ? bends->size() : 0;
    std::optional<std::size_t> limit = options.max_bends;
    if (options.mode == DrawingMode::ConvexHull) limit = 0;
    if (strip_mode && nb != 1) {
      report.add({ViolationKind::BendNotOnStripBoundary, ref, std::nullopt, std::nullopt,
                  "edge " + edge_key(ref) + " must have exactly one bend in the strip model"});
    } else if (limit && nb > *limit) {
      report.add({ViolationKind::TooManyBends, ref, std::nullopt, std::nullopt,
                  "edge " + edge_key(ref) + " has " + std::to_string(nb) + " bends"});
    }
    CoreEdge ce{e.fixed, nf + e.mobile, {}};
    ce.pts.push_back(positions[e.fixed]);
    if (bends) ce.pts.insert(ce.pts.end(), bends->begin(), bends->end());
    ce.pts.push_back(positions[nf + e.mobile]);
    if (strip_mode) {
      // A bend placed exactly on its fixed vertex makes the vertical part empty.
      ce.pts.erase(std::unique(ce.pts.begin(), ce.pts.end()), ce.pts.end());
      if (ce.pts.size() < 2) ce.pts.push_back(ce.pts.back());
    }
    refs.push_back(ref);
    core.push_back(std::move(ce));
  }

  if (strip_mode && strips_ok) {
    for (std::size_t m = 0; m < g.n_mobile(); ++m) {
      if (strip_of(positions[nf + m])) {
        report.add({ViolationKind::MobileNotFree, std::nullopt, std::nullopt, positions[nf + m],
                    "mobile vertex '" + g.mobile()[m] + "' lies inside a strip"});
      }
    }
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const auto& e = g.edges()[k];
      auto it = d.bends.find(refs[k]);
      if (it == d.bends.end() || it->second.size() != 1) continue;
      const Point2& u = positions[e.fixed];
      const Point2& p = it->second.front();
      const Point2& v = positions[nf + e.mobile];
      const Strip& s = options.strips[*strip_of(u)];
      if (p.y != s.y_top && p.y != s.y_bottom) {
        report.add({ViolationKind::BendNotOnStripBoundary, refs[k], std::nullopt, p,
                    "bend of " + edge_key(refs[k]) + " is not on the boundary of its fixed vertex's strip"});
        continue;
      }
      if (p.x != u.x) {
        report.add({ViolationKind::NotVertical, refs[k], std::nullopt, p,
                    "inner segment of " + edge_key(refs[k]) + " is not vertical"});
      }
      bool top = p.y == s.y_top;
      // The fixed endpoint belongs to its strip, so only the outer segment can
      // meet the strip boundary a second time.
      if (top ? v.y < s.y_bottom : v.y > s.y_top) {
        report.add({ViolationKind::StripBoundaryTwice, refs[k], std::nullopt, p,
                    "edge " + edge_key(refs[k]) + " meets both boundaries of its strip"});
        continue;
      }
      Rational lo = std::min(p.y, v.y), hi = std::max(p.y, v.y);
      bool free = top ? (v.y > s.y_top) : (v.y < s.y_bottom);
      for (const auto& other : options.strips) {
        if (&other == &s) continue;
        if (lo <= other.y_top && hi >= other.y_bottom) free = false;
      }
      if (!free) {
        report.add({ViolationKind::SegmentNotFree, refs[k], std::nullopt, p,
                    "outer segment of " + edge_key(refs[k]) + " enters a strip"});
      }
    }
  }

  ContactFilter extra;
  if (strip_mode) {
    extra = [&](std::size_t e1, std::size_t s1, std::size_t e2, std::size_t s2, const SegmentIntersection& r) {
      const auto& A = g.edges()[e1];
      const auto& B = g.edges()[e2];
      if (A.fixed != B.fixed) return false;
      auto ia = d.bends.find(refs[e1]);
      auto ib = d.bends.find(refs[e2]);
      if (ia == d.bends.end() || ib == d.bends.end() || ia->second.size() != 1 || ib->second.size() != 1) return false;
      const Point2& p = ia->second.front();
      if (p != ib->second.front()) return false;
      if (r.relation == SegmentRelation::SharedEndpoint) return *r.witness == p;
      if (r.relation == SegmentRelation::Overlap) {
        // Both must be the shared vertical piece between the fixed vertex and p.
        return s1 == 0 && s2 == 0 && core[e1].pts.size() == 3 && core[e2].pts.size() == 3;
      }
      return false;
    };
  }

  check_polylines(positions, core, extra,
                  [&](ViolationKind kind, std::size_t e1, std::optional<std::size_t> e2, const Point2& w) {
                    std::string msg = std::string(to_string(kind)) + " involving " + edge_key(refs[e1]);
                    if (e2) msg += " and " + edge_key(refs[*e2]);
                    msg += " at " + to_string(w);
                    report.add({kind, refs[e1], e2 ? std::optional<EdgeRef>(refs[*e2]) : std::nullopt, w, msg});
                  });

  if (options.mode == DrawingMode::ConvexHull) {
    for (std::size_t m = 0; m < g.n_mobile(); ++m) {
      auto pts = g.neighbor_points(m);
      if (pts.empty() || !hull_contains(convex_hull(pts), positions[nf + m])) {
        report.add({ViolationKind::HullContainment, std::nullopt, std::nullopt, positions[nf + m],
                    "mobile vertex '" + g.mobile()[m] + "' is not in the convex hull of its neighbours"});
      }
    }
  }
  return report;
}

std::vector<PolylineCrossing> find_polyline_crossings(std::span<const Point2> positions,
                                                      std::span<const PolylineEdge> edges) {
  std::vector<CoreEdge> core;
  for (const auto& e : edges) {
    CoreEdge ce{e.u, e.v, {}};
    ce.pts.push_back(positions[e.u]);
    ce.pts.insert(ce.pts.end(), e.bends.begin(), e.bends.end());
    ce.pts.push_back(positions[e.v]);
    core.push_back(std::move(ce));
  }
  std::vector<PolylineCrossing> out;
  check_polylines(positions, core, {},
                  [&](ViolationKind kind, std::size_t e1, std::optional<std::size_t> e2, const Point2& w) {
                    out.push_back({e1, e2.value_or(e1), w, kind});
                  });
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (positions[i] == positions[j]) out.push_back({i, j, positions[i], ViolationKind::VertexCollision});
    }
  }
  return out;
}

bool stars_compatible(const Point2& a, std::span<const Point2> a_ends, const Point2& b,
                      std::span<const Point2> b_ends) {
  if (a == b) return false;
  for (const auto& f : a_ends) {
    for (const auto& g : b_ends) {
      auto r = segments_intersect({a, f}, {b, g});
      if (r.relation == SegmentRelation::Disjoint) continue;
      if (f == g && r.relation == SegmentRelation::SharedEndpoint && *r.witness == f) continue;
      return false;
    }
  }
  return true;
}

}  // namespace fmb
