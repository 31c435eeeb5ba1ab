#include "placement.hpp"

#include <algorithm>

namespace fmb::detail {

bool SegmentSoup::point_free(const Point2& p) const {
  if (std::find(points.begin(), points.end(), p) != points.end()) return false;
  return std::none_of(segments.begin(), segments.end(), [&](const Segment& s) { return on_segment(p, s); });
}

bool SegmentSoup::segment_free(const Point2& from, const Point2& to) const {
  if (!point_free(to)) return false;
  for (const auto& s : segments) {
    auto r = segments_intersect({from, to}, s);
    if (r.relation == SegmentRelation::Disjoint) continue;
    if (r.relation == SegmentRelation::SharedEndpoint && r.witness && *r.witness == from) continue;
    return false;
  }
  for (const auto& p : points) {
    if (p != from && on_segment(p, {from, to})) return false;
  }
  return true;
}

Point2 free_direction(const SegmentSoup& soup, const Point2& f, const Point2& base, const Point2& normal) {
  int side = sign(cross(base, normal));
  std::optional<Point2> best;
  for (const auto& s : soup.segments) {
    Point2 u;
    if (s.a == f) u = s.b - f;
    else if (s.b == f) u = s.a - f;
    else continue;
    if (sign(cross(base, u)) != side) continue;
    if (!best || sign(cross(u, *best)) == side) best = u;
  }
  if (!best) return normal;
  return base + *best;
}

std::optional<Point2> place_leaf(const SegmentSoup& soup, const Point2& f, const Point2& dir, const Rational& scale,
                                 int attempts) {
  Rational eps = scale;
  for (int k = 0; k < attempts; ++k) {
    Point2 p = f + eps * dir;
    if (soup.segment_free(f, p)) return p;
    eps /= 2;
  }
  return std::nullopt;
}

}  // namespace fmb::detail
