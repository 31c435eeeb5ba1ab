#include "fmbend/geometry.hpp"

#include <algorithm>

namespace fmb {

Point2 operator+(const Point2& a, const Point2& b) { return Point2(Rational(a.x + b.x), Rational(a.y + b.y)); }
Point2 operator-(const Point2& a, const Point2& b) { return Point2(Rational(a.x - b.x), Rational(a.y - b.y)); }
Point2 operator*(const Rational& s, const Point2& p) { return Point2(Rational(s * p.x), Rational(s * p.y)); }

Rational cross(const Point2& u, const Point2& v) { return Rational(u.x * v.y - u.y * v.x); }
Rational dot(const Point2& u, const Point2& v) { return Rational(u.x * v.x + u.y * v.y); }

std::string to_string(const Point2& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  int s = sgn(det);
  if (s > 0) return Orientation::Left;
  if (s < 0) return Orientation::Right;
  return Orientation::Collinear;
}

Point2 line_intersection(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  Point2 r = p2 - p1;
  Point2 s = q2 - q1;
  Rational denom = cross(r, s);
  Rational t = cross(q1 - p1, s) / denom;
  return p1 + t * r;
}

bool on_segment(const Point2& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
  const Point2& lo = std::min(s.a, s.b);
  const Point2& hi = std::max(s.a, s.b);
  return !(p < lo) && !(hi < p);
}

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
  const Point2& p1 = s1.a;
  const Point2& p2 = s1.b;
  const Point2& q1 = s2.a;
  const Point2& q2 = s2.b;
  int o1 = static_cast<int>(orientation(p1, p2, q1));
  int o2 = static_cast<int>(orientation(p1, p2, q2));
  int o3 = static_cast<int>(orientation(q1, q2, p1));
  int o4 = static_cast<int>(orientation(q1, q2, p2));

  if (o1 == 0 && o2 == 0) {
    // Collinear: order points lexicographically along the common line.
    Point2 a = std::min(p1, p2), b = std::max(p1, p2);
    Point2 c = std::min(q1, q2), d = std::max(q1, q2);
    Point2 lo = std::max(a, c);
    Point2 hi = std::min(b, d);
    if (hi < lo) return {};
    if (lo == hi) return {SegmentRelation::SharedEndpoint, lo};
    Point2 mid = Rational(1, 2) * (lo + hi);
    return {SegmentRelation::Overlap, mid};
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};

  Point2 x;
  if (o1 == 0) x = q1;
  else if (o2 == 0) x = q2;
  else if (o3 == 0) x = p1;
  else if (o4 == 0) x = p2;
  else x = line_intersection(p1, p2, q1, q2);

  bool end1 = (x == p1 || x == p2);
  bool end2 = (x == q1 || x == q2);
  if (end1 && end2) return {SegmentRelation::SharedEndpoint, x};
  if (end1 || end2) return {SegmentRelation::EndpointInInterior, x};
  return {SegmentRelation::ProperCrossing, x};
}

ConvexPolygon canonical_polygon(std::vector<Point2> v) {
  // Drop repeated and collinear consecutive vertices.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const Point2& prev = v[(i + v.size() - 1) % v.size()];
      const Point2& next = v[(i + 1) % v.size()];
      if (v[i] == next || orientation(prev, v[i], next) == Orientation::Collinear) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.empty()) return {};
  auto smallest = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), smallest, v.end());
  return ConvexPolygon{std::move(v)};
}

Hull convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return {HullKind::Point, pts};
  bool all_collinear = true;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (orientation(pts[0], pts[1], pts[i]) != Orientation::Collinear) {
      all_collinear = false;
      break;
    }
  }
  if (all_collinear) return {HullKind::Segment, {pts.front(), pts.back()}};

  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point2> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::Left) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const auto& p = pts[i];
    while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::Left) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  hull.pop_back();
  return {HullKind::Polygon, canonical_polygon(std::move(hull)).vertices};
}

Location point_in_polygon(const Point2& p, const ConvexPolygon& poly) {
  bool boundary = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto e = poly.edge(i);
    auto o = orientation(e.a, e.b, p);
    if (o == Orientation::Right) return Location::Exterior;
    if (o == Orientation::Collinear) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

bool hull_contains(const Hull& hull, const Point2& p) {
  switch (hull.kind) {
    case HullKind::Point: return hull.vertices[0] == p;
    case HullKind::Segment: return on_segment(p, {hull.vertices[0], hull.vertices[1]});
    case HullKind::Polygon: return point_in_polygon(p, hull.polygon()) != Location::Exterior;
  }
  return false;
}

Rational signed_area(const ConvexPolygon& poly) {
  Rational twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto e = poly.edge(i);
    twice += cross(e.a, e.b);
  }
  return Rational(twice / 2);
}

Rational area(const ConvexPolygon& poly) { return abs(signed_area(poly)); }

Point2 centroid(const ConvexPolygon& poly) {
  Rational cx(0), cy(0), twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto e = poly.edge(i);
    Rational c = cross(e.a, e.b);
    twice += c;
    cx += (e.a.x + e.b.x) * c;
    cy += (e.a.y + e.b.y) * c;
  }
  Rational six_area = Rational(3 * twice);
  return Point2(Rational(cx / six_area), Rational(cy / six_area));
}

namespace {

std::optional<ConvexPolygon> keep_side(const ConvexPolygon& poly, const Line& line, int wanted) {
  std::vector<int> side(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    side[i] = static_cast<int>(orientation(line.a, line.b, poly.vertices[i]));
  }
  std::vector<Point2> out;
  bool has_strict = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    std::size_t j = (i + 1) % poly.size();
    if (side[i] == wanted) has_strict = true;
    if (side[i] * wanted >= 0) out.push_back(poly.vertices[i]);
    if (side[i] * side[j] < 0) {
      out.push_back(line_intersection(poly.vertices[i], poly.vertices[j], line.a, line.b));
    }
  }
  if (!has_strict || out.size() < 3) return std::nullopt;
  ConvexPolygon piece = canonical_polygon(std::move(out));
  if (piece.size() < 3) return std::nullopt;
  return piece;
}

}  // namespace

ClipResult clip_polygon_by_line(const ConvexPolygon& poly, const Line& line) {
  return {keep_side(poly, line, 1), keep_side(poly, line, -1)};
}

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  auto separates = [](const ConvexPolygon& p, const ConvexPolygon& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto e = p.edge(i);
      bool all_right = std::all_of(q.vertices.begin(), q.vertices.end(), [&](const Point2& v) {
        return orientation(e.a, e.b, v) == Orientation::Right;
      });
      if (all_right) return true;
    }
    return false;
  };
  return !separates(a, b) && !separates(b, a);
}

}  // namespace fmb
