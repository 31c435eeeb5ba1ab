#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fmbend/rational.hpp"

namespace fmb {

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point2(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);

Rational cross(const Point2& u, const Point2& v);
Rational dot(const Point2& u, const Point2& v);

std::string to_string(const Point2& p);

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

// Sign of det(b - a, c - a).
Orientation orientation(const Point2& a, const Point2& b, const Point2& c);

struct Segment {
  Point2 a;
  Point2 b;
};

enum class SegmentRelation {
  Disjoint,
  SharedEndpoint,      // touch exactly at an endpoint of both
  ProperCrossing,      // interiors cross at a single point
  Overlap,             // collinear, share more than one point
  EndpointInInterior,  // an endpoint of one lies in the interior of the other
};

struct SegmentIntersection {
  SegmentRelation relation = SegmentRelation::Disjoint;
  std::optional<Point2> witness;
};

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

// True if p lies on the closed segment s.
bool on_segment(const Point2& p, const Segment& s);

// Counterclockwise, strictly convex, starting at the lexicographically smallest vertex.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  std::size_t size() const { return vertices.size(); }
  Segment edge(std::size_t i) const { return {vertices[i], vertices[(i + 1) % vertices.size()]}; }
};

enum class HullKind { Point, Segment, Polygon };

struct Hull {
  HullKind kind = HullKind::Point;
  // Point: 1 vertex. Segment: 2 endpoints (lexicographic). Polygon: canonical ccw cycle.
  std::vector<Point2> vertices;

  bool full_dimensional() const { return kind == HullKind::Polygon; }
  ConvexPolygon polygon() const { return ConvexPolygon{vertices}; }
};

Hull convex_hull(std::span<const Point2> points);

// Rotates/reorders a ccw strictly convex vertex cycle to canonical start.
ConvexPolygon canonical_polygon(std::vector<Point2> ccw_vertices);

enum class Location { Interior, Boundary, Exterior };

Location point_in_polygon(const Point2& p, const ConvexPolygon& poly);

// Point/segment/polygon containment (closed set).
bool hull_contains(const Hull& hull, const Point2& p);

struct Line {
  Point2 a;
  Point2 b;
};

struct ClipResult {
  std::optional<ConvexPolygon> left;   // part strictly left of a->b (closure)
  std::optional<ConvexPolygon> right;  // part strictly right of a->b (closure)
};

// Pieces with empty interior are dropped.
ClipResult clip_polygon_by_line(const ConvexPolygon& poly, const Line& line);

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

Rational signed_area(const ConvexPolygon& poly);
Rational area(const ConvexPolygon& poly);
Point2 centroid(const ConvexPolygon& poly);

// Intersection point of the supporting lines of two non-parallel segments.
Point2 line_intersection(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2);

}  // namespace fmb
