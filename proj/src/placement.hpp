#pragma once

#include <optional>
#include <vector>

#include "fmbend/geometry.hpp"

namespace fmb::detail {

// Straight segments and isolated points already committed to a drawing.
struct SegmentSoup {
  std::vector<Segment> segments;
  std::vector<Point2> points;

  void add(const Point2& a, const Point2& b) { segments.push_back({a, b}); }
  bool point_free(const Point2& p) const;
  // Segment from an existing vertex `from` to a new point `to`: may only touch
  // other segments at `from`.
  bool segment_free(const Point2& from, const Point2& to) const;
};

// Direction strictly inside the free wedge at f between `base` and the first
// committed segment at f turning towards `normal`; `normal` if there is none.
Point2 free_direction(const SegmentSoup& soup, const Point2& f, const Point2& base, const Point2& normal);

// f + eps * dir for the first eps = scale / 2^k giving a free position.
std::optional<Point2> place_leaf(const SegmentSoup& soup, const Point2& f, const Point2& dir,
                                 const Rational& scale = Rational(1), int attempts = 200);

}  // namespace fmb::detail
