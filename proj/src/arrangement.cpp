#include "fmbend/arrangement.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "fmbend/error.hpp"

namespace fmb {

Arrangement build_arrangement(const FMBigraph& g) {
  std::vector<Point2> pts;
  for (const auto& f : g.fixed()) pts.push_back(f.position);
  return build_arrangement(pts);
}

Arrangement build_arrangement(std::span<const Point2> fixed_points) {
  if (fixed_points.size() < 2) {
    throw Error(ErrorCode::TooFewFixed, "an arrangement needs at least two fixed points");
  }
  using Key = std::tuple<Rational, Rational, Rational>;
  std::map<Key, ArrangementLine> unique;
  std::vector<Point2> pts(fixed_points.begin(), fixed_points.end());
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      Rational a = pts[j].y - pts[i].y;
      Rational b = pts[i].x - pts[j].x;
      Rational norm = (a != 0) ? a : b;
      a /= norm;
      b /= norm;
      Rational c = a * pts[i].x + b * pts[i].y;
      Key key{a, b, c};
      // pts is sorted, so the first pair seen on a line is its two smallest points.
      unique.try_emplace(key, ArrangementLine{Line{pts[i], pts[j]}, a, b, c});
    }
  }
  Arrangement arr;
  for (auto& [key, line] : unique) arr.lines.push_back(line);
  return arr;
}

CellId sign_vector(const Arrangement& arr, const Point2& p) {
  CellId id(arr.lines.size(), '0');
  for (std::size_t i = 0; i < arr.lines.size(); ++i) {
    switch (orientation(arr.lines[i].through.a, arr.lines[i].through.b, p)) {
      case Orientation::Left: id[i] = '+'; break;
      case Orientation::Right: id[i] = '-'; break;
      case Orientation::Collinear: break;
    }
  }
  return id;
}

HullCells decompose_hull(const Arrangement& arr, const Hull& hull, std::string mobile_id) {
  if (!hull.full_dimensional()) {
    throw Error(ErrorCode::DegenerateHull, "hull of '" + mobile_id + "' is not full-dimensional");
  }
  std::vector<ConvexPolygon> pieces{hull.polygon()};
  for (const auto& line : arr.lines) {
    std::vector<ConvexPolygon> next;
    next.reserve(pieces.size() * 2);
    for (const auto& piece : pieces) {
      auto [left, right] = clip_polygon_by_line(piece, line.through);
      if (left) next.push_back(std::move(*left));
      if (right) next.push_back(std::move(*right));
    }
    pieces = std::move(next);
  }
  HullCells out{std::move(mobile_id), hull.polygon(), {}};
  out.cells.reserve(pieces.size());
  for (auto& piece : pieces) {
    Point2 rep = centroid(piece);
    CellId id = sign_vector(arr, rep);
    out.cells.push_back({std::move(id), std::move(piece), std::move(rep)});
  }
  std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
  return out;
}

std::size_t max_cells_for_lines(std::size_t L) { return 1 + L + L * (L - (L > 0 ? 1 : 0)) / 2; }

bool cell_count_bound_check(const Arrangement& arr, const HullCells& cells) {
  return cells.cells.size() <= max_cells_for_lines(arr.lines.size());
}

}  // namespace fmb
