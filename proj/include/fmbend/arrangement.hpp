#pragma once

#include <string>
#include <vector>

#include "fmbend/geometry.hpp"
#include "fmbend/model.hpp"

namespace fmb {

// A line a*x + b*y = c normalised so that the first nonzero of (a, b) is 1,
// together with the two lexicographically smallest fixed points on it.
struct ArrangementLine {
  Line through;
  Rational a;
  Rational b;
  Rational c;
};

// The lines through all pairs of fixed points, deduplicated, in canonical order.
struct Arrangement {
  std::vector<ArrangementLine> lines;
};

// Cell identifier: one '+' (left) or '-' (right) per arrangement line.
using CellId = std::string;

struct Cell {
  CellId id;
  ConvexPolygon polygon;
  Point2 representative;  // polygon centroid, strictly interior
};

struct HullCells {
  std::string mobile_id;
  ConvexPolygon hull;
  std::vector<Cell> cells;  // sorted by id
};

Arrangement build_arrangement(const FMBigraph& g);
Arrangement build_arrangement(std::span<const Point2> fixed_points);

// Sign of p against every line; '0' where p is on the line.
CellId sign_vector(const Arrangement& arr, const Point2& p);

HullCells decompose_hull(const Arrangement& arr, const Hull& hull, std::string mobile_id = {});

// Classical bound on the number of cells of an arrangement of L lines.
std::size_t max_cells_for_lines(std::size_t line_count);

bool cell_count_bound_check(const Arrangement& arr, const HullCells& cells);

}  // namespace fmb
