#pragma once

#include <array>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "fmbend/cell_graph.hpp"
#include "fmbend/model.hpp"
#include "fmbend/skeleton.hpp"

namespace fmb {

// Point-set embedding with correspondence: vertex i must sit on points[i].
struct BpsewcInstance {
  std::vector<std::string> vertices;
  std::vector<Point2> points;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t bends = 1;  // odd budget 2k+1
};

// Throws InvalidInput.
void check_bpsewc(const BpsewcInstance& inst);

// One degree-2 mobile vertex per edge, fixed vertices at the given points.
FMBigraph bpsewc_to_fm(const BpsewcInstance& inst);

// Mobile vertex id used for edge index e.
std::string subdivision_id(const BpsewcInstance& inst, std::size_t e);

struct PolylineDrawing {
  std::vector<Point2> positions;              // per vertex
  std::vector<std::vector<Point2>> bends;     // per edge, ordered from first endpoint
};

// Throws InvalidInput when d is not a planar drawing with at most k bends per edge.
PolylineDrawing fm_drawing_to_bpsewc(const BpsewcInstance& inst, const Drawing& d, std::size_t k);

std::vector<PolylineCrossing> polyline_drawing_crossings(const BpsewcInstance& inst, const PolylineDrawing& d);

struct Literal {
  std::size_t variable;  // 0-based
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct SatInstance {
  std::size_t variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// DIMACS CNF. Clauses with one or two literals are padded by repetition;
// longer clauses and empty clauses are rejected (InvalidInput / ParseError).
SatInstance parse_dimacs(std::istream& in);

bool satisfies(const SatInstance& sat, const std::vector<bool>& assignment);

struct SatReduction {
  IntersectionGraph gx;
  CellGraph gc;
  std::size_t variables = 0;  // clusters [0, variables) are variables, the rest clauses
};

SatReduction sat_to_skeleton(const SatInstance& sat);

// Throws InvalidSkeleton.
std::vector<bool> skeleton_to_assignment(const SatReduction& red, const Skeleton& s);

}  // namespace fmb
