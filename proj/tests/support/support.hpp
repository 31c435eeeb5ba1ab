#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fmbend/cell_graph.hpp"
#include "fmbend/collinear.hpp"
#include "fmbend/model.hpp"
#include "fmbend/planarity.hpp"
#include "fmbend/reductions.hpp"
#include "fmbend/skeleton.hpp"
#include "fmbend/strip.hpp"

namespace fmbtest {

using namespace fmb;
using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n);
std::size_t between(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool chance(Rng& rng, unsigned percent);
std::vector<std::size_t> sample(Rng& rng, std::size_t n, std::size_t k);  // sorted

SimpleGraph random_graph(Rng& rng, std::size_t n, unsigned edge_percent);

// Deletes vertices of degree <= 1 and suppresses vertices of degree 2 (or
// deletes them when their neighbours are already adjacent). Each step
// preserves planarity in both directions.
SimpleGraph planarity_reduced(const SimpleGraph& g);
// oracle_is_planar on planarity_reduced(g).
bool reduced_oracle_is_planar(const SimpleGraph& g);

// Brute-force hull: vertices are exactly the input points not inside a
// triangle or on a segment of other points, and all points are left of or
// on every hull edge.
bool hull_matches_oracle(const std::vector<Point2>& points, const Hull& hull);

// Strictly interior point of a convex polygon from positive random weights.
Point2 random_interior_point(Rng& rng, const ConvexPolygon& poly);

// Exhaustive side assignment for collinear instances: two mobiles on the
// same side are compatible iff the neighbours of one lie in a single closed
// gap (including the outer one) between consecutive neighbours of the other.
bool side_assignment_feasible(const FMBigraph& g, const CollinearityCertificate& cert);

bool sat_oracle(const SatInstance& sat);
SatInstance random_sat(Rng& rng, std::size_t variables, std::size_t clauses);

FMBigraph random_collinear(Rng& rng, std::size_t n_fixed, std::size_t n_mobile, std::size_t max_degree);
// Fixed points on a small grid; every mobile has a full-dimensional hull.
FMBigraph random_convex_hull(Rng& rng, std::size_t n_fixed, std::size_t n_mobile, std::size_t max_degree);

IntersectionGraph random_path_gx(Rng& rng, std::size_t n);
IntersectionGraph random_cycle_gx(Rng& rng, std::size_t n);
IntersectionGraph random_cactus_gx(Rng& rng, std::size_t n);
// Abstract clusters of 1..max_cells cells; each cell pair along a G_x edge is
// adjacent with the given probability.
CellGraph random_cell_graph(Rng& rng, const IntersectionGraph& gx, std::size_t max_cells, unsigned percent);

struct StripInstance {
  FMBigraph graph;
  StripSet strips;
};
StripInstance random_strip_instance(Rng& rng, std::size_t h, std::size_t n_fixed, std::size_t n_mobile);

// Straight-line plane graph on random grid points.
BpsewcInstance random_plane_bpsewc(Rng& rng, std::size_t n, std::size_t max_edges);
// Planar drawing of bpsewc_to_fm(inst) with `k` bends per edge.
Drawing random_reduction_drawing(Rng& rng, const BpsewcInstance& inst, std::size_t k);

FMBigraph make_graph(const std::vector<std::pair<std::string, Point2>>& fixed, const std::vector<std::string>& mobile,
                     const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace fmbtest
