#pragma once

#include <optional>
#include <vector>

#include "fmbend/model.hpp"
#include "fmbend/planarity.hpp"

namespace fmb {

// Line through a and b with every fixed vertex on it. t[i] is the parameter of
// fixed vertex i (position = a + t[i] * (b - a)); order sorts fixed vertices by t.
struct CollinearityCertificate {
  Point2 a;
  Point2 b;
  std::vector<std::size_t> order;
  std::vector<Rational> t;
};

enum class Side { Above, Below };

std::string_view to_string(Side s);

struct CollinearDecision {
  bool drawable = false;
  std::vector<Side> sides;  // per mobile index, when drawable
};

// Throws Error(NotCollinear).
CollinearityCertificate check_collinear(const FMBigraph& g);

// G plus a cycle through the fixed vertices in line order (two dummy vertices
// when there are exactly two fixed vertices, no cycle for one).
SimpleGraph augmented_collinear_graph(const FMBigraph& g, const CollinearityCertificate& cert);

CollinearDecision decide_collinear(const FMBigraph& g, const CollinearityCertificate& cert);

// Throws Error(ConstructionFailed) if the result does not validate.
Drawing construct_collinear_drawing(const FMBigraph& g, const CollinearityCertificate& cert,
                                    const std::vector<Side>& sides);

struct CollinearResult {
  CollinearityCertificate certificate;
  CollinearDecision decision;
  std::optional<Drawing> drawing;
};

CollinearResult solve_collinear(const FMBigraph& g);

}  // namespace fmb
