#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fmbend/model.hpp"
#include "fmbend/planarity.hpp"

namespace fmb {

// Strips and gaps are 0-based: strip i is the (i+1)-th from the top; gap g lies
// between strips g-1 and g, so gap 0 is above everything and gap h below.

enum class VertexColor { White, Gray, Isolated };

struct MobileClass {
  VertexColor color = VertexColor::Isolated;
  std::size_t strip = 0;  // White: its strip. Gray: the upper of its two strips.
};

struct VertexClassification {
  std::vector<std::size_t> strip_of_fixed;
  std::vector<MobileClass> mobiles;
};

// Throws InvalidInput (bad strips), DuplicateX, Infeasible.
VertexClassification classify_vertices(const FMBigraph& g, const StripSet& strips);

struct AugmentedStripGraph {
  SimpleGraph graph;
  std::vector<std::vector<std::size_t>> strip_order;  // fixed indices left to right
  std::vector<std::array<std::size_t, 3>> dummies;    // v1, v2, v3 per strip
  std::vector<std::vector<std::size_t>> cycles;       // u1..ur, v3, v2, v1
};

AugmentedStripGraph build_augmented_graph(const FMBigraph& g, const StripSet& strips, const VertexClassification& cls);

struct StripDecision {
  bool drawable = false;
  VertexClassification classification;
  std::vector<std::size_t> gaps;  // per mobile, when drawable
};

StripDecision decide_strip(const FMBigraph& g, const StripSet& strips);

struct StripConstruction {
  std::optional<Drawing> drawing;
  std::string problem;  // why construction is incomplete
};

StripConstruction construct_strip_drawing(const FMBigraph& g, const StripSet& strips, const StripDecision& decision);

struct StripResult {
  StripSet strips;
  StripDecision decision;
  std::optional<Drawing> drawing;
  bool construction_incomplete = false;
  std::string problem;
};

StripResult solve_strip(const FMBigraph& g, const StripSet& strips);

// Contiguous groups of fixed y-levels (top to bottom) in lexicographic split order.
std::vector<StripSet> strip_partitions(const FMBigraph& g, std::size_t h);

// First feasible partition; throws InfeasibleForAllPartitions.
StripResult enumerate_strip_partitions(const FMBigraph& g, std::size_t h);

}  // namespace fmb
