#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fmbend/cell_graph.hpp"
#include "fmbend/model.hpp"
#include "fmbend/reductions.hpp"

namespace fmb {

struct Instance {
  FMBigraph graph;
  std::optional<StripSet> strips;
};

// Throws ParseError (malformed JSON, with line/column), SchemaError (wrong
// shape, with the offending field path) or InvariantError (invalid instance).
Instance parse_instance(std::string_view text);
// Like parse_instance but leaves instance invariants to the caller.
Instance parse_instance_unchecked(std::string_view text);
std::string serialize_instance(const Instance& inst);

Drawing parse_drawing(std::string_view text);
std::string serialize_drawing(const Drawing& d);

BpsewcInstance parse_bpsewc(std::string_view text);
std::string serialize_bpsewc(const BpsewcInstance& inst);

// Cluster sizes and adjacency lists, for debugging.
std::string cell_graph_json(const CellGraph& cg, const IntersectionGraph& gx);

struct SvgOptions {
  std::optional<StripSet> strips;
  double size = 480;
};

std::string render_svg(const FMBigraph& g, const Drawing& d, const SvgOptions& options = {});

enum class GeneratorKind { Collinear, ConvexHullCactus, Strip };

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t n_fixed = 5;
  std::size_t n_mobile = 3;
  std::size_t strips = 2;
  std::size_t max_degree = 4;
  std::size_t retries = 1000;
};

struct GeneratedInstance {
  Instance instance;
  std::string note;  // e.g. the intersection-graph class
};

// Throws GenerationFailed.
GeneratedInstance generate_random(GeneratorKind kind, const GeneratorParams& params);

std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

}  // namespace fmb
