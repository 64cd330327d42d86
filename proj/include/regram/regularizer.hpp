#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regram/equitable_coloring.hpp"
#include "regram/graph.hpp"

namespace regram {

/// One colour class and the degrees its cross edges must supply.
struct ClassProfile {
  std::vector<int> vertices;            // ordered by degree in G, ascending
  std::vector<int> graph_degrees;       // d'_1 <= ... <= d'_m
  std::vector<int> complement_degrees;  // d + Delta - d'_i, non-increasing
};

struct RegularizationPlan {
  int d = 0;
  int delta_max = 0;
  int delta_min = 0;
  EquitableColoring coloring;
  std::vector<ClassProfile> classes;
};

/// Slack values allowed for g: Delta - delta <= d and 9d <= 4 floor(n / (Delta + 1)).
struct SlackRange {
  int low = 0;
  int high = 0;
};

/// nullopt when no d satisfies both bounds (or g has no vertices).
std::optional<SlackRange> slack_range(const Graph& g);

/// Colours g equitably with Delta + 1 colours and computes each class's
/// cross-edge degrees. Throws std::invalid_argument if g has a triangle or
/// d lies outside slack_range(g); the message names the violated bound.
RegularizationPlan plan(const Graph& g, int d, std::uint64_t seed = 0);

/// (d + Delta)-regular triangle-free graph on 2n vertices: two copies of g
/// (0..n-1 and n..2n-1) plus, for every colour class C, a bipartite graph
/// between C and its copy realizing the class's complement degrees. The seed
/// feeds the colouring and shuffles ties inside each class.
Graph regularize(const Graph& g, int d, std::uint64_t seed = 0);
Graph regularize(const Graph& g, const RegularizationPlan& plan);

}  // namespace regram
