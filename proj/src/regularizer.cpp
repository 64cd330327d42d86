#include "regram/regularizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "regram/degree_realization.hpp"
#include "regram/rng.hpp"

namespace regram {

std::optional<SlackRange> slack_range(const Graph& g) {
  if (g.order() == 0) {
    return std::nullopt;
  }
  const int hi_deg = max_degree(g);
  const int lo_deg = min_degree(g);
  const int high = 4 * (g.order() / (hi_deg + 1)) / 9;  // largest d with 9d <= 4 floor(n/(Delta+1))
  const int low = hi_deg - lo_deg;
  if (low > high) {
    return std::nullopt;
  }
  return SlackRange{low, high};
}

RegularizationPlan plan(const Graph& g, int d, std::uint64_t seed) {
  if (g.order() == 0) {
    throw std::invalid_argument("plan: graph has no vertices");
  }
  if (!is_triangle_free(g)) {
    throw std::invalid_argument("plan: graph has a triangle");
  }
  RegularizationPlan p;
  p.d = d;
  p.delta_max = max_degree(g);
  p.delta_min = min_degree(g);
  const int colors = p.delta_max + 1;
  const int floor_size = g.order() / colors;
  if (d < p.delta_max - p.delta_min) {
    throw std::invalid_argument("plan: d = " + std::to_string(d) + " is below Delta - delta = " +
                                std::to_string(p.delta_max - p.delta_min));
  }
  if (9 * d > 4 * floor_size) {
    throw std::invalid_argument("plan: d = " + std::to_string(d) +
                                " exceeds (4/9) floor(n/(Delta+1)) = 4*" + std::to_string(floor_size) +
                                "/9");
  }

  p.coloring = equitable_color(g, colors, seed);
  Rng rng(derive_seed(seed, 1));
  const RealizationCondition condition(Rational::make(2, 1));
  p.classes.reserve(p.coloring.classes.size());
  for (const auto& members : p.coloring.classes) {
    ClassProfile cls;
    cls.vertices = members;
    rng.shuffle(std::span<int>(cls.vertices));
    std::stable_sort(cls.vertices.begin(), cls.vertices.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : cls.vertices) {
      cls.graph_degrees.push_back(g.degree(v));
      cls.complement_degrees.push_back(d + p.delta_max - g.degree(v));
    }
    if (!cls.vertices.empty() && !condition.holds(DegreeSequence(cls.complement_degrees))) {
      throw std::logic_error("plan: class violates d1 <= min{2 dm, 8m/9} despite the slack bounds");
    }
    p.classes.push_back(std::move(cls));
  }
  return p;
}

Graph regularize(const Graph& g, const RegularizationPlan& p) {
  const int n = g.order();
  const int classes = static_cast<int>(p.classes.size());
  std::vector<BipartiteGraph> cross(static_cast<std::size_t>(classes));
  // Classes are independent; results land in fixed slots, so the assembled
  // graph does not depend on scheduling.
  std::vector<std::string> failures(static_cast<std::size_t>(classes));
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < classes; ++c) {
    const auto& cls = p.classes[c];
    if (cls.vertices.empty()) {
      continue;
    }
    try {
      const DegreeSequence seq(cls.complement_degrees);
      cross[c] = realize_bipartite(seq, seq);
    } catch (const std::exception& e) {
      failures[c] = e.what();
    }
  }
  for (int c = 0; c < classes; ++c) {
    if (!failures[c].empty()) {
      throw std::logic_error("regularize: class " + std::to_string(c) + " failed: " + failures[c]);
    }
  }

  Graph out = disjoint_union(g, g);
  for (int c = 0; c < classes; ++c) {
    const auto& cls = p.classes[c];
    for (std::size_t i = 0; i < cross[c].adjacency.size(); ++i) {
      for (int j : cross[c].adjacency[i]) {
        out.add_edge(cls.vertices[i], n + cls.vertices[static_cast<std::size_t>(j)]);
      }
    }
  }
  const auto degree = regular_degree(out);
  if (!degree || *degree != p.d + p.delta_max) {
    throw std::logic_error("regularize: output is not (d + Delta)-regular");
  }
  return out;
}

Graph regularize(const Graph& g, int d, std::uint64_t seed) { return regularize(g, plan(g, d, seed)); }

}  // namespace regram
