#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "regram/graph.hpp"

namespace regram {

/// The fixed graph H avoided by the process. K3 takes a dedicated fast path.
class ForbiddenPattern {
 public:
  /// Throws std::invalid_argument unless H has 1..8 vertices and an edge.
  explicit ForbiddenPattern(Graph h);

  static ForbiddenPattern triangle();
  /// "K<k>", "C<k>" or "P<k>" (path on k vertices), e.g. "K3", "C4".
  static ForbiddenPattern parse(std::string_view name);

  const Graph& graph() const { return h_; }
  bool is_triangle() const { return triangle_; }

 private:
  Graph h_;
  bool triangle_ = false;
};

/// True iff g + e has a subgraph isomorphic to H that uses e.
/// Throws std::invalid_argument if e is already an edge of g.
bool creates_copy(const Graph& g, Edge e, const ForbiddenPattern& h);

struct ProcessStep {
  int step = 0;                 // edges present after this step, 1-based
  int max_degree = 0;
  int min_degree = 0;
  std::int64_t open_pairs = 0;  // legal pairs left after this step
};

struct ProcessResult {
  Graph final_graph;
  int steps = 0;
  std::vector<Edge> edges;  // in the order they were added
  std::vector<ProcessStep> trajectory;
  std::uint64_t seed = 0;
};

/// Random greedy H-free process on n vertices: repeatedly add a uniformly
/// random non-edge that creates no copy of H until none is left.
///
/// For K3 the set of open pairs is maintained explicitly; adding uv closes uw
/// for w in N(v) and vw for w in N(u). Other patterns keep a candidate list
/// and drop pairs as soon as they become illegal, which is permanent since the
/// graph only grows. Throws std::invalid_argument when n < 1.
ProcessResult run_process(int n, const ForbiddenPattern& h, std::uint64_t seed);

/// Non-edges whose endpoints have no common neighbour.
/// Throws std::invalid_argument if g has a triangle.
std::int64_t open_pairs_count(const Graph& g);

/// True iff every non-edge would create a copy of H.
bool is_maximal(const Graph& g, const ForbiddenPattern& h);

/// The graph after the first `steps` edges of a run.
Graph replay(const ProcessResult& run, int steps);

}  // namespace regram
