#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regram/graph.hpp"

namespace regram {

struct AlphaResult {
  int lower = 0;
  std::optional<int> upper;  // set iff the search finished
  std::vector<int> witness;  // independent, |witness| = lower, sorted
  bool exact = false;
  std::int64_t nodes = 0;    // search nodes expanded
};

inline constexpr std::int64_t kDefaultAlphaBudget = 200'000'000;

/// Maximal independent set built by repeatedly taking a vertex of minimum
/// remaining degree; the seed breaks ties.
std::vector<int> greedy_independent_set(const Graph& g, std::uint64_t seed = 0);

/// Best of several greedy runs, each improved by (1,2)-swaps until no swap
/// applies. Deterministic for a given graph.
std::vector<int> heuristic_independent_set(const Graph& g);

/// Exact maximum independent set by branch and bound: the search looks for
/// a clique in the complement with a bitset candidate set, bounding each
/// node by a greedy cover of the candidates with cliques of g.
///
/// The root's subtrees run in parallel. Each starts from the heuristic
/// bound alone, so the total node count and the result do not depend on the
/// schedule: the witness is the first maximum set found in the earliest
/// subtree, or the heuristic set when nothing beats it. If the node count
/// passes `budget` the heuristic set is returned with exact = false.
AlphaResult independence_number_exact(const Graph& g, std::int64_t budget = kDefaultAlphaBudget);

namespace serial {

/// Single-threaded reference that shares the incumbent across subtrees.
/// Agrees with the parallel version on alpha and witness whenever both
/// finish; node counts differ.
AlphaResult independence_number_exact(const Graph& g, std::int64_t budget = kDefaultAlphaBudget);

}  // namespace serial
}  // namespace regram
