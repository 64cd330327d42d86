#pragma once

#include <cstdint>
#include <vector>

#include "regram/graph.hpp"

namespace regram {

/// Balanced blow-up of C5: parts of size k/5, consecutive parts joined
/// completely. Part p holds vertices p*k/5 .. (p+1)*k/5 - 1.
/// Throws std::invalid_argument unless k >= 5 and k is a multiple of 5.
Graph c5_blowup(int k);

/// Edge-disjoint spanning 2-regular subgraphs covering every edge.
struct TwoFactorDecomposition {
  int order = 0;
  std::vector<std::vector<Edge>> factors;  // each sorted
};

/// Splits a 2j-regular graph (j >= 1) into j two-factors: orient every
/// component along an Euler circuit, then peel perfect matchings off the
/// j-regular out/in bipartite graph; each matching is one factor.
/// Throws std::invalid_argument for irregular, odd-regular or edgeless input.
TwoFactorDecomposition two_factorize(const Graph& g);

/// Factors are spanning, 2-regular, pairwise disjoint and cover E(g).
bool verify_two_factorization(const Graph& g, const TwoFactorDecomposition& dec);

/// r-regular triangle-free graph on k vertices: c5_blowup(k) minus
/// k/5 - r/2 of its 2-factors. A non-zero seed permutes the factor order
/// before the deletion. Throws std::invalid_argument unless k is a positive
/// multiple of 5, r is even and 0 <= r <= 2k/5.
Graph h_kr(int k, int r, std::uint64_t seed = 0);

}  // namespace regram
