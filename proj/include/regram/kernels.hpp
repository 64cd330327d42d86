#pragma once

#include <cstdint>

#include "regram/graph.hpp"

// Data-parallel scans over a finished graph. Each kernel has a serial
// counterpart in `kernels::serial` that takes a deliberately different route
// and is kept for the tests and the benchmark.
namespace regram::kernels {

bool is_triangle_free(const Graph& g);

/// Non-adjacent pairs {u, v} with no common neighbour.
std::int64_t count_open_pairs(const Graph& g);

namespace serial {

bool is_triangle_free(const Graph& g);
std::int64_t count_open_pairs(const Graph& g);

}  // namespace serial
}  // namespace regram::kernels
