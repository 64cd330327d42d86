#pragma once

#include <cstdint>
#include <vector>

#include "regram/graph.hpp"

namespace regram {

/// Proper colouring whose class sizes differ by at most one.
struct EquitableColoring {
  int colors = 0;
  std::vector<int> color_of;             // vertex -> 0..colors-1
  std::vector<std::vector<int>> classes;  // colour -> sorted vertices
};

/// Counters describing how a colouring was reached; useful in tests.
struct EquitableColoringStats {
  std::int64_t conflicts = 0;       // inserted edges that joined one class
  std::int64_t direct_shifts = 0;   // resolved by a path of moves into V-
  std::int64_t solo_moves = 0;      // resolved through a solo edge
  std::int64_t shared_solo_moves = 0;
  int restarts = 0;                 // full reruns with a new insertion order
};

/// Equitable colouring with `colors` classes; requires colors >= max degree + 1.
///
/// Edges are inserted one at a time into an equitable colouring of the
/// edgeless graph (padded with a small clique so that the order is a multiple
/// of `colors`). When an edge lands inside a class, one endpoint moves to a
/// class free of its neighbours and the resulting nearly equitable colouring
/// is repaired on the digraph of classes, where X -> Y whenever some vertex
/// of X has no neighbour in Y:
///   - if the oversized class reaches the undersized one, shift one vertex
///     along the path;
///   - otherwise a vertex w of an accessible class with a solo neighbour y
///     (w is y's only neighbour in that class) swaps y in and w onwards, and
///     the inaccessible classes are repaired recursively with one colour
///     fewer;
///   - otherwise two independent inaccessible vertices sharing a solo
///     neighbour w let w leave its class, and the problem recurses on the
///     inaccessible classes plus w's old class.
/// The seed permutes the vertex order used for the initial allocation and the
/// edge insertion order; equal (graph, colors, seed) give equal output.
///
/// Throws std::invalid_argument when colors <= max degree or colors < 1.
EquitableColoring equitable_color(const Graph& g, int colors, std::uint64_t seed = 0,
                                  EquitableColoringStats* stats = nullptr);

/// True iff the colouring is proper, equitable, uses colours in 0..colors-1
/// and `classes` is the exact inverse of `color_of`.
bool verify_equitable(const Graph& g, const EquitableColoring& coloring);

/// Builds the class lists from a vertex -> colour map.
EquitableColoring coloring_from_map(std::vector<int> color_of, int colors);

}  // namespace regram
