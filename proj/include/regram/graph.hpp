#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace regram {

/// Undirected edge in canonical order (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical edge for an unordered pair; throws on a loop.
Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted so that membership is a binary search and
/// common-neighbour tests are a linear merge. Equality compares exact edge
/// sets, never isomorphism classes.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws std::out_of_range for a bad endpoint and std::invalid_argument
  /// for a loop or an edge that is already present.
  void add_edge(int u, int v);
  void add_edge(Edge e) { add_edge(e.u, e.v); }

  /// Throws std::invalid_argument if the edge is absent.
  void remove_edge(int u, int v);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// The common degree, or nullopt when degrees differ. The empty and edgeless
/// graphs are 0-regular.
std::optional<int> regular_degree(const Graph& g);

/// True iff no edge has a common neighbour of its endpoints.
bool is_triangle_free(const Graph& g);

/// Vertices of `second` are shifted by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// True iff `vertices` is pairwise non-adjacent (duplicates are rejected).
bool is_independent_set(const Graph& g, std::span<const int> vertices);

/// Number of common neighbours of u and v.
int common_neighbor_count(const Graph& g, int u, int v);
bool have_common_neighbor(const Graph& g, int u, int v);

// Small named graphs, used by fixtures, the CLI and tests.
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int left, int right);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace regram
