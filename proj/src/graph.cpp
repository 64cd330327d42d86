#include "regram/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "regram/kernels.hpp"

namespace regram {

Edge make_edge(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) {
  if (n < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(order() - 1));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not present");
  }
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    return false;
  }
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.add_edge(e.u, e.v);
  }
  return g;
}

int max_degree(const Graph& g) {
  if (g.order() == 0) {
    throw std::invalid_argument("max_degree of the empty graph");
  }
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) {
    throw std::invalid_argument("min_degree of the empty graph");
  }
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    best = std::min(best, g.degree(v));
  }
  return best;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) {
    return 0;
  }
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) {
      return std::nullopt;
    }
  }
  return r;
}

bool is_triangle_free(const Graph& g) { return kernels::is_triangle_free(g); }

Graph disjoint_union(const Graph& first, const Graph& second) {
  const int shift = first.order();
  Graph out(first.order() + second.order());
  for (const Edge& e : first.edges()) {
    out.add_edge(e.u, e.v);
  }
  for (const Edge& e : second.edges()) {
    out.add_edge(e.u + shift, e.v + shift);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("induced_subgraph: vertex out of range");
    }
    if (index[v] != -1) {
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    }
    index[v] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      const int j = index[w];
      if (j > static_cast<int>(i)) {
        out.add_edge(static_cast<int>(i), j);
      }
    }
  }
  return out;
}

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.order() || in[v]) {
      return false;
    }
    in[v] = 1;
  }
  for (int v : vertices) {
    for (int w : g.neighbors(v)) {
      if (in[w]) {
        return false;
      }
    }
  }
  return true;
}

int common_neighbor_count(const Graph& g, int u, int v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool have_common_neighbor(const Graph& g, int u, int v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle_graph needs n >= 3");
  }
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph complete_bipartite_graph(int left, int right) {
  Graph g(left + right);
  for (int u = 0; u < left; ++u) {
    for (int v = 0; v < right; ++v) {
      g.add_edge(u, left + v);
    }
  }
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

}  // namespace regram
