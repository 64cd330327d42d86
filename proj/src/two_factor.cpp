#include "regram/two_factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "regram/rng.hpp"

namespace regram {
namespace {

struct Arc {
  int from;
  int to;
};

// Directs every edge so that each vertex has equal in- and out-degree, by
// walking Euler circuits (Hierholzer) component by component.
std::vector<Arc> euler_orientation(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));  // (other, edge id)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].u].push_back({edges[i].v, static_cast<int>(i)});
    inc[edges[i].v].push_back({edges[i].u, static_cast<int>(i)});
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (int start = 0; start < n; ++start) {
    // Stack of (vertex, edge id used to reach it); popping emits the circuit
    // in reverse, so arcs are recorded as (vertex -> predecessor).
    std::vector<std::pair<int, int>> stack{{start, -1}};
    while (!stack.empty()) {
      const int v = stack.back().first;
      auto& k = next[v];
      while (k < inc[v].size() && used[inc[v][k].second]) {
        ++k;
      }
      if (k == inc[v].size()) {
        const int via = stack.back().second;
        stack.pop_back();
        if (via >= 0) {
          arcs.push_back({v, stack.back().first});
        }
        continue;
      }
      const auto [w, id] = inc[v][k];
      used[id] = 1;
      stack.push_back({w, id});
    }
  }
  return arcs;
}

// Perfect matching of a regular bipartite graph by augmenting paths;
// returns match_of_left[x] = arc index, or an empty vector if none exists.
std::vector<int> perfect_matching(int n, const std::vector<std::vector<int>>& out_arcs,
                                  const std::vector<Arc>& arcs, const std::vector<char>& alive) {
  std::vector<int> left_arc(static_cast<std::size_t>(n), -1);
  std::vector<int> right_arc(static_cast<std::size_t>(n), -1);
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);

  // Iterative DFS for an augmenting path from a free left vertex.
  auto augment = [&](int root, int round) {
    struct Frame {
      int x;
      std::size_t k;
      int via;  // arc that reached x, -1 at the root
    };
    std::vector<Frame> stack{{root, 0, -1}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.k == out_arcs[f.x].size()) {
        stack.pop_back();
        continue;
      }
      const int a = out_arcs[f.x][f.k++];
      if (!alive[a]) {
        continue;
      }
      const int y = arcs[a].to;
      if (stamp[y] == round) {
        continue;
      }
      stamp[y] = round;
      if (right_arc[y] < 0) {
        // Flip the path: each frame's left vertex takes the arc it explored.
        int arc = a;
        for (std::size_t i = stack.size(); i-- > 0;) {
          left_arc[stack[i].x] = arc;
          right_arc[arcs[arc].to] = arc;
          arc = stack[i].via;
        }
        return true;
      }
      const int x2 = arcs[right_arc[y]].from;
      stack.push_back({x2, 0, a});
    }
    return false;
  };

  for (int x = 0; x < n; ++x) {
    if (!augment(x, x)) {
      return {};
    }
  }
  return left_arc;
}

}  // namespace

Graph c5_blowup(int k) {
  if (k < 5 || k % 5 != 0) {
    throw std::invalid_argument("c5_blowup needs a positive multiple of 5, got " + std::to_string(k));
  }
  const int s = k / 5;
  Graph g(k);
  for (int p = 0; p < 5; ++p) {
    const int q = (p + 1) % 5;
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        g.add_edge(p * s + i, q * s + j);
      }
    }
  }
  return g;
}

TwoFactorDecomposition two_factorize(const Graph& g) {
  const auto degree = regular_degree(g);
  if (g.order() == 0 || !degree || *degree == 0 || *degree % 2 != 0) {
    throw std::invalid_argument("two_factorize needs a 2j-regular graph with j >= 1");
  }
  const int n = g.order();
  const int j = *degree / 2;
  const std::vector<Arc> arcs = euler_orientation(g);
  std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out_arcs[arcs[a].from].push_back(static_cast<int>(a));
  }
  std::vector<char> alive(arcs.size(), 1);

  TwoFactorDecomposition dec;
  dec.order = n;
  for (int round = 0; round < j; ++round) {
    const auto match = perfect_matching(n, out_arcs, arcs, alive);
    if (match.empty()) {
      throw std::logic_error("two_factorize: regular bipartite graph without perfect matching");
    }
    std::vector<Edge> factor;
    factor.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      alive[match[x]] = 0;
      factor.push_back(make_edge(arcs[match[x]].from, arcs[match[x]].to));
    }
    std::sort(factor.begin(), factor.end());
    dec.factors.push_back(std::move(factor));
  }
  return dec;
}

bool verify_two_factorization(const Graph& g, const TwoFactorDecomposition& dec) {
  if (dec.order != g.order()) {
    return false;
  }
  Graph covered(g.order());
  for (const auto& factor : dec.factors) {
    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : factor) {
      if (!g.has_edge(e.u, e.v) || covered.has_edge(e.u, e.v)) {
        return false;
      }
      covered.add_edge(e);
      ++degree[e.u];
      ++degree[e.v];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) {
      return false;
    }
  }
  return covered.edge_count() == g.edge_count();
}

Graph h_kr(int k, int r, std::uint64_t seed) {
  if (k < 5 || k % 5 != 0) {
    throw std::invalid_argument("h_kr needs k to be a positive multiple of 5, got " + std::to_string(k));
  }
  if (r < 0 || r % 2 != 0 || 5 * r > 2 * k) {
    throw std::invalid_argument("h_kr needs an even r in 0.." + std::to_string(2 * k / 5) + ", got " +
                                std::to_string(r));
  }
  Graph g = c5_blowup(k);
  const int deletions = k / 5 - r / 2;
  if (deletions == 0) {
    return g;
  }
  auto dec = two_factorize(g);
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(std::span<std::vector<Edge>>(dec.factors));
  }
  for (int i = 0; i < deletions; ++i) {
    for (const Edge& e : dec.factors[static_cast<std::size_t>(i)]) {
      g.remove_edge(e.u, e.v);
    }
  }
  return g;
}

}  // namespace regram
