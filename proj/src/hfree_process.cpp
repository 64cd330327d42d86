#include "regram/hfree_process.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "regram/kernels.hpp"
#include "regram/rng.hpp"

namespace regram {
namespace {

constexpr int kMaxPatternOrder = 8;

// Degree extremes of a graph whose degrees only grow.
class DegreeTracker {
 public:
  explicit DegreeTracker(int n) : degree_(static_cast<std::size_t>(n), 0), count_(static_cast<std::size_t>(n) + 1, 0) {
    count_[0] = n;
  }

  void bump(int v) {
    --count_[degree_[v]];
    ++count_[++degree_[v]];
    max_ = std::max(max_, degree_[v]);
    while (count_[min_] == 0) {
      ++min_;
    }
  }

  int max() const { return max_; }
  int min() const { return min_; }

 private:
  std::vector<int> degree_;
  std::vector<int> count_;
  int max_ = 0;
  int min_ = 0;
};

// Extends a partial embedding of H into g + e vertex by vertex in `order`.
class Embedder {
 public:
  Embedder(const Graph& g, Edge e, const Graph& h, std::vector<int> order)
      : g_(g), e_(e), h_(h), order_(std::move(order)),
        image_(static_cast<std::size_t>(h.order()), -1),
        used_(static_cast<std::size_t>(g.order()), 0) {}

  bool run(int a, int b) {
    image_[a] = e_.u;
    image_[b] = e_.v;
    used_[e_.u] = used_[e_.v] = 1;
    const bool found = extend(2);
    used_[e_.u] = used_[e_.v] = 0;
    image_[a] = image_[b] = -1;
    return found;
  }

 private:
  bool adjacent(int x, int y) const {
    return g_.has_edge(x, y) || (std::min(x, y) == e_.u && std::max(x, y) == e_.v);
  }

  bool fits(int hv, int x) const {
    for (int hw : h_.neighbors(hv)) {
      if (image_[hw] >= 0 && !adjacent(x, image_[hw])) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const int hv = order_[depth];
    // A mapped neighbour restricts the candidates to its neighbourhood.
    int anchor = -1;
    for (int hw : h_.neighbors(hv)) {
      if (image_[hw] >= 0) {
        anchor = image_[hw];
        break;
      }
    }
    auto try_vertex = [&](int x) {
      if (used_[x] || !fits(hv, x)) {
        return false;
      }
      image_[hv] = x;
      used_[x] = 1;
      const bool ok = extend(depth + 1);
      used_[x] = 0;
      image_[hv] = -1;
      return ok;
    };
    if (anchor >= 0) {
      for (int x : g_.neighbors(anchor)) {
        if (try_vertex(x)) {
          return true;
        }
      }
      const int other = anchor == e_.u ? e_.v : anchor == e_.v ? e_.u : -1;
      return other >= 0 && try_vertex(other);
    }
    for (int x = 0; x < g_.order(); ++x) {
      if (try_vertex(x)) {
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  Edge e_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
};

// H's vertices with a and b first, then breadth-first so that each later
// vertex tends to have a mapped neighbour.
std::vector<int> search_order(const Graph& h, int a, int b) {
  std::vector<int> order{a, b};
  std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
  seen[a] = seen[b] = 1;
  for (std::size_t i = 0; i < order.size() || order.size() < static_cast<std::size_t>(h.order()); ++i) {
    if (i == order.size()) {
      for (int v = 0; v < h.order(); ++v) {
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
          break;
        }
      }
    }
    for (int w : h.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

ProcessResult run_triangle_process(int n, std::uint64_t seed) {
  ProcessResult out;
  out.seed = seed;
  Graph g(n);
  Rng rng(seed);
  DegreeTracker degrees(n);

  // Open pairs as a dense array plus the position of each pair u*n+v (u<v).
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::int64_t> open;
  open.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  std::vector<std::int64_t> where(nn, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::int64_t key = static_cast<std::int64_t>(u) * n + v;
      where[static_cast<std::size_t>(key)] = static_cast<std::int64_t>(open.size());
      open.push_back(key);
    }
  }
  auto close = [&](int a, int b) {
    const std::int64_t key = static_cast<std::int64_t>(std::min(a, b)) * n + std::max(a, b);
    const std::int64_t at = where[static_cast<std::size_t>(key)];
    if (at < 0) {
      return;
    }
    const std::int64_t last = open.back();
    open[static_cast<std::size_t>(at)] = last;
    where[static_cast<std::size_t>(last)] = at;
    open.pop_back();
    where[static_cast<std::size_t>(key)] = -1;
  };

  while (!open.empty()) {
    const std::int64_t key = open[static_cast<std::size_t>(rng.below(open.size()))];
    const int u = static_cast<int>(key / n);
    const int v = static_cast<int>(key % n);
    close(u, v);
    for (int w : g.neighbors(v)) {
      close(u, w);
    }
    for (int w : g.neighbors(u)) {
      close(v, w);
    }
    g.add_edge(u, v);
    degrees.bump(u);
    degrees.bump(v);
    out.edges.push_back({u, v});
    out.trajectory.push_back({static_cast<int>(out.edges.size()), degrees.max(), degrees.min(),
                              static_cast<std::int64_t>(open.size())});
  }
  out.steps = static_cast<int>(out.edges.size());
  out.final_graph = std::move(g);
  return out;
}

ProcessResult run_generic_process(int n, const ForbiddenPattern& h, std::uint64_t seed) {
  ProcessResult out;
  out.seed = seed;
  Graph g(n);
  Rng rng(seed);
  DegreeTracker degrees(n);
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      candidates.push_back({u, v});
    }
  }
  // Legality only ever goes from legal to illegal, so a stable filter keeps
  // exactly the pairs that are legal now.
  auto purge = [&] {
    std::erase_if(candidates, [&](const Edge& e) { return creates_copy(g, e, h); });
  };
  purge();
  while (!candidates.empty()) {
    const auto at = static_cast<std::size_t>(rng.below(candidates.size()));
    const Edge e = candidates[at];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(at));
    g.add_edge(e);
    degrees.bump(e.u);
    degrees.bump(e.v);
    out.edges.push_back(e);
    purge();
    out.trajectory.push_back({static_cast<int>(out.edges.size()), degrees.max(), degrees.min(),
                              static_cast<std::int64_t>(candidates.size())});
  }
  out.steps = static_cast<int>(out.edges.size());
  out.final_graph = std::move(g);
  return out;
}

}  // namespace

ForbiddenPattern::ForbiddenPattern(Graph h) : h_(std::move(h)) {
  if (h_.order() < 1 || h_.order() > kMaxPatternOrder) {
    throw std::invalid_argument("forbidden pattern needs 1.." + std::to_string(kMaxPatternOrder) +
                                " vertices");
  }
  if (h_.edge_count() == 0) {
    throw std::invalid_argument("forbidden pattern needs at least one edge");
  }
  triangle_ = h_.order() == 3 && h_.edge_count() == 3;
}

ForbiddenPattern ForbiddenPattern::triangle() { return ForbiddenPattern(complete_graph(3)); }

ForbiddenPattern ForbiddenPattern::parse(std::string_view name) {
  int k = 0;
  if (name.size() >= 2) {
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc() && ptr == name.data() + name.size()) {
      switch (name[0]) {
        case 'K':
          return ForbiddenPattern(complete_graph(k));
        case 'C':
          if (k >= 3) {
            return ForbiddenPattern(cycle_graph(k));
          }
          break;
        case 'P':
          return ForbiddenPattern(path_graph(k));
        default:
          break;
      }
    }
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "' (use K<k>, C<k> or P<k>)");
}

bool creates_copy(const Graph& g, Edge e, const ForbiddenPattern& h) {
  if (e.u > e.v) {
    std::swap(e.u, e.v);
  }
  if (g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("creates_copy: edge already present");
  }
  if (e.u < 0 || e.v >= g.order() || e.u == e.v) {
    throw std::out_of_range("creates_copy: bad edge");
  }
  if (h.is_triangle()) {
    return have_common_neighbor(g, e.u, e.v);
  }
  const Graph& hg = h.graph();
  if (hg.order() > g.order()) {
    return false;
  }
  for (const Edge& he : hg.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int a = flip ? he.v : he.u;
      const int b = flip ? he.u : he.v;
      Embedder emb(g, e, hg, search_order(hg, a, b));
      if (emb.run(a, b)) {
        return true;
      }
    }
  }
  return false;
}

ProcessResult run_process(int n, const ForbiddenPattern& h, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("run_process needs n >= 1");
  }
  return h.is_triangle() ? run_triangle_process(n, seed) : run_generic_process(n, h, seed);
}

std::int64_t open_pairs_count(const Graph& g) {
  if (!is_triangle_free(g)) {
    throw std::invalid_argument("open_pairs_count: graph has a triangle");
  }
  return kernels::count_open_pairs(g);
}

bool is_maximal(const Graph& g, const ForbiddenPattern& h) {
  if (h.is_triangle()) {
    return kernels::count_open_pairs(g) == 0;
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && !creates_copy(g, {u, v}, h)) {
        return false;
      }
    }
  }
  return true;
}

Graph replay(const ProcessResult& run, int steps) {
  if (steps < 0 || steps > run.steps) {
    throw std::out_of_range("replay: step " + std::to_string(steps) + " outside 0.." +
                            std::to_string(run.steps));
  }
  Graph g(run.final_graph.order());
  for (int i = 0; i < steps; ++i) {
    g.add_edge(run.edges[static_cast<std::size_t>(i)]);
  }
  return g;
}

}  // namespace regram
