#include "regram/independence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include "regram/rng.hpp"

namespace regram {
namespace {

constexpr int kHeuristicRuns = 8;

using Word = std::uint64_t;

// Bitset view of g with vertices renumbered by ascending degree, which puts
// the vertices most likely to sit in a large independent set first.
class Bitgraph {
 public:
  explicit Bitgraph(const Graph& g)
      : n_(g.order()), words_((n_ + 63) / 64), order_(static_cast<std::size_t>(n_)),
        position_(static_cast<std::size_t>(n_)) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int i = 0; i < n_; ++i) {
      position_[order_[i]] = i;
    }
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    non_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      Word* a = row(adj_, i);
      for (int w : g.neighbors(order_[i])) {
        const int j = position_[w];
        a[j / 64] |= Word{1} << (j % 64);
      }
      Word* na = row(non_, i);
      for (int k = 0; k < words_; ++k) {
        na[k] = ~a[k];
      }
      na[i / 64] &= ~(Word{1} << (i % 64));
      if (n_ % 64 != 0) {
        na[words_ - 1] &= (Word{1} << (n_ % 64)) - 1;
      }
    }
  }

  int order() const { return n_; }
  int words() const { return words_; }
  int vertex(int pos) const { return order_[pos]; }
  int position(int v) const { return position_[v]; }
  const Word* adj(int i) const { return adj_.data() + static_cast<std::size_t>(i) * words_; }
  const Word* non(int i) const { return non_.data() + static_cast<std::size_t>(i) * words_; }

 private:
  Word* row(std::vector<Word>& m, int i) { return m.data() + static_cast<std::size_t>(i) * words_; }

  int n_;
  int words_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<Word> adj_;
  std::vector<Word> non_;
};

// Greedy cover of P by cliques of g: each round starts a class at the
// lowest candidate and keeps only common neighbours. Vertices come out in
// class order with their class number, which bounds how many of the
// vertices up to that point an independent set can use.
void cover_sort(const Bitgraph& bg, const Word* p, std::vector<Word>& scratch_u,
                std::vector<Word>& scratch_q, std::vector<int>& verts, std::vector<int>& bound) {
  const int w = bg.words();
  verts.clear();
  bound.clear();
  scratch_u.assign(p, p + w);
  scratch_q.resize(static_cast<std::size_t>(w));
  int k = 0;
  int lo = 0;  // first word of U that may be non-zero
  while (true) {
    while (lo < w && scratch_u[lo] == 0) {
      ++lo;
    }
    if (lo == w) {
      break;
    }
    ++k;
    std::copy(scratch_u.begin(), scratch_u.end(), scratch_q.begin());
    for (int i = lo; i < w;) {
      if (scratch_q[i] == 0) {
        ++i;
        continue;
      }
      const int v = i * 64 + std::countr_zero(scratch_q[i]);
      scratch_u[i] &= ~(Word{1} << (v % 64));
      const Word* a = bg.adj(v);
      for (int j = i; j < w; ++j) {
        scratch_q[j] &= a[j];
      }
      verts.push_back(v);
      bound.push_back(k);
    }
  }
}

class Search {
 public:
  Search(const Bitgraph& bg, std::int64_t budget, std::atomic<std::int64_t>* shared_nodes,
         std::atomic<bool>* abort)
      : bg_(bg), budget_(budget), shared_(shared_nodes), abort_(abort) {
    // Depth never exceeds the order; fixed storage keeps references stable.
    const auto levels = static_cast<std::size_t>(bg.order()) + 2;
    cand_.assign(levels, std::vector<Word>(static_cast<std::size_t>(bg.words()), 0));
    verts_.resize(levels);
    bound_.resize(levels);
  }

  void set_incumbent(const std::vector<int>& positions) {
    best_ = positions;
  }
  const std::vector<int>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

  // Explores the subtree with `cur` fixed and candidate set p.
  bool run(std::vector<int> cur, const Word* p) {
    cur_ = std::move(cur);
    std::copy(p, p + bg_.words(), cand_[0].begin());
    if (empty(cand_[0].data())) {
      if (cur_.size() > best_.size()) {
        best_ = cur_;
      }
      return true;
    }
    return expand(0);
  }

 private:
  bool empty(const Word* p) const {
    for (int k = 0; k < bg_.words(); ++k) {
      if (p[k] != 0) {
        return false;
      }
    }
    return true;
  }

  bool charge() {
    ++nodes_;
    if (shared_ != nullptr) {
      if (shared_->fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
        abort_->store(true, std::memory_order_relaxed);
      }
      if (abort_->load(std::memory_order_relaxed)) {
        aborted_ = true;
      }
    } else if (nodes_ > budget_) {
      aborted_ = true;
    }
    return !aborted_;
  }

  bool expand(std::size_t depth) {
    if (!charge()) {
      return false;
    }
    Word* p = cand_[depth].data();
    cover_sort(bg_, p, scratch_u_, scratch_q_, verts_[depth], bound_[depth]);
    const auto& verts = verts_[depth];
    const auto& bound = bound_[depth];
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cur_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) {
        return true;
      }
      const int v = verts[i];
      cur_.push_back(v);
      Word* next = cand_[depth + 1].data();
      const Word* non = bg_.non(v);
      bool any = false;
      for (int k = 0; k < bg_.words(); ++k) {
        next[k] = p[k] & non[k];
        any = any || next[k] != 0;
      }
      if (!any) {
        if (cur_.size() > best_.size()) {
          best_ = cur_;
        }
      } else if (!expand(depth + 1)) {
        cur_.pop_back();
        return false;
      }
      cur_.pop_back();
      p[v / 64] &= ~(Word{1} << (v % 64));
    }
    return true;
  }

  const Bitgraph& bg_;
  std::int64_t budget_;
  std::atomic<std::int64_t>* shared_;
  std::atomic<bool>* abort_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> cur_;
  std::vector<int> best_;
  std::vector<std::vector<Word>> cand_;
  std::vector<std::vector<int>> verts_;
  std::vector<std::vector<int>> bound_;
  std::vector<Word> scratch_u_;
  std::vector<Word> scratch_q_;
};

std::vector<int> to_vertices(const Bitgraph& bg, const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) {
    out.push_back(bg.vertex(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> to_positions(const Bitgraph& bg, const std::vector<int>& vertices) {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (int v : vertices) {
    out.push_back(bg.position(v));
  }
  return out;
}

// (1,2)-swaps: drop x from S and add two non-adjacent neighbours of x whose
// only neighbour in S is x. Each swap grows S by one.
void improve_by_swaps(const Graph& g, std::vector<int>& set) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> tight(static_cast<std::size_t>(n), 0);
  auto add = [&](int v) {
    in[v] = 1;
    for (int w : g.neighbors(v)) {
      ++tight[w];
    }
  };
  auto remove = [&](int v) {
    in[v] = 0;
    for (int w : g.neighbors(v)) {
      --tight[w];
    }
  };
  for (int v : set) {
    add(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!in[v] && tight[v] == 0) {
      add(v);
    }
  }
  std::vector<int> cand;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) {
        continue;
      }
      cand.clear();
      for (int u : g.neighbors(x)) {
        if (tight[u] == 1) {
          cand.push_back(u);
        }
      }
      int a = -1;
      int b = -1;
      for (std::size_t i = 0; i < cand.size() && a < 0; ++i) {
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          if (!g.has_edge(cand[i], cand[j])) {
            a = cand[i];
            b = cand[j];
            break;
          }
        }
      }
      if (a < 0) {
        continue;
      }
      remove(x);
      add(a);
      add(b);
      for (int w : g.neighbors(x)) {
        if (!in[w] && tight[w] == 0) {
          add(w);
        }
      }
      changed = true;
    }
  }
  set.clear();
  for (int v = 0; v < n; ++v) {
    if (in[v]) {
      set.push_back(v);
    }
  }
}

template <bool Parallel>
AlphaResult solve(const Graph& g, std::int64_t budget) {
  AlphaResult out;
  const int n = g.order();
  if (n == 0) {
    out.upper = 0;
    out.exact = true;
    return out;
  }
  const std::vector<int> heuristic = heuristic_independent_set(g);
  const Bitgraph bg(g);
  const std::vector<int> incumbent = to_positions(bg, heuristic);
  const int words = bg.words();

  std::vector<Word> all(static_cast<std::size_t>(words), ~Word{0});
  if (n % 64 != 0) {
    all[words - 1] = (Word{1} << (n % 64)) - 1;
  }

  std::vector<int> best = incumbent;
  bool aborted = false;

  if constexpr (!Parallel) {
    Search s(bg, budget, nullptr, nullptr);
    s.set_incumbent(incumbent);
    aborted = !s.run({}, all.data());
    out.nodes = s.nodes();
    best = s.best();
  } else {
    // The root level: every vertex of the cover order whose bound beats the
    // heuristic opens an independent subtree.
    std::vector<Word> su;
    std::vector<Word> sq;
    std::vector<int> verts;
    std::vector<int> bound;
    cover_sort(bg, all.data(), su, sq, verts, bound);
    std::vector<int> tasks;  // indices into verts, in serial visiting order
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (static_cast<std::size_t>(bound[i]) <= incumbent.size()) {
        break;
      }
      tasks.push_back(static_cast<int>(i));
    }
    const int count = static_cast<int>(tasks.size());
    std::vector<std::vector<int>> found(static_cast<std::size_t>(count));
    std::vector<std::int64_t> nodes(static_cast<std::size_t>(count), 0);
    std::atomic<std::int64_t> shared{1};
    std::atomic<bool> abort{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < count; ++t) {
      if (abort.load(std::memory_order_relaxed)) {
        continue;
      }
      const int i = tasks[t];
      const int v = verts[i];
      std::vector<Word> p(static_cast<std::size_t>(words), 0);
      for (int j = 0; j < i; ++j) {
        p[verts[j] / 64] |= Word{1} << (verts[j] % 64);
      }
      const Word* non = bg.non(v);
      for (int k = 0; k < words; ++k) {
        p[k] &= non[k];
      }
      Search s(bg, budget, &shared, &abort);
      s.set_incumbent(incumbent);
      s.run({v}, p.data());
      nodes[t] = s.nodes();
      found[t] = s.best();
    }
    aborted = abort.load();
    out.nodes = 1 + std::accumulate(nodes.begin(), nodes.end(), std::int64_t{0});
    for (int t = 0; t < count && !aborted; ++t) {
      if (found[t].size() > best.size()) {
        best = found[t];
      }
    }
  }

  if (aborted) {
    // Partial counts depend on scheduling; report the budget that ran out.
    out.nodes = budget;
    out.witness = heuristic;
    out.lower = static_cast<int>(heuristic.size());
    return out;
  }
  out.witness = to_vertices(bg, best);
  out.lower = static_cast<int>(out.witness.size());
  out.upper = out.lower;
  out.exact = true;
  return out;
}

}  // namespace

std::vector<int> greedy_independent_set(const Graph& g, std::uint64_t seed) {
  const int n = g.order();
  std::vector<std::uint64_t> key(static_cast<std::size_t>(n));
  Rng rng(seed);
  for (auto& k : key) {
    k = seed == 0 ? 0 : rng.next();
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
  }
  std::vector<int> out;
  int remaining = n;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && (pick < 0 || degree[v] < degree[pick] ||
                       (degree[v] == degree[pick] && key[v] < key[pick]))) {
        pick = v;
      }
    }
    out.push_back(pick);
    auto kill = [&](int v) {
      alive[v] = 0;
      --remaining;
      for (int w : g.neighbors(v)) {
        --degree[w];
      }
    };
    kill(pick);
    for (int w : g.neighbors(pick)) {
      if (alive[w]) {
        kill(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> heuristic_independent_set(const Graph& g) {
  std::vector<int> best;
  for (int run = 0; run < kHeuristicRuns; ++run) {
    auto set = greedy_independent_set(g, run == 0 ? 0 : derive_seed(0x5eed, static_cast<std::uint64_t>(run)));
    improve_by_swaps(g, set);
    if (set.size() > best.size()) {
      best = std::move(set);
    }
  }
  return best;
}

AlphaResult independence_number_exact(const Graph& g, std::int64_t budget) {
  return solve<true>(g, budget);
}

namespace serial {

AlphaResult independence_number_exact(const Graph& g, std::int64_t budget) {
  return solve<false>(g, budget);
}

}  // namespace serial
}  // namespace regram
