#include "regram/equitable_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "regram/rng.hpp"

namespace regram {
namespace {

constexpr int kMaxAttempts = 32;

// Incrementally maintained colouring of a graph whose edges arrive one at a
// time. nb(v, c) counts v's neighbours in class c; wit(x, y) counts vertices
// of class x with no neighbour in class y, so x -> y is an arc of the
// accessibility digraph iff wit(x, y) > 0.
class Recolorer {
 public:
  Recolorer(int n, int colors, const std::vector<int>& allocation_order,
            EquitableColoringStats& stats)
      : n_(n),
        r_(colors),
        adj_(static_cast<std::size_t>(n)),
        color_(static_cast<std::size_t>(n)),
        members_(static_cast<std::size_t>(colors)),
        pos_(static_cast<std::size_t>(n)),
        nb_(static_cast<std::size_t>(n) * colors, 0),
        wit_(static_cast<std::size_t>(colors) * colors, 0),
        stats_(stats) {
    for (std::size_t i = 0; i < allocation_order.size(); ++i) {
      const int v = allocation_order[i];
      const int c = static_cast<int>(i % static_cast<std::size_t>(r_));
      color_[v] = c;
      pos_[v] = static_cast<int>(members_[c].size());
      members_[c].push_back(v);
    }
    for (int x = 0; x < r_; ++x) {
      for (int y = 0; y < r_; ++y) {
        wit(x, y) = static_cast<int>(members_[x].size());
      }
    }
  }

  // Adds edge uv and restores an equitable colouring. False means the repair
  // hit a configuration it does not handle; the caller restarts.
  bool insert_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    if (++nb(u, color_[v]) == 1) {
      --wit(color_[u], color_[v]);
    }
    if (++nb(v, color_[u]) == 1) {
      --wit(color_[v], color_[u]);
    }
    if (color_[u] != color_[v]) {
      return true;
    }
    ++stats_.conflicts;
    const int from = color_[u];
    int to = -1;
    for (int c = 0; c < r_ && to < 0; ++c) {
      if (nb(u, c) == 0) {
        to = c;
      }
    }
    if (to < 0) {
      throw std::logic_error("equitable_color: vertex degree exceeds colors - 1");
    }
    change_color(u, to);
    return repair(from, to, std::vector<char>(static_cast<std::size_t>(r_), 1));
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  int& nb(int v, int c) { return nb_[static_cast<std::size_t>(v) * r_ + c]; }
  int& wit(int x, int y) { return wit_[static_cast<std::size_t>(x) * r_ + y]; }

  void change_color(int u, int to) {
    const int from = color_[u];
    for (int k = 0; k < r_; ++k) {
      if (nb(u, k) == 0) {
        --wit(from, k);
        ++wit(to, k);
      }
    }
    for (int v : adj_[u]) {
      if (--nb(v, from) == 0) {
        ++wit(color_[v], from);
      }
      if (++nb(v, to) == 1) {
        --wit(color_[v], to);
      }
    }
    auto& src = members_[from];
    const int last = src.back();
    src[pos_[u]] = last;
    pos_[last] = pos_[u];
    src.pop_back();
    color_[u] = to;
    pos_[u] = static_cast<int>(members_[to].size());
    members_[to].push_back(u);
  }

  // Moves one vertex along each arc of the path from -> next[from] -> ... -> to.
  void shift_along(int from, const std::vector<int>& next, int to) {
    int x = from;
    while (x != to) {
      const int y = next[x];
      int mover = -1;
      for (int w : members_[x]) {
        if (nb(w, y) == 0) {
          mover = w;
          break;
        }
      }
      if (mover < 0) {
        throw std::logic_error("equitable_color: accessibility arc without a witness");
      }
      change_color(mover, y);
      x = y;
    }
  }

  // Classes of `family` that reach `target` without passing through `banned`
  // (-1 for none); toward[x] is the next class on such a path.
  void reach(int target, int banned, const std::vector<char>& family, std::vector<char>& in,
             std::vector<int>& toward, std::vector<int>* order = nullptr) {
    in.assign(static_cast<std::size_t>(r_), 0);
    toward.assign(static_cast<std::size_t>(r_), -1);
    std::vector<int> queue{target};
    in[target] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int y = queue[i];
      for (int x = 0; x < r_; ++x) {
        if (family[x] && !in[x] && x != banned && wit(x, y) > 0) {
          in[x] = 1;
          toward[x] = y;
          queue.push_back(x);
        }
      }
    }
    if (order != nullptr) {
      *order = std::move(queue);
    }
  }

  // Restores equitability inside `family` where every class has size s
  // except `minus` (s - 1) and `plus` (s + 1).
  bool repair(int minus, int plus, std::vector<char> family) {
    std::vector<char> accessible;
    std::vector<int> toward;
    std::vector<int> order;
    reach(minus, -1, family, accessible, toward, &order);
    if (accessible[plus]) {
      shift_along(plus, toward, minus);
      ++stats_.direct_shifts;
      return true;
    }

    std::vector<char> rest(static_cast<std::size_t>(r_), 0);  // inaccessible classes
    for (int c = 0; c < r_; ++c) {
      rest[c] = family[c] && !accessible[c];
    }

    // reach_without[W]: accessible classes that still reach `minus` with W
    // removed, computed on demand.
    std::vector<std::vector<char>> avoid_in(static_cast<std::size_t>(r_));
    std::vector<std::vector<int>> avoid_toward(static_cast<std::size_t>(r_));
    auto avoiding = [&](int w_class) {
      if (avoid_in[w_class].empty()) {
        reach(minus, w_class, family, avoid_in[w_class], avoid_toward[w_class]);
      }
    };

    // Solo move: w in W is the only neighbour in W of some inaccessible y,
    // and w can step into an accessible class X that reaches `minus`
    // without W.
    for (std::size_t idx = order.size(); idx-- > 1;) {
      const int w_class = order[idx];
      for (int w : members_[w_class]) {
        int y = -1;
        for (int v : adj_[w]) {
          if (rest[color_[v]] && nb(v, w_class) == 1) {
            y = v;
            break;
          }
        }
        if (y < 0) {
          continue;
        }
        avoiding(w_class);
        int x_class = -1;
        for (int c = 0; c < r_; ++c) {
          if (c != w_class && accessible[c] && avoid_in[w_class][c] && nb(w, c) == 0) {
            x_class = c;
            break;
          }
        }
        if (x_class < 0) {
          continue;
        }
        const int y_class = color_[y];
        change_color(w, x_class);
        shift_along(x_class, avoid_toward[w_class], minus);
        change_color(y, w_class);
        ++stats_.solo_moves;
        if (y_class == plus) {
          return true;
        }
        return repair(y_class, plus, rest);
      }
    }

    // Shared solo neighbour. Terminal classes are accessible classes whose
    // removal leaves every other accessible class able to reach `minus`.
    std::vector<char> terminal(static_cast<std::size_t>(r_), 0);
    int terminal_count = 0;
    for (std::size_t idx = order.size(); idx-- > 1;) {
      const int w_class = order[idx];
      avoiding(w_class);
      bool all = true;
      for (int c : order) {
        if (c != w_class && !avoid_in[w_class][c]) {
          all = false;
          break;
        }
      }
      if (all) {
        terminal[w_class] = 1;
        ++terminal_count;
      }
    }

    // Classes reachable from `plus`; pred[z] precedes z on such a path.
    std::vector<char> from_plus(static_cast<std::size_t>(r_), 0);
    std::vector<int> pred(static_cast<std::size_t>(r_), -1);
    std::vector<int> plus_order{plus};
    from_plus[plus] = 1;
    for (std::size_t i = 0; i < plus_order.size(); ++i) {
      const int x = plus_order[i];
      for (int z = 0; z < r_; ++z) {
        if (rest[z] && !from_plus[z] && wit(x, z) > 0) {
          from_plus[z] = 1;
          pred[z] = x;
          plus_order.push_back(z);
        }
      }
    }
    if (terminal_count < static_cast<int>(plus_order.size())) {
      return false;
    }

    // Greedy maximal independent set over the classes reachable from
    // `plus`, starting with `plus` itself.
    std::vector<char> blocked(static_cast<std::size_t>(n_), 0);
    std::vector<int> independent;
    for (int c : plus_order) {
      for (int z : members_[c]) {
        if (blocked[z]) {
          continue;
        }
        independent.push_back(z);
        blocked[z] = 1;
        for (int v : adj_[z]) {
          blocked[v] = 1;
        }
      }
    }
    std::vector<int> owner(static_cast<std::size_t>(n_), -1);
    int z1 = -1;
    int shared = -1;
    for (int z : independent) {
      for (int w : adj_[z]) {
        const int w_class = color_[w];
        if (!terminal[w_class] || nb(z, w_class) != 1) {
          continue;
        }
        if (owner[w] >= 0) {
          z1 = owner[w];
          shared = w;
          break;
        }
        owner[w] = z;
      }
      if (shared >= 0) {
        break;
      }
    }
    if (shared < 0) {
      return false;
    }

    const int w_class = color_[shared];
    const int z_class = color_[z1];
    shift_along(w_class, toward, minus);
    std::vector<int> forward(static_cast<std::size_t>(r_), -1);
    for (int c = z_class; c != plus; c = pred[c]) {
      forward[pred[c]] = c;
    }
    shift_along(plus, forward, z_class);
    ++stats_.shared_solo_moves;

    if (color_[shared] != w_class) {
      // The shift already carried w out of its class.
      if (nb(z1, w_class) != 0) {
        return false;
      }
      change_color(z1, w_class);
      return true;
    }
    change_color(z1, w_class);
    std::vector<char> sub = rest;
    sub[w_class] = 1;
    int dest = -1;
    for (int c = 0; c < r_; ++c) {
      if (sub[c] && c != w_class && nb(shared, c) == 0) {
        dest = c;
        break;
      }
    }
    if (dest < 0) {
      return false;
    }
    change_color(shared, dest);
    return repair(w_class, dest, std::move(sub));
  }

  int n_;
  int r_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
  std::vector<std::vector<int>> members_;
  std::vector<int> pos_;
  std::vector<int> nb_;
  std::vector<int> wit_;
  EquitableColoringStats& stats_;
};

bool is_equitable_map(const Graph& g, const std::vector<int>& color_of, int colors) {
  if (static_cast<int>(color_of.size()) != g.order() || colors < 1) {
    return false;
  }
  std::vector<int> sizes(static_cast<std::size_t>(colors), 0);
  for (int c : color_of) {
    if (c < 0 || c >= colors) {
      return false;
    }
    ++sizes[c];
  }
  for (const Edge& e : g.edges()) {
    if (color_of[e.u] == color_of[e.v]) {
      return false;
    }
  }
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

}  // namespace

EquitableColoring coloring_from_map(std::vector<int> color_of, int colors) {
  EquitableColoring out;
  out.colors = colors;
  out.classes.resize(static_cast<std::size_t>(std::max(colors, 0)));
  for (std::size_t v = 0; v < color_of.size(); ++v) {
    const int c = color_of[v];
    if (c < 0 || c >= colors) {
      throw std::invalid_argument("colour " + std::to_string(c) + " outside 0.." +
                                  std::to_string(colors - 1));
    }
    out.classes[c].push_back(static_cast<int>(v));
  }
  out.color_of = std::move(color_of);
  return out;
}

EquitableColoring equitable_color(const Graph& g, int colors, std::uint64_t seed,
                                  EquitableColoringStats* stats) {
  if (colors < 1) {
    throw std::invalid_argument("equitable_color needs at least one colour");
  }
  const int n = g.order();
  if (n > 0 && colors <= max_degree(g)) {
    throw std::invalid_argument("equitable_color needs colors >= max degree + 1 (" +
                                std::to_string(colors) + " <= " + std::to_string(max_degree(g)) +
                                ")");
  }
  EquitableColoringStats local;
  EquitableColoringStats& st = stats != nullptr ? *stats : local;
  st = {};

  // Pad with a clique K_p so the order is a multiple of `colors`; its
  // vertices land in distinct classes and are dropped at the end.
  const int pad = (colors - n % colors) % colors;
  const int total = n + pad;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> order(static_cast<std::size_t>(total));
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0 || attempt != 0) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
      rng.shuffle(std::span<int>(order));
    }
    Recolorer rec(total, colors, order, st);
    bool ok = true;
    for (int u : order) {
      if (u < n) {
        for (int v : g.neighbors(u)) {
          if (v > u && !(ok = rec.insert_edge(u, v))) {
            break;
          }
        }
      } else {
        for (int v = u + 1; v < total && ok; ++v) {
          ok = rec.insert_edge(u, v);
        }
      }
      if (!ok) {
        break;
      }
    }
    if (ok) {
      std::vector<int> color_of(rec.colors().begin(), rec.colors().begin() + n);
      if (is_equitable_map(g, color_of, colors)) {
        return coloring_from_map(std::move(color_of), colors);
      }
    }
    ++st.restarts;
  }
  throw std::runtime_error("equitable_color: repair failed after " + std::to_string(kMaxAttempts) +
                           " insertion orders");
}

bool verify_equitable(const Graph& g, const EquitableColoring& coloring) {
  if (!is_equitable_map(g, coloring.color_of, coloring.colors)) {
    return false;
  }
  if (static_cast<int>(coloring.classes.size()) != coloring.colors) {
    return false;
  }
  std::size_t seen = 0;
  for (int c = 0; c < coloring.colors; ++c) {
    const auto& members = coloring.classes[c];
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int v = members[i];
      if (v < 0 || v >= g.order() || coloring.color_of[v] != c ||
          (i > 0 && members[i] <= members[i - 1])) {
        return false;
      }
    }
    seen += members.size();
  }
  return seen == coloring.color_of.size();
}

}  // namespace regram
