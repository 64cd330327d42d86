#include "regram/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <vector>

namespace regram::kernels {

bool is_triangle_free(const Graph& g) {
  const int n = g.order();
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 64)
  for (int u = 0; u < n; ++u) {
    if (found.load(std::memory_order_relaxed)) {
      continue;
    }
    for (int v : g.neighbors(u)) {
      if (v > u && have_common_neighbor(g, u, v)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return !found.load();
}

std::int64_t count_open_pairs(const Graph& g) {
  const int n = g.order();
  std::int64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    // stamp[w] == u + 1 marks w as within distance two of u.
    std::vector<int> stamp(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic, 32)
    for (int u = 0; u < n; ++u) {
      const int mark = u + 1;
      int closed_above = 0;
      auto touch = [&](int w) {
        if (w > u && stamp[w] != mark) {
          stamp[w] = mark;
          ++closed_above;
        }
      };
      for (int v : g.neighbors(u)) {
        touch(v);
        for (int w : g.neighbors(v)) {
          touch(w);
        }
      }
      total += (n - 1 - u) - closed_above;
    }
  }
  return total;
}

namespace serial {

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (int w : g.neighbors(e.u)) {
      if (g.has_edge(w, e.v)) {
        return false;
      }
    }
  }
  return true;
}

std::int64_t count_open_pairs(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && !have_common_neighbor(g, u, v)) {
        ++total;
      }
    }
  }
  return total;
}

}  // namespace serial
}  // namespace regram::kernels
