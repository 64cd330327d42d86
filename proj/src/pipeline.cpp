#include "regram/pipeline.hpp"

#include <string>

#include "regram/hfree_process.hpp"
#include "regram/regularizer.hpp"
#include "regram/rng.hpp"
#include "regram/two_factor.hpp"

namespace regram {
namespace {

using json = nlohmann::ordered_json;

// Smallest k = 5 (mod 10) with r <= 2k/5.
int blowup_order_for(int r) {
  int k = 5;
  while (2 * k < 5 * r) {
    k += 10;
  }
  return k;
}

Construction trivial(int n, const PipelineConfig& cfg, const std::string& reason) {
  Construction c;
  c.graph = edgeless_graph(n);
  c.path = "trivial";
  json params;
  params["seed"] = cfg.seed;
  params["reason"] = reason;
  c.certificate = certify(c.graph, cfg.certify, std::move(params));
  return c;
}

json even_params(const EvenBuild& b) {
  json p;
  p["d"] = b.d;
  p["delta_max"] = b.base_delta_max;
  p["delta_min"] = b.base_delta_min;
  p["process_seed"] = b.process_seed;
  p["process_steps"] = b.process_steps;
  p["snapshot_step"] = b.snapshot_step;
  return p;
}

}  // namespace

DPolicy parse_d_policy(std::string_view text) {
  if (text == "minimal") {
    return DPolicy::minimal;
  }
  if (text == "maximal") {
    return DPolicy::maximal;
  }
  throw std::invalid_argument("d policy must be minimal or maximal, got '" + std::string(text) + "'");
}

std::optional<int> choose_slack(int n, int delta_max, int delta_min, DPolicy policy, bool even_degree) {
  if (n < 1) {
    return std::nullopt;
  }
  const int low = delta_max - delta_min;
  const int high = 4 * (n / (delta_max + 1)) / 9;
  if (low > high) {
    return std::nullopt;
  }
  int d = policy == DPolicy::minimal ? low : high;
  if (even_degree && (d + delta_max) % 2 != 0) {
    d += policy == DPolicy::minimal ? 1 : -1;
  }
  if (d < low || d > high) {
    return std::nullopt;
  }
  return d;
}

Graph assemble_even(const Graph& base, int d, std::uint64_t seed) { return regularize(base, d, seed); }

Graph assemble_odd(const Graph& f, int k) {
  const auto r = regular_degree(f);
  if (!r) {
    throw std::invalid_argument("assemble_odd: F is not regular");
  }
  if (*r % 2 != 0 || 5 * *r > 2 * k) {
    throw std::invalid_argument("assemble_odd: degree " + std::to_string(*r) +
                                " is odd or exceeds 2k/5 for k = " + std::to_string(k));
  }
  return disjoint_union(f, h_kr(k, *r));
}

EvenBuild build_even(int n_target, const PipelineConfig& cfg, bool even_degree) {
  if (n_target < 2 || n_target % 2 != 0) {
    throw std::invalid_argument("build_even needs an even order >= 2, got " + std::to_string(n_target));
  }
  if (cfg.max_retries < 1) {
    throw std::invalid_argument("max_retries must be at least 1");
  }
  const int n = n_target / 2;
  const auto pattern = ForbiddenPattern::triangle();
  EvenBuild out;
  std::optional<ProcessResult> first;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt));
    ProcessResult run = run_process(n, pattern, seed);
    out.retries_used = attempt + 1;
    const Graph& g = run.final_graph;
    if (auto d = choose_slack(n, max_degree(g), min_degree(g), cfg.d_policy, even_degree)) {
      out.d = *d;
      out.base_delta_max = max_degree(g);
      out.base_delta_min = min_degree(g);
      out.process_steps = out.snapshot_step = run.steps;
      out.process_seed = seed;
      out.graph = assemble_even(g, *d, derive_seed(seed, 1));
      return out;
    }
    if (!first) {
      first = std::move(run);
    }
  }

  // No final graph qualified: cut the first run at its latest usable step.
  const ProcessResult& run = *first;
  for (int step = run.steps; step >= 0; --step) {
    const int hi = step == 0 ? 0 : run.trajectory[static_cast<std::size_t>(step - 1)].max_degree;
    const int lo = step == 0 ? 0 : run.trajectory[static_cast<std::size_t>(step - 1)].min_degree;
    if (auto d = choose_slack(n, hi, lo, cfg.d_policy, even_degree)) {
      out.d = *d;
      out.base_delta_max = hi;
      out.base_delta_min = lo;
      out.process_steps = run.steps;
      out.snapshot_step = step;
      out.process_seed = run.seed;
      out.graph = assemble_even(replay(run, step), *d, derive_seed(run.seed, 1));
      return out;
    }
  }
  throw ConstructionFailure("no process snapshot admits a slack d for order " + std::to_string(n_target));
}

json to_json(const Construction& c) {
  json j = to_json(c.certificate);
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  j["path"] = c.path;
  j["k"] = opt(c.k);
  j["n0"] = opt(c.n0);
  j["d"] = opt(c.d);
  j["retries_used"] = c.retries_used;
  return j;
}

Construction construct_even(int n_target, const PipelineConfig& cfg) {
  if (n_target < 2 || n_target % 2 != 0) {
    throw std::invalid_argument("construct_even needs an even order >= 2");
  }
  if (n_target < cfg.fallback_below) {
    return trivial(n_target, cfg, "small order");
  }
  EvenBuild b;
  try {
    b = build_even(n_target, cfg, cfg.parity_required);
  } catch (const ConstructionFailure&) {
    if (!cfg.allow_fallback) {
      throw;
    }
    return trivial(n_target, cfg, "construction failed");
  }
  Construction c;
  c.graph = std::move(b.graph);
  c.path = "even";
  c.d = b.d;
  c.retries_used = b.retries_used;
  json params = even_params(b);
  params["seed"] = cfg.seed;
  c.certificate = certify(c.graph, cfg.certify, std::move(params));
  return c;
}

Construction construct_odd(int n_target, const PipelineConfig& cfg) {
  if (n_target < 1 || n_target % 2 == 0) {
    throw std::invalid_argument("construct_odd needs an odd order >= 1");
  }
  if (n_target < cfg.fallback_below || n_target < 7) {
    return trivial(n_target, cfg, "small order");
  }
  try {
    // Pilot on n - 5 vertices estimates the degree F will have.
    std::optional<EvenBuild> pilot = build_even(n_target - 5, cfg, true);
    int k = blowup_order_for(*regular_degree(pilot->graph));
    for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
      if (k > n_target) {
        break;
      }
      if ((n_target - k) % 2 != 0) {
        throw std::logic_error("construct_odd: n - k is odd");
      }
      const int n0 = (n_target - k) / 2;
      Construction c;
      c.path = "odd";
      c.k = k;
      c.n0 = n0;
      c.retries_used = attempt;
      json params;
      params["seed"] = cfg.seed;
      params["k"] = k;
      params["n0"] = n0;
      if (n0 == 0) {
        c.graph = h_kr(k, 2 * k / 5);
        params["r"] = 2 * k / 5;
        c.certificate = certify(c.graph, cfg.certify, std::move(params));
        return c;
      }
      EvenBuild f = 2 * n0 == n_target - 5 && pilot ? std::move(*pilot) : build_even(2 * n0, cfg, true);
      pilot.reset();
      const int r = *regular_degree(f.graph);
      if (5 * r <= 2 * k) {
        c.graph = assemble_odd(f.graph, k);
        c.d = f.d;
        params.update(even_params(f));
        params["r"] = r;
        c.certificate = certify(c.graph, cfg.certify, std::move(params));
        return c;
      }
      k = blowup_order_for(r);
    }
    throw ConstructionFailure("no blow-up order k fits the degree of F for n = " + std::to_string(n_target));
  } catch (const ConstructionFailure&) {
    if (!cfg.allow_fallback) {
      throw;
    }
    return trivial(n_target, cfg, "construction failed");
  }
}

Construction construct(int n_target, const PipelineConfig& cfg) {
  if (n_target < 1) {
    throw std::invalid_argument("construct needs n >= 1");
  }
  return n_target % 2 == 0 ? construct_even(n_target, cfg) : construct_odd(n_target, cfg);
}

}  // namespace regram
