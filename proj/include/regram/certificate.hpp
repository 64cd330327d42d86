#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "regram/graph.hpp"
#include "regram/independence.hpp"

namespace regram {

enum class AlphaMode { exact, greedy };

/// "exact" or "greedy"; throws std::invalid_argument otherwise.
AlphaMode parse_alpha_mode(std::string_view text);

struct CertifyOptions {
  AlphaMode alpha = AlphaMode::exact;
  std::int64_t budget = kDefaultAlphaBudget;
  /// Optional C; the certificate then records whether ratio <= C.
  std::optional<double> constant_target;
};

/// Properties of a graph, all recomputed from the graph itself.
struct ConstructionCertificate {
  int n = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> r;  // common degree when regular
  bool regular = false;
  bool triangle_free = false;
  AlphaResult alpha;
  std::optional<double> ratio_lower;  // alpha.lower / sqrt(n ln n), n >= 2
  std::optional<double> ratio_upper;  // same with alpha.upper
  std::optional<double> constant_target;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

/// alpha / sqrt(n ln n); nullopt for n <= 1 where the denominator vanishes.
std::optional<double> sqrt_n_log_n_ratio(int alpha, int n);

ConstructionCertificate certify(const Graph& g, const CertifyOptions& options = {},
                                nlohmann::ordered_json params = nlohmann::ordered_json::object());

/// Keys n, r, regular, triangle_free, alpha_lower, alpha_upper, alpha_exact,
/// ratio_lower, ratio_upper, witness, params, followed by degree extremes,
/// the search node count and the optional constant check.
nlohmann::ordered_json to_json(const ConstructionCertificate& cert);

}  // namespace regram
