#include "regram/certificate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace regram {

AlphaMode parse_alpha_mode(std::string_view text) {
  if (text == "exact") {
    return AlphaMode::exact;
  }
  if (text == "greedy") {
    return AlphaMode::greedy;
  }
  throw std::invalid_argument("alpha mode must be exact or greedy, got '" + std::string(text) + "'");
}

std::optional<double> sqrt_n_log_n_ratio(int alpha, int n) {
  if (n <= 1) {
    return std::nullopt;
  }
  return alpha / std::sqrt(n * std::log(static_cast<double>(n)));
}

ConstructionCertificate certify(const Graph& g, const CertifyOptions& options,
                                nlohmann::ordered_json params) {
  ConstructionCertificate cert;
  cert.n = g.order();
  if (cert.n > 0) {
    cert.max_degree = max_degree(g);
    cert.min_degree = min_degree(g);
  }
  cert.r = regular_degree(g);
  cert.regular = cert.r.has_value();
  cert.triangle_free = is_triangle_free(g);
  if (options.alpha == AlphaMode::exact) {
    cert.alpha = independence_number_exact(g, options.budget);
  } else {
    cert.alpha.witness = heuristic_independent_set(g);
    cert.alpha.lower = static_cast<int>(cert.alpha.witness.size());
  }
  if (!is_independent_set(g, cert.alpha.witness)) {
    throw std::logic_error("certify: alpha witness is not independent");
  }
  cert.ratio_lower = sqrt_n_log_n_ratio(cert.alpha.lower, cert.n);
  if (cert.alpha.upper) {
    cert.ratio_upper = sqrt_n_log_n_ratio(*cert.alpha.upper, cert.n);
  }
  cert.constant_target = options.constant_target;
  cert.params = std::move(params);
  return cert;
}

nlohmann::ordered_json to_json(const ConstructionCertificate& cert) {
  using json = nlohmann::ordered_json;
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["n"] = cert.n;
  j["r"] = opt(cert.r);
  j["regular"] = cert.regular;
  j["triangle_free"] = cert.triangle_free;
  j["alpha_lower"] = cert.alpha.lower;
  j["alpha_upper"] = opt(cert.alpha.upper);
  j["alpha_exact"] = cert.alpha.exact;
  j["ratio_lower"] = opt(cert.ratio_lower);
  j["ratio_upper"] = opt(cert.ratio_upper);
  j["witness"] = cert.alpha.witness;
  j["params"] = cert.params;
  j["max_degree"] = cert.max_degree;
  j["min_degree"] = cert.min_degree;
  j["alpha_nodes"] = cert.alpha.nodes;
  if (cert.constant_target) {
    const auto ratio = cert.ratio_upper ? cert.ratio_upper : cert.ratio_lower;
    j["constant_target"] = *cert.constant_target;
    j["within_target"] = ratio ? json(*ratio <= *cert.constant_target) : json(nullptr);
  }
  return j;
}

}  // namespace regram
