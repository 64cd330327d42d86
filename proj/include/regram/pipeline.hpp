#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "regram/certificate.hpp"
#include "regram/graph.hpp"

namespace regram {

/// How the slack d is picked inside its admissible range.
enum class DPolicy { minimal, maximal };

DPolicy parse_d_policy(std::string_view text);

struct PipelineConfig {
  std::uint64_t seed = 1;
  int max_retries = 8;
  DPolicy d_policy = DPolicy::minimal;
  bool parity_required = false;  // even path only; the odd path always needs it
  CertifyOptions certify;
  bool allow_fallback = true;  // emit the edgeless graph when construction fails
  int fallback_below = 10;     // orders below this are always edgeless
};

class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Slack for a graph with the given order and degree extremes, or nullopt
/// when no admissible d exists (after the parity adjustment, if requested).
std::optional<int> choose_slack(int n, int delta_max, int delta_min, DPolicy policy, bool even_degree);

/// Result of the even construction before certification.
struct EvenBuild {
  Graph graph;
  int d = 0;
  int base_delta_max = 0;
  int base_delta_min = 0;
  int process_steps = 0;   // length of the run the base graph came from
  int snapshot_step = 0;   // edges of the run actually used
  std::uint64_t process_seed = 0;
  int retries_used = 0;    // process runs performed
};

/// Regular triangle-free graph on n_target (even, >= 2) vertices.
///
/// Up to max_retries triangle-free processes on n_target/2 vertices are run
/// with seeds derive_seed(seed, i). The first whose final graph admits a
/// slack d is regularized. If none does, the first run is cut at the latest
/// step whose degree extremes admit a slack; step 0, the edgeless graph,
/// always qualifies.
EvenBuild build_even(int n_target, const PipelineConfig& cfg, bool even_degree);

/// The regularizer applied to a fixed base graph.
Graph assemble_even(const Graph& base, int d, std::uint64_t seed);

/// F plus H_{k,r} with r the (even) degree of F.
/// Throws std::invalid_argument if F is irregular, r is odd or r > 2k/5.
Graph assemble_odd(const Graph& f, int k);

struct Construction {
  Graph graph;
  ConstructionCertificate certificate;
  std::string path;  // "even", "odd" or "trivial"
  std::optional<int> d;
  std::optional<int> k;
  std::optional<int> n0;
  int retries_used = 0;
};

/// Certificate JSON extended with path, k, n0, d and retries_used.
nlohmann::ordered_json to_json(const Construction& c);

Construction construct_even(int n_target, const PipelineConfig& cfg);
Construction construct_odd(int n_target, const PipelineConfig& cfg);

/// Dispatches on parity. Throws std::invalid_argument for n_target < 1 and
/// ConstructionFailure when building fails and fallback is disabled.
Construction construct(int n_target, const PipelineConfig& cfg);

}  // namespace regram
