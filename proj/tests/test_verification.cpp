#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "regram/certificate.hpp"
#include "regram/graph_io.hpp"
#include "regram/independence.hpp"
#include "regram/regularizer.hpp"

using namespace regram;

namespace {

bool maximal_independent(const Graph& g, const std::vector<int>& s) {
  if (!is_independent_set(g, s)) {
    return false;
  }
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : s) {
    in[v] = 1;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) {
      continue;
    }
    bool blocked = false;
    for (int w : g.neighbors(v)) {
      blocked = blocked || in[w];
    }
    if (!blocked) {
      return false;
    }
  }
  return true;
}

void check_result(const Graph& g, const AlphaResult& a) {
  CHECK(is_independent_set(g, a.witness));
  CHECK(static_cast<int>(a.witness.size()) == a.lower);
  CHECK(std::is_sorted(a.witness.begin(), a.witness.end()));
  if (a.exact) {
    REQUIRE(a.upper);
    CHECK(*a.upper == a.lower);
  }
}

}  // namespace

TEST_CASE("exact alpha examples") {
  const auto c5 = independence_number_exact(cycle_graph(5));
  CHECK(c5.exact);
  CHECK(c5.lower == 2);
  const auto pet = independence_number_exact(petersen_graph());
  CHECK(pet.lower == 4);
  CHECK(oracle::alpha_by_subsets(petersen_graph()) == 4);
  const auto reg = independence_number_exact(regularize(cycle_graph(9), 1, 1));
  CHECK(reg.exact);
  CHECK(reg.lower <= 8);
  check_result(petersen_graph(), pet);
  CHECK(independence_number_exact(Graph(0)).lower == 0);
  CHECK(independence_number_exact(edgeless_graph(5)).lower == 5);
  CHECK(independence_number_exact(complete_graph(6)).lower == 1);
}

TEST_CASE("exact alpha agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int n = 1 + static_cast<int>(rng.below(18));
    const Graph g = oracle::random_graph(n, static_cast<int>(rng.below(70)), seed);
    const int truth = oracle::alpha_by_subsets(g);
    const auto par = independence_number_exact(g);
    const auto ser = serial::independence_number_exact(g);
    REQUIRE(par.exact);
    REQUIRE(par.lower == truth);
    REQUIRE(ser.lower == truth);
    REQUIRE(par.witness == ser.witness);
    check_result(g, par);
  }
}

TEST_CASE("exact alpha on larger sparse graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_triangle_free(36, 200, seed);
    const auto a = independence_number_exact(g);
    CHECK(a.exact);
    CHECK(a.lower == oracle::alpha(g));
  }
}

TEST_CASE("budget exhaustion is flagged") {
  const Graph g = oracle::random_triangle_free(150, 1500, 1);
  const auto a = independence_number_exact(g, 50);
  CHECK_FALSE(a.exact);
  CHECK_FALSE(a.upper);
  CHECK(a.nodes == 50);
  check_result(g, a);
  const auto s = serial::independence_number_exact(g, 50);
  CHECK_FALSE(s.exact);
  check_result(g, s);
}

TEST_CASE("greedy independent sets") {
  CHECK(greedy_independent_set(edgeless_graph(6)).size() == 6);
  const auto k33 = greedy_independent_set(complete_bipartite_graph(3, 3));
  CHECK(k33.size() == 3);
  CHECK(maximal_independent(complete_bipartite_graph(3, 3), k33));
  const auto c6 = greedy_independent_set(cycle_graph(6));
  CHECK(c6.size() >= 2);
  CHECK(maximal_independent(cycle_graph(6), c6));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(30, 20, seed);
    CHECK(maximal_independent(g, greedy_independent_set(g, seed)));
    const auto h = heuristic_independent_set(g);
    CHECK(is_independent_set(g, h));
    CHECK(h.size() >= greedy_independent_set(g, 0).size());
  }
}

TEST_CASE("certificate examples") {
  const Graph pp = disjoint_union(petersen_graph(), petersen_graph());
  const auto cert = certify(pp);
  CHECK(cert.n == 20);
  CHECK(cert.r == 3);
  CHECK(cert.regular);
  CHECK(cert.triangle_free);
  CHECK(cert.alpha.exact);
  CHECK(cert.alpha.lower == 8);

  const auto e9 = certify(edgeless_graph(9));
  CHECK(e9.r == 0);
  CHECK(e9.alpha.lower == 9);
  REQUIRE(e9.ratio_lower);
  CHECK(*e9.ratio_lower == doctest::Approx(9.0 / std::sqrt(9.0 * std::log(9.0))));
  CHECK(*e9.ratio_lower == doctest::Approx(2.02).epsilon(0.01));

  const Graph c9 = regularize(cycle_graph(9), 1, 1);
  CHECK(certify(c9).regular == regular_degree(c9).has_value());
  CHECK_FALSE(certify(path_graph(4)).regular);
  CHECK_FALSE(certify(path_graph(4)).r);
  CHECK_FALSE(certify(complete_graph(4)).triangle_free);
}

TEST_CASE("ratio convention") {
  CHECK_FALSE(sqrt_n_log_n_ratio(1, 1));
  CHECK_FALSE(sqrt_n_log_n_ratio(0, 0));
  CHECK(*sqrt_n_log_n_ratio(4, 20) == doctest::Approx(4.0 / std::sqrt(20.0 * std::log(20.0))));
}

TEST_CASE("certificate json") {
  CertifyOptions opts;
  opts.constant_target = 1.0;
  const auto j = to_json(certify(petersen_graph(), opts, {{"seed", 3}}));
  const std::vector<std::string> head{"n", "r", "regular", "triangle_free", "alpha_lower", "alpha_upper",
                                      "alpha_exact", "ratio_lower", "ratio_upper", "witness", "params"};
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) {
    keys.push_back(it.key());
  }
  REQUIRE(keys.size() >= head.size());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<long>(head.size())) == head);
  CHECK(j["alpha_upper"] == 4);
  CHECK(j["params"]["seed"] == 3);
  CHECK(j["within_target"] == true);

  CertifyOptions greedy;
  greedy.alpha = AlphaMode::greedy;
  const auto g = to_json(certify(petersen_graph(), greedy));
  CHECK(g["alpha_upper"].is_null());
  CHECK(g["alpha_exact"] == false);
  CHECK(to_json(certify(edgeless_graph(1)))["ratio_lower"].is_null());
  CHECK(parse_alpha_mode("greedy") == AlphaMode::greedy);
  CHECK_THROWS(parse_alpha_mode("fast"));
}

TEST_CASE("certificates are reproducible from the serialized graph") {
  const Graph g = regularize(cycle_graph(9), 1, 4);
  const Graph back = parse_graph(to_graph6(g));
  CHECK(to_json(certify(g)).dump() == to_json(certify(back)).dump());
  CHECK(to_json(certify(back)).dump() == to_json(certify(back)).dump());
}
