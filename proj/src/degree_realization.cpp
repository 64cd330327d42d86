#include "regram/degree_realization.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace regram {
namespace {

__extension__ typedef __int128 i128;

bool parse_digits(std::string_view s, std::int64_t& out) {
  if (s.empty()) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

i128 gcd128(i128 a, i128 b) {
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) {
    throw std::invalid_argument("negative rational");
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational parse_rational(std::string_view text) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_digits(text.substr(0, slash), num) || !parse_digits(text.substr(slash + 1), den)) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    return Rational::make(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    std::int64_t w = 0;
    std::int64_t f = 0;
    if ((!whole.empty() && !parse_digits(whole, w)) || (!frac.empty() && !parse_digits(frac, f)) ||
        frac.size() > 12 || (whole.empty() && frac.empty())) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
    }
    return Rational::make(w * den + f, den);
  }
  if (!parse_digits(text, num)) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
  return Rational::make(num, 1);
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) {
      throw std::invalid_argument("degree sequence has a negative entry");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw std::invalid_argument("degree sequence is not sorted non-increasing");
    }
  }
}

DegreeSequence DegreeSequence::sorted(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return DegreeSequence(std::move(values));
}

long long DegreeSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

GaleRyserTerms gale_ryser_terms(const DegreeSequence& left, const DegreeSequence& right, int s) {
  GaleRyserTerms t;
  for (int d : left.values()) {
    t.capacity += std::min(d, s);
  }
  for (int j = 0; j < s && j < static_cast<int>(right.size()); ++j) {
    t.demand += right[j];
  }
  return t;
}

std::optional<int> gale_ryser_violation(const DegreeSequence& left, const DegreeSequence& right) {
  if (left.sum() != right.sum()) {
    return 0;
  }
  // capacity(s) = sum_i min(d_i, s) grows by #{i : d_i >= s} per step; walk
  // s upward keeping a pointer into the sorted left sequence.
  const int n = static_cast<int>(right.size());
  long long capacity = 0;
  long long demand = 0;
  int at_least = static_cast<int>(left.size());  // #{i : d_i >= s}
  for (int s = 1; s <= n; ++s) {
    while (at_least > 0 && left[at_least - 1] < s) {
      --at_least;
    }
    capacity += at_least;
    demand += right[s - 1];
    if (capacity < demand) {
      return s;
    }
  }
  // Equal sums plus every inequality imply both maximum degrees fit the
  // opposite side; the checks below only guard the derivation.
  if (!left.empty() && left[0] > n) {
    return n;
  }
  if (!right.empty() && right[0] > static_cast<int>(left.size())) {
    return 1;
  }
  return std::nullopt;
}

bool gale_ryser_feasible(const DegreeSequence& left, const DegreeSequence& right) {
  return !gale_ryser_violation(left, right).has_value();
}

RealizationCondition::RealizationCondition(Rational a) : a_(a) {
  if (a_.num < a_.den) {
    throw std::invalid_argument("realization condition needs a >= 1, got " + to_string(a_));
  }
}

Rational RealizationCondition::threshold(long long m) const {
  // 4 (p/q) m / ((p+q)/q)^2 = 4 p q m / (p+q)^2
  const i128 p = a_.num;
  const i128 q = a_.den;
  i128 num = 4 * p * q * m;
  i128 den = (p + q) * (p + q);
  const i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > INT64_MAX || den > INT64_MAX) {
    throw std::overflow_error("realization threshold overflows 64 bits");
  }
  return Rational::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

bool RealizationCondition::holds(const DegreeSequence& d) const {
  if (d.empty()) {
    throw std::invalid_argument("realization condition on an empty sequence");
  }
  const i128 d1 = d[0];
  const i128 dm = d[d.size() - 1];
  const i128 p = a_.num;
  const i128 q = a_.den;
  const i128 m = static_cast<i128>(d.size());
  // d1 <= (p/q) dm  and  d1 (p+q)^2 <= 4 p q m
  return d1 * q <= p * dm && d1 * (p + q) * (p + q) <= 4 * p * q * m;
}

bool corollary_feasible(const DegreeSequence& d, const RealizationCondition& condition) {
  return condition.holds(d);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) {
    total += row.size();
  }
  return total;
}

std::vector<int> BipartiteGraph::left_degrees() const {
  std::vector<int> out;
  out.reserve(adjacency.size());
  for (const auto& row : adjacency) {
    out.push_back(static_cast<int>(row.size()));
  }
  return out;
}

std::vector<int> BipartiteGraph::right_degrees() const {
  std::vector<int> out(static_cast<std::size_t>(right_size), 0);
  for (const auto& row : adjacency) {
    for (int j : row) {
      ++out[j];
    }
  }
  return out;
}

bool BipartiteGraph::is_simple() const {
  if (static_cast<int>(adjacency.size()) != left_size) {
    return false;
  }
  for (const auto& row : adjacency) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 0 || row[k] >= right_size || (k > 0 && row[k] <= row[k - 1])) {
        return false;
      }
    }
  }
  return true;
}

InfeasibleSequence::InfeasibleSequence(int witness)
    : std::invalid_argument("bidegree pair is not realizable (s=" + std::to_string(witness) + ")"),
      witness_(witness) {}

BipartiteGraph realize_bipartite(const DegreeSequence& left, const DegreeSequence& right) {
  if (auto s = gale_ryser_violation(left, right)) {
    throw InfeasibleSequence(*s);
  }
  BipartiteGraph out;
  out.left_size = static_cast<int>(left.size());
  out.right_size = static_cast<int>(right.size());
  out.adjacency.resize(left.size());

  std::vector<int> residual(right.values().begin(), right.values().end());
  std::vector<int> order(right.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < left.size(); ++i) {
    const int need = left[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    auto& row = out.adjacency[i];
    for (int k = 0; k < need; ++k) {
      const int j = order[k];
      if (residual[j] == 0) {
        // Unreachable when the Gale-Ryser check passed.
        throw std::logic_error("realize_bipartite: greedy step ran out of demand");
      }
      --residual[j];
      row.push_back(j);
    }
    std::sort(row.begin(), row.end());
  }
  return out;
}

DegreeSequence tight_counterexample(Rational a, int scale) {
  if (a.num <= a.den) {
    throw std::invalid_argument("tight_counterexample needs a > 1");
  }
  if (scale < 1) {
    throw std::invalid_argument("tight_counterexample needs scale >= 1");
  }
  const i128 p = a.num;
  const i128 q = a.den;
  const i128 sq = (p + q) * (p + q);
  // m = scale (p+q)^2 / q^2
  const i128 m_num = static_cast<i128>(scale) * sq;
  if (m_num % (q * q) != 0) {
    throw std::invalid_argument("scale * (a+1)^2 is not an integer");
  }
  const i128 m = m_num / (q * q);
  // s = 2m/(a+1) = 2 m q / (p+q);  tail = 4m/(a+1)^2 = 4 m q^2 / (p+q)^2
  if ((2 * m * q) % (p + q) != 0 || (4 * m * q * q) % sq != 0) {
    throw std::invalid_argument("2m/(a+1) or 4m/(a+1)^2 is not an integer");
  }
  const i128 s = 2 * m * q / (p + q);
  const i128 tail = 4 * m * q * q / sq;
  // Least integer strictly above a * tail = 4am/(a+1)^2.
  const i128 head = (p * tail) / q + 1;
  if (m > 1'000'000) {
    throw std::invalid_argument("tight_counterexample: m too large");
  }
  std::vector<int> values(static_cast<std::size_t>(m), static_cast<int>(tail));
  for (i128 i = 0; i < s; ++i) {
    values[static_cast<std::size_t>(i)] = static_cast<int>(head);
  }
  return DegreeSequence(std::move(values));
}

}  // namespace regram
