#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regram {

/// Exact non-negative rational, always reduced with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Accepts "3", "3/2" and finite decimals such as "1.5".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Non-increasing list of non-negative integers.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws std::invalid_argument if `values` is not sorted non-increasing or
  /// holds a negative entry.
  explicit DegreeSequence(std::vector<int> values);
  static DegreeSequence sorted(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  long long sum() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

/// The two sides of the Gale-Ryser inequality at prefix length s:
/// capacity = sum_i min(left_i, s), demand = sum_{j<=s} right_j.
struct GaleRyserTerms {
  long long capacity = 0;
  long long demand = 0;
};

GaleRyserTerms gale_ryser_terms(const DegreeSequence& left, const DegreeSequence& right, int s);

/// nullopt when (left, right) is realizable by a simple bipartite graph.
/// Otherwise 0 when the sums differ, or the first prefix length s in
/// 1..right.size() whose inequality fails.
std::optional<int> gale_ryser_violation(const DegreeSequence& left, const DegreeSequence& right);

bool gale_ryser_feasible(const DegreeSequence& left, const DegreeSequence& right);

/// Sufficient condition d_1 <= min{a d_m, 4am/(a+1)^2} for the sequence to be
/// realizable on both sides of an m+m bipartite graph. All comparisons are in
/// exact integer arithmetic.
class RealizationCondition {
 public:
  /// Throws std::invalid_argument when a < 1.
  explicit RealizationCondition(Rational a);

  const Rational& a() const { return a_; }
  /// 4am/(a+1)^2, reduced.
  Rational threshold(long long m) const;
  bool holds(const DegreeSequence& d) const;

 private:
  Rational a_;
};

/// Throws std::invalid_argument on an empty sequence.
bool corollary_feasible(const DegreeSequence& d, const RealizationCondition& condition);

/// Simple bipartite graph given by left-vertex adjacency into 0..right_size-1.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<int>> adjacency;

  std::size_t edge_count() const;
  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;
  bool is_simple() const;
};

/// Raised by realize_bipartite; witness() follows gale_ryser_violation.
class InfeasibleSequence : public std::invalid_argument {
 public:
  explicit InfeasibleSequence(int witness);
  int witness() const { return witness_; }

 private:
  int witness_;
};

/// Greedy bipartite Havel-Hakimi: each left vertex, in order, is joined to
/// the right vertices of largest remaining demand (ties to the lower index).
/// Left vertex i gets degree left[i], right vertex j gets right[j].
BipartiteGraph realize_bipartite(const DegreeSequence& left, const DegreeSequence& right);

/// Sequence showing the sufficient condition cannot be relaxed: with
/// m = scale (a+1)^2, s = 2m/(a+1) and tail = 4m/(a+1)^2, the first s entries
/// are the least integer above a * tail and the remaining m - s equal tail.
/// Throws std::invalid_argument unless a > 1, scale >= 1 and m, s, tail are
/// integers.
DegreeSequence tight_counterexample(Rational a, int scale);

}  // namespace regram
