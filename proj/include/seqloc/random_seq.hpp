/// The random-vertex-sequence null: the distribution of z1 when the graph is
/// fixed and the sequence is uniform over all n! permutations.  Its mean is
/// exactly 0; its variance depends only on (n, m, wedge count).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "seqloc/exact.hpp"
#include "seqloc/graph.hpp"

#include <json.hpp>

namespace seqloc {

struct SequenceNullSummary {
  int n = 0;
  std::int64_t m = 0;
  std::int64_t m3 = 0;          // wedge count
  double mean_z1 = 0.0;         // 0 exactly when enumerated
  double var_z1 = 0.0;
  bool enumerated = false;      // true: all n! sequences; false: sampled
  std::uint64_t n_sequences = 0;
  /// raw sequential sum -> number of sequences attaining it.
  std::map<std::int64_t, std::uint64_t> histogram;
  /// Number of distinct adjacency matrices over all relabelings
  /// (n! / |Aut|); enumeration only.
  std::optional<std::uint64_t> distinct_matrices;

  double min_z1() const;
  /// Fraction of sequences with z1 <= z (and the strict-< variant, under
  /// which an optimal sequence has p = 0).
  double p_leq(double z) const;
  double p_lt(double z) const;

  /// Exact rational mean and variance of z1 from the histogram (enumeration
  /// only).
  BigRat exact_mean_z1() const;
  BigRat exact_var_z1() const;

  nlohmann::json to_json() const;
  void write_histogram_csv(std::ostream& out) const;
};

/// Variance of z1 over uniformly random sequences:
///   (n+1)/(n-2) * [ (5n-8)/(5(n+1)) + m3 (n-4)/(5 m (n+1)) - 2m/(5(n+1)) ].
/// The derivation assumes n > 3; for n <= 3 an enumeration-required error is
/// thrown (use exact_seq_distribution instead).
double randseq_variance(int n, std::int64_t m, std::int64_t m3);

/// The same expression evaluated without the n > 3 validity guard (it
/// happens to coincide with enumeration for simple graphs at n = 3).
double randseq_variance_formula(int n, std::int64_t m, std::int64_t m3);
BigRat randseq_variance_rational(int n, std::int64_t m, std::int64_t m3);

/// z1(g, s) / sqrt(Var[z1] over random sequences).  Falls back to the
/// enumerated variance when n <= 3; throws on zero variance.
double z1_factor(const Graph& g, const VertexSequence& s);

/// Evaluates z1 for every one of the n! sequences (raw sums enumerated in
/// integers; z1 computed once per distinct raw value).  Default cap n <= 9.
SequenceNullSummary exact_seq_distribution(const Graph& g, int n_cap = 9);

/// Monte Carlo over uniform random sequences (unbiased shuffle).
SequenceNullSummary sampled_seq_distribution(const Graph& g,
                                             std::uint64_t n_samples,
                                             std::uint64_t seed);

struct CurvePoint {
  double z1 = 0.0;
  double p_er = 0.0;      // standard normal CDF at z1
  double p_random = 0.0;  // normal CDF with the random-sequence variance
};

struct CurveTable {
  double m3_ratio = 0.0;  // m3 / (c m) with c = 2 m / n
  std::int64_t m3 = 0;
  double var_z1 = 0.0;
  /// P_random uses a normal approximation (normality of the sequence null
  /// is not guaranteed); flagged so outputs can say so.
  std::string method = "normal_approximation";
  std::vector<CurvePoint> points;
};

/// ER-null vs random-sequence-null lower-tail comparison curves, one table
/// per wedge-density ratio m3/(c m), evaluated on a z1 grid.
std::vector<CurveTable> er_vs_random_curve(int n, std::int64_t m,
                                           const std::vector<double>& m3_ratios,
                                           const std::vector<double>& z1_grid);

/// Mean of the product of sequential distances over a uniformly random
/// sequence, for index pairs sharing one vertex and for disjoint pairs:
///   shared:   (n+1)(7n+4)/60,   disjoint: (n+1)(5n+4)/45.
/// Exposed for direct verification against brute-force summation.
BigRat distance_product_mean_shared(int n);
BigRat distance_product_mean_disjoint(int n);

}  // namespace seqloc
