/// Affinity metrics: functions J(x) of the sequential distance x = |p_i - p_j|
/// between the positions of an edge's endpoints, together with the
/// normalization constant that makes the null expectation of the averaged
/// statistic equal 1 where such a constant exists.
#pragma once

#include <cstdint>
#include <string>

namespace seqloc {

class AffinityMetric {
 public:
  enum class Kind {
    kSequential,   // J(x) = x
    kLogarithmic,  // J(x) = -log(1 - x / n)
    kSquared,      // J(x) = x^2
    kStep,         // J(x) = 1 if x > r else 0
  };

  static AffinityMetric sequential() { return AffinityMetric(Kind::kSequential, 0); }
  static AffinityMetric logarithmic() { return AffinityMetric(Kind::kLogarithmic, 0); }
  static AffinityMetric squared() { return AffinityMetric(Kind::kSquared, 0); }
  static AffinityMetric step(int r);

  Kind kind() const { return kind_; }
  /// Step-metric radius (meaningful only for kStep).
  int radius() const { return radius_; }

  /// True when J(x) is integer valued for all integer x (everything except
  /// the logarithmic metric); such metrics admit exact null tables.
  bool integer_valued() const { return kind_ != Kind::kLogarithmic; }

  /// J(x) for sequential distance x in 1..n-1.
  double value(std::int64_t x, int n) const;

  /// Integer J(x); requires integer_valued().
  std::int64_t int_value(std::int64_t x, int n) const;

  /// Normalization constant beta(n, m): the factor dividing the raw sum so
  /// that the null expectation over an ER graph equals 1.
  ///   sequential:  m (n + 1) / 3
  ///   logarithmic: m mu_n  with mu_n the null mean of one term
  /// For squared and step no standard normalization is defined; beta is 1
  /// (statistics are reported as raw sums).
  double beta(int n, std::int64_t m) const;

  std::string name() const;
  /// Parses "sequential" | "logarithmic" | "squared" | "step:<r>".
  static AffinityMetric parse(const std::string& text);

 private:
  AffinityMetric(Kind k, int r) : kind_(k), radius_(r) {}
  Kind kind_;
  int radius_;
};

/// Null mean mu_n of -log(1 - x / n) when x follows the distance
/// distribution P[x] = 2 (n - x) / (n (n - 1)):
///   mu_n = log n - (2 / (n (n - 1))) * sum_{k=1}^{n-1} k log k.
double log_metric_mean(int n);

/// Corresponding null standard deviation sigma_n.
double log_metric_stddev(int n);

}  // namespace seqloc
