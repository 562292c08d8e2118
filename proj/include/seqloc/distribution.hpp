/// Discrete probability tables over integer raw-sum values, with an optional
/// exact rational representation (integer numerators over one common
/// denominator) alongside the double view.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "seqloc/exact.hpp"

#include <json.hpp>

namespace seqloc {

/// Raised when an exact table would exceed the configured DP-size cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistributionTable {
  /// Ascending distinct integer values.
  std::vector<std::int64_t> support;
  /// probability[i] = P[value == support[i]]; sums to 1 (within rounding,
  /// exactly when counts are present).
  std::vector<double> probability;

  /// Exact representation: probability[i] = count[i] / denominator.
  /// Empty (denominator == 0) for tables built in floating point.
  std::vector<BigInt> count;
  BigInt denominator = 0;

  /// Probability mass dropped by a deliberate tail truncation (canonical
  /// mixture builder); 0 for exact tables.
  double truncated_mass = 0.0;

  bool has_exact() const { return denominator != 0; }
  std::size_t size() const { return support.size(); }

  double mean() const;
  double variance() const;

  /// P[value <= v] and P[value < v].
  double cdf_leq(std::int64_t v) const;
  double cdf_lt(std::int64_t v) const;

  /// Exact counterparts; require has_exact().
  BigRat exact_probability(std::size_t i) const;
  BigRat exact_mean() const;
  BigRat exact_variance() const;
  BigRat exact_cdf_leq(std::int64_t v) const;

  /// CSV with header "raw_sum,probability"; probabilities printed with 17
  /// significant digits.
  void write_csv(std::ostream& out) const;

  /// JSON object {"support": [...], "probability": [...], "truncated_mass"},
  /// plus exact counts as decimal strings when available.
  nlohmann::json to_json() const;
};

}  // namespace seqloc
