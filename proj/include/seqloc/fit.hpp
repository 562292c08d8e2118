/// Maximum-likelihood bandwidth fitting for the banded ORGM, the r-sweep
/// confidence table, and the locality-type classifier.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqloc/graph.hpp"
#include "seqloc/orgm.hpp"

namespace seqloc {

struct FitRow {
  int r = 0;
  std::int64_t m_in = 0;
  std::int64_t m_out = 0;
  /// Log number of graphs the fitted model can emit (the negative
  /// log-likelihood up to the model-independent constant); the MLE minimizes
  /// this.  Evaluated with log-gamma, not a Stirling approximation.
  double log_count = 0.0;
  /// False when the region capacities cannot hold (m_in, m_out) under the
  /// simple variant.
  bool feasible = true;
};

struct FitResult {
  int r_star = 0;
  double eps_star = 0.0;
  std::int64_t m_in = 0;
  std::int64_t m_out = 0;
  bool simple = true;
  /// One row per candidate bandwidth r = 1..n-1.
  std::vector<FitRow> curve;
};

/// MLE of the bandwidth given a fixed sequence: minimizes log_count over r;
/// ties resolved toward smaller r; infeasible rows excluded.  Requires
/// n >= 3 and m >= 1.
FitResult fit_bandwidth(const Graph& g, const VertexSequence& s, bool simple);

struct SweepRow {
  int r = 0;
  std::int64_t m_in = 0;
  std::int64_t m_out = 0;
  double h1_in = 0.0;      // observed in-envelope statistic
  double mean = 0.0;       // model mean of h1_in
  double ci_lower = 0.0;   // normal CI bounds at the sweep's alpha
  double ci_upper = 0.0;
  double z = 0.0;
  double p_value = 1.0;
  bool defined = true;     // false when m_in < 2 (statistic/test undefined)
};

/// In-envelope statistic vs banded-model confidence band for r in
/// [r_lo, r_hi] (r_hi = 0 means n - 1).  Rows with too few in-envelope
/// edges are flagged, not errors.
std::vector<SweepRow> ci_sweep(const Graph& g, const VertexSequence& s,
                               bool simple, double alpha, int r_lo = 1,
                               int r_hi = 0);

/// Upper bound of the in-envelope H1 divided by its model mean for a banded
/// envelope: 3 r (2n - r - 1) / ((r + 1) (3n - 2r - 1)).  Requires
/// 1 <= r <= n - 1.
double max_average_ratio(int n, int r);

enum class LocalityType { kI, kII, kIII, kIV, kIndeterminate };

std::string to_string(LocalityType t);

struct ClassificationInput {
  double h1_in = 0.0;      // in-envelope statistic at the fitted bandwidth
  double ci_lower = 0.0;   // its model confidence band
  double ci_upper = 0.0;
  double h1_all = 0.0;     // whole-graph H1
  /// alpha-quantile of whole-graph H1 over a reference ensemble of
  /// sequence-optimized ER graphs; absent when no reference is available
  /// (types III and IV then cannot be told apart).
  std::optional<double> er_reference_quantile;
};

/// Locality taxonomy:
///   I   statistic below the band (stronger order than the fitted model),
///   II  inside the band (model-consistent),
///   III above the band, whole-graph H1 below the ER reference quantile
///       (weaker than the model yet more ordered than optimized noise),
///   IV  above the band otherwise,
///   Indeterminate: above the band with no reference supplied.
LocalityType classify(const ClassificationInput& in);

/// Convenience overload reading the observed statistics and confidence band
/// from the two test reports (whole-graph ER test, in-envelope test) and the
/// alpha-quantile from a sorted reference sample (nullopt = no reference).
LocalityType classify(const TestReport& report_all,
                      const TestReport& report_in,
                      const std::optional<std::vector<double>>& er_reference,
                      double alpha);

/// Reference ensemble: whole-graph H1 of `count` sequence-optimized simple
/// ER graphs with the same (n, m) (ordering produced by the spectral
/// method).  Returns the sorted H1 values.
std::vector<double> er_reference_h1(int n, std::int64_t m, int count,
                                    std::uint64_t seed);

/// Empirical alpha-quantile (lower tail, inclusive rank ceil(alpha * k)).
double empirical_quantile(const std::vector<double>& sorted_values,
                          double alpha);

}  // namespace seqloc
