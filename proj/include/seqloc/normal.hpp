/// Thin wrappers around the standard normal distribution used across the
/// test statistics (CDF, quantile, two-sided and one-sided p-values).
#pragma once

namespace seqloc {

/// P[Z <= z] for Z ~ N(0, 1).
double normal_cdf(double z);

/// Inverse CDF of N(0, 1); requires 0 < p < 1.
double normal_quantile(double p);

/// Two-sided tail probability 2 * P[Z >= |z|].
double two_sided_p(double z);

/// Lower-tail probability P[Z <= z].
double lower_tail_p(double z);

}  // namespace seqloc
