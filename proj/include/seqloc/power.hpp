/// Power of the one-sided (lower) H1 test against banded ORGM alternatives:
/// closed-form normal approximation and Monte Carlo, plus the parameter
/// grids used for power surfaces.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqloc/orgm.hpp"

#include <json.hpp>

namespace seqloc {

/// Critical value E* = 1 + quantile(alpha) * sqrt((n-2) / (2 m (n+1))):
/// the H1 threshold below which the one-sided ER test rejects.
double critical_value(int n, std::int64_t m, double alpha);

/// Rounds the density ratio eps into integer edge counts:
/// m_out = round(m * eps * omega_out / (omega_in + eps * omega_out)),
/// m_in = m - m_out.
std::pair<std::int64_t, std::int64_t> split_edges(std::int64_t m, double eps,
                                                  std::int64_t omega_in,
                                                  std::int64_t omega_out);

/// Builds banded-ORGM parameters from (n, m, r, eps, simple); throws
/// ValidationError when the simple variant cannot hold the edge counts.
OrgmParams orgm_params_from_eps(int n, std::int64_t m, int r, double eps,
                                bool simple);

/// Phi((E* - mean) / std) with (mean, std) the model's H1 normal
/// approximation.  A zero-variance model degenerates to a 0/1 step.
double analytic_power(int n, std::int64_t m, int r, double eps, double alpha,
                      bool simple);

/// Fraction of `n_samples` model draws whose statistic falls below the
/// one-sided critical value; statistic is "H1" or "HG" (the latter uses the
/// analogous normal cutoff on z_G).
double empirical_power(int n, std::int64_t m, int r, double eps, double alpha,
                       bool simple, const std::string& statistic,
                       int n_samples, std::uint64_t seed);

struct PowerGrid {
  std::string x_name;            // e.g. "r_over_n" or "n"
  std::string y_name;            // e.g. "eps" or "avg_degree"
  std::vector<double> x_values;
  std::vector<double> y_values;
  /// cells[iy][ix]; NaN marks infeasible parameter combinations.
  std::vector<std::vector<double>> cells;
  nlohmann::json metadata;       // alpha, statistic, mode, n_samples, seed...

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

/// Grid over (r/n, eps) at fixed (n, m).  mode: "analytic" | "empirical".
PowerGrid power_grid_r_eps(int n, std::int64_t m,
                           const std::vector<double>& r_over_n,
                           const std::vector<double>& eps, double alpha,
                           bool simple, const std::string& mode,
                           const std::string& statistic, int n_samples,
                           std::uint64_t seed);

/// Grid over (n, average degree 2m/n) at fixed (r/n, eps).
PowerGrid power_grid_n_degree(const std::vector<int>& n_values,
                              const std::vector<double>& avg_degrees,
                              double r_over_n, double eps, double alpha,
                              bool simple, const std::string& mode,
                              const std::string& statistic, int n_samples,
                              std::uint64_t seed);

}  // namespace seqloc
