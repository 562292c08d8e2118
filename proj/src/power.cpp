#include "seqloc/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "seqloc/normal.hpp"
#include "seqloc/stats.hpp"

namespace seqloc {

namespace {

// Deterministic per-cell seed stream independent of evaluation order.
std::uint64_t cell_seed(std::uint64_t master, std::uint64_t cell_index) {
  std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL + cell_index);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

double critical_value(int n, std::int64_t m, double alpha) {
  if (n < 3) throw ValidationError("need at least 3 vertices");
  if (m < 1) throw ValidationError("need at least 1 edge");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  return 1.0 + normal_quantile(alpha) *
                   std::sqrt(static_cast<double>(n - 2) /
                             (2.0 * static_cast<double>(m) * (n + 1)));
}

std::pair<std::int64_t, std::int64_t> split_edges(std::int64_t m, double eps,
                                                  std::int64_t omega_in,
                                                  std::int64_t omega_out) {
  if (m < 0) throw ValidationError("negative edge count");
  if (eps < 0.0) throw ValidationError("eps must be nonnegative");
  if (omega_in <= 0) throw ValidationError("empty in-envelope region");
  const double denom = static_cast<double>(omega_in) + eps * static_cast<double>(omega_out);
  const std::int64_t m_out = static_cast<std::int64_t>(
      std::llround(static_cast<double>(m) * eps * static_cast<double>(omega_out) / denom));
  return {m - m_out, m_out};
}

OrgmParams orgm_params_from_eps(int n, std::int64_t m, int r, double eps,
                                bool simple) {
  const EnvelopeSpec env = EnvelopeSpec::banded(r);
  const auto [oin, oout] = env.omega_sizes(n);
  const auto [m_in, m_out] = split_edges(m, eps, oin, oout);
  OrgmParams p;
  p.n = n;
  p.envelope = env;
  p.m_in = m_in;
  p.m_out = m_out;
  p.simple = simple;
  p.validate();
  return p;
}

double analytic_power(int n, std::int64_t m, int r, double eps, double alpha,
                      bool simple) {
  const double e_star = critical_value(n, m, alpha);
  const OrgmParams p = orgm_params_from_eps(n, m, r, eps, simple);
  const auto [mean, sd] = orgm_h1_normal(p);
  if (sd > 0.0) return lower_tail_p((e_star - mean) / sd);
  return e_star > mean ? 1.0 : 0.0;
}

double empirical_power(int n, std::int64_t m, int r, double eps, double alpha,
                       bool simple, const std::string& statistic,
                       int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw ValidationError("need at least 1 sample");
  const OrgmParams p = orgm_params_from_eps(n, m, r, eps, simple);
  const VertexSequence ident = VertexSequence::identity(n);
  const double z_cut = normal_quantile(alpha);  // one-sided lower
  int rejections = 0;
  for (int i = 0; i < n_samples; ++i) {
    const Graph g = sample_orgm(p, cell_seed(seed, static_cast<std::uint64_t>(i)));
    double zval;
    if (statistic == "H1") {
      zval = z1(g, ident);
    } else if (statistic == "HG") {
      zval = zg(g, ident);
    } else {
      throw ValidationError("statistic must be H1 or HG");
    }
    if (zval < z_cut) ++rejections;
  }
  return static_cast<double>(rejections) / n_samples;
}

void PowerGrid::write_csv(std::ostream& out) const {
  out << y_name << "\\" << x_name;
  char buf[64];
  for (double x : x_values) {
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    out << "," << buf;
  }
  out << "\n";
  for (std::size_t iy = 0; iy < y_values.size(); ++iy) {
    std::snprintf(buf, sizeof(buf), "%.12g", y_values[iy]);
    out << buf;
    for (std::size_t ix = 0; ix < x_values.size(); ++ix) {
      const double v = cells[iy][ix];
      if (std::isnan(v)) {
        out << ",";  // missing (infeasible), not zero
      } else {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        out << "," << buf;
      }
    }
    out << "\n";
  }
}

nlohmann::json PowerGrid::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cells) {
    nlohmann::json r = nlohmann::json::array();
    for (double v : row) {
      if (std::isnan(v))
        r.push_back(nullptr);
      else
        r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  return {{"x_name", x_name},         {"y_name", y_name},
          {"x_values", x_values},     {"y_values", y_values},
          {"cells", rows},            {"metadata", metadata}};
}

namespace {

void check_grid_config(const std::string& mode, const std::string& statistic) {
  if (mode != "analytic" && mode != "empirical")
    throw ValidationError("mode must be analytic or empirical");
  if (statistic != "H1" && statistic != "HG")
    throw ValidationError("statistic must be H1 or HG");
  if (mode == "analytic" && statistic != "H1")
    throw ValidationError("analytic power is defined for H1 only");
}

double grid_cell(int n, std::int64_t m, int r, double eps, double alpha,
                 bool simple, const std::string& mode,
                 const std::string& statistic, int n_samples,
                 std::uint64_t seed) {
  // Infeasible parameter combinations become missing values, not zeros.
  try {
    orgm_params_from_eps(n, m, r, eps, simple);
  } catch (const ValidationError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return mode == "analytic"
             ? analytic_power(n, m, r, eps, alpha, simple)
             : empirical_power(n, m, r, eps, alpha, simple, statistic,
                               n_samples, seed);
}

}  // namespace

PowerGrid power_grid_r_eps(int n, std::int64_t m,
                           const std::vector<double>& r_over_n,
                           const std::vector<double>& eps, double alpha,
                           bool simple, const std::string& mode,
                           const std::string& statistic, int n_samples,
                           std::uint64_t seed) {
  check_grid_config(mode, statistic);
  PowerGrid grid;
  grid.x_name = "r_over_n";
  grid.y_name = "eps";
  grid.x_values = r_over_n;
  grid.y_values = eps;
  grid.metadata = {{"n", n},       {"m", m},
                   {"alpha", alpha},      {"statistic", statistic},
                   {"mode", mode},        {"n_samples", n_samples},
                   {"seed", seed},        {"variant", simple ? "simple" : "multigraph"}};
  grid.cells.assign(eps.size(), std::vector<double>(r_over_n.size()));
  std::uint64_t cell = 0;
  for (std::size_t iy = 0; iy < eps.size(); ++iy) {
    for (std::size_t ix = 0; ix < r_over_n.size(); ++ix, ++cell) {
      const int r = static_cast<int>(std::llround(r_over_n[ix] * n));
      if (r < 1 || r > n - 1) {
        grid.cells[iy][ix] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      grid.cells[iy][ix] =
          grid_cell(n, m, r, eps[iy], alpha, simple, mode, statistic,
                    n_samples, cell_seed(seed, cell));
    }
  }
  return grid;
}

PowerGrid power_grid_n_degree(const std::vector<int>& n_values,
                              const std::vector<double>& avg_degrees,
                              double r_over_n, double eps, double alpha,
                              bool simple, const std::string& mode,
                              const std::string& statistic, int n_samples,
                              std::uint64_t seed) {
  check_grid_config(mode, statistic);
  PowerGrid grid;
  grid.x_name = "n";
  grid.y_name = "avg_degree";
  grid.x_values.assign(n_values.begin(), n_values.end());
  grid.y_values = avg_degrees;
  grid.metadata = {{"r_over_n", r_over_n}, {"eps", eps},
                   {"alpha", alpha},       {"statistic", statistic},
                   {"mode", mode},         {"n_samples", n_samples},
                   {"seed", seed},         {"variant", simple ? "simple" : "multigraph"}};
  grid.cells.assign(avg_degrees.size(), std::vector<double>(n_values.size()));
  std::uint64_t cell = 0;
  for (std::size_t iy = 0; iy < avg_degrees.size(); ++iy) {
    for (std::size_t ix = 0; ix < n_values.size(); ++ix, ++cell) {
      const int n = n_values[ix];
      const int r = static_cast<int>(std::llround(r_over_n * n));
      const std::int64_t m = static_cast<std::int64_t>(
          std::llround(avg_degrees[iy] * n / 2.0));
      if (n < 3 || r < 1 || r > n - 1 || m < 1) {
        grid.cells[iy][ix] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      grid.cells[iy][ix] =
          grid_cell(n, m, r, eps, alpha, simple, mode, statistic, n_samples,
                    cell_seed(seed, cell));
    }
  }
  return grid;
}

}  // namespace seqloc
