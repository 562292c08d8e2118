#include "seqloc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace seqloc {

namespace {

void check_inputs(const Graph& g, const VertexSequence& s) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  if (g.num_edges() < 1)
    throw ValidationError("statistic undefined for an edgeless graph");
}

}  // namespace

std::int64_t raw_sum(const Graph& g, const VertexSequence& s,
                     const AffinityMetric& metric) {
  check_inputs(g, s);
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const std::int64_t x = std::abs(s.position(e.u) - s.position(e.v));
    total += e.mult * metric.int_value(x, g.num_vertices());
  }
  return total;
}

double raw_sum_real(const Graph& g, const VertexSequence& s,
                    const AffinityMetric& metric) {
  check_inputs(g, s);
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const std::int64_t x = std::abs(s.position(e.u) - s.position(e.v));
    total += static_cast<double>(e.mult) * metric.value(x, g.num_vertices());
  }
  return total;
}

double h_stat(const Graph& g, const VertexSequence& s,
              const AffinityMetric& metric) {
  const double raw = raw_sum_real(g, s, metric);
  return raw / metric.beta(g.num_vertices(), g.num_edges());
}

double h1(const Graph& g, const VertexSequence& s) {
  return h_stat(g, s, AffinityMetric::sequential());
}

double z1_from_h1(double h1_value, int n, std::int64_t m) {
  if (n < 3)
    throw ValidationError("z1 needs at least 3 vertices (degenerate size)");
  return std::sqrt(2.0 * static_cast<double>(m) * (n + 1) / (n - 2)) *
         (h1_value - 1.0);
}

double z1(const Graph& g, const VertexSequence& s) {
  return z1_from_h1(h1(g, s), g.num_vertices(), g.num_edges());
}

double hg(const Graph& g, const VertexSequence& s) {
  return h_stat(g, s, AffinityMetric::logarithmic());
}

double zg_from_hg(double hg_value, int n, std::int64_t m) {
  const double sigma = log_metric_stddev(n);
  if (sigma <= 0.0)
    throw ValidationError("zg undefined: null standard deviation is 0");
  return log_metric_mean(n) / sigma * std::sqrt(static_cast<double>(m)) *
         (hg_value - 1.0);
}

double zg(const Graph& g, const VertexSequence& s) {
  return zg_from_hg(hg(g, s), g.num_vertices(), g.num_edges());
}

std::vector<std::optional<double>> micro_locality(const Graph& g,
                                                  const VertexSequence& s) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  std::vector<std::vector<std::int64_t>> dists(
      static_cast<std::size_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) {
    const std::int64_t x = std::abs(s.position(e.u) - s.position(e.v));
    for (std::int64_t k = 0; k < e.mult; ++k) {
      dists[static_cast<std::size_t>(e.u)].push_back(x);
      dists[static_cast<std::size_t>(e.v)].push_back(x);
    }
  }
  std::vector<std::optional<double>> h(dists.size());
  for (std::size_t i = 0; i < dists.size(); ++i) {
    auto& d = dists[i];
    if (d.empty()) continue;
    std::sort(d.begin(), d.end());
    const std::size_t k = d.size();
    h[i] = (k % 2 == 1)
               ? static_cast<double>(d[k / 2])
               : (static_cast<double>(d[k / 2 - 1]) + d[k / 2]) / 2.0;
  }
  return h;
}

}  // namespace seqloc
