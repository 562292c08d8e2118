/// Sequential-locality statistics of a graph under a vertex sequence.
///
/// With positions p and distances x_e = |p_u - p_v| per edge e:
///   raw(J)  = sum_e mult_e * J(x_e)
///   H1      = raw(x) / beta_1,         beta_1 = M (N + 1) / 3
///   z1      = sqrt(2 M (N + 1) / (N - 2)) * (H1 - 1)
///   HG      = raw(-log(1 - x/N)) / (mu_N M)
///   zG      = (mu_N / sigma_N) * sqrt(M) * (HG - 1)
/// z-scores are standardized against the ER null in which each edge's
/// distance is drawn independently from P[x] = 2 (N - x) / (N (N - 1)).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqloc/graph.hpp"
#include "seqloc/metric.hpp"

namespace seqloc {

/// Integer raw sum for an integer-valued metric.
std::int64_t raw_sum(const Graph& g, const VertexSequence& s,
                     const AffinityMetric& metric);

/// Raw sum as a double (works for every metric).
double raw_sum_real(const Graph& g, const VertexSequence& s,
                    const AffinityMetric& metric);

/// Normalized statistic raw / beta(n, m).
double h_stat(const Graph& g, const VertexSequence& s,
              const AffinityMetric& metric);

/// H1 (sequential metric).  Requires m >= 1.
double h1(const Graph& g, const VertexSequence& s);

/// z1 from an already computed H1.  Requires n >= 3.
double z1_from_h1(double h1_value, int n, std::int64_t m);
double z1(const Graph& g, const VertexSequence& s);

/// HG (logarithmic metric) and its z-score.  Requires n >= 2 for hg and the
/// variance to be positive (n >= 3) for zg.
double hg(const Graph& g, const VertexSequence& s);
double zg_from_hg(double hg_value, int n, std::int64_t m);
double zg(const Graph& g, const VertexSequence& s);

/// Per-vertex locality profile: h_i is the median sequential distance from
/// vertex i to its neighbors, counting each parallel edge separately, with
/// the midpoint convention for an even count.  Absent (nullopt) for
/// isolated vertices.
std::vector<std::optional<double>> micro_locality(const Graph& g,
                                                  const VertexSequence& s);

}  // namespace seqloc
