/// Null distributions of locality raw sums over Erdos-Renyi style edge
/// placements with the vertex sequence held fixed, plus the asymptotic ER
/// test and exact-null samplers.
///
/// Distance population: an edge dropped uniformly on the C(N,2) position
/// pairs has sequential distance x with probability (N - x) / C(N,2),
/// x = 1..N-1.
#pragma once

#include <cstdint>
#include <optional>

#include "seqloc/distribution.hpp"
#include "seqloc/graph.hpp"
#include "seqloc/metric.hpp"
#include "seqloc/report.hpp"

namespace seqloc {

/// Cap on DP work for exact-rational tables: support_length * m cells.
/// Below the cap tables carry exact integer counts; up to 100x the cap the
/// DP runs in long-double arithmetic (doubles only); beyond that a
/// SizeCapError recommends the normal approximation.
inline constexpr std::int64_t kDefaultTableCellCap = 10'000'000;

/// Distance population of one uniformly placed edge:
/// P[x] = 2 (n - x) / (n (n - 1)) for x = 1..n-1.
DistributionTable triangular_pmf(int n);

/// Exact raw-sum table when the m edge distances are independent draws from
/// the distance population (the classical annealed null; also the exact law
/// of the multigraph model up to an O(m^2/n^2) overcounting that cancels for
/// simple outcomes).  Requires an integer-valued metric; n >= 2, m >= 1.
DistributionTable exact_h_distribution_iid(
    int n, std::int64_t m, const AffinityMetric& metric,
    std::int64_t cell_cap = kDefaultTableCellCap);

/// The sequential-metric special case of the iid table.
DistributionTable exact_h1_distribution_iid(
    int n, std::int64_t m, std::int64_t cell_cap = kDefaultTableCellCap);

/// Exact raw-sum table under the uniform distribution over multigraphs with
/// exactly m edges (multisets of position pairs).  Requires an
/// integer-valued metric; n >= 2, m >= 1.
DistributionTable exact_h_distribution_multigraph(
    int n, std::int64_t m, const AffinityMetric& metric,
    std::int64_t cell_cap = kDefaultTableCellCap);

/// Floating-point raw-sum table under the canonical (grand-canonical edge
/// count) model: a Poisson(m) mixture of k-fold distance convolutions,
/// truncated at k_max (default m + 12 sqrt(m) + 20; must be at least
/// m + 10 sqrt(m)).  The dropped Poisson tail mass is reported in
/// truncated_mass.  Requires an integer-valued metric.
DistributionTable canonical_h_distribution(
    int n, std::int64_t m, const AffinityMetric& metric,
    std::optional<std::int64_t> k_max = std::nullopt,
    std::int64_t cell_cap = kDefaultTableCellCap);

/// Ratio by which the iid model overcounts each simple graph relative to the
/// uniform-multiset model: exp(m (m - 1) / (n (n - 1))) asymptotically.
double iid_overcount_ratio(int n, std::int64_t m);

/// Two-sided asymptotic ER test of H1 (normal reference for z1).
TestReport er_test(const Graph& g, const VertexSequence& s, double alpha);

/// One- or two-sided variants; `sidedness` is "two_sided", "lower" or
/// "upper".
TestReport er_test(const Graph& g, const VertexSequence& s, double alpha,
                   const std::string& sidedness);

/// ER test of HG (normal reference for zG).
TestReport er_test_hg(const Graph& g, const VertexSequence& s, double alpha,
                      const std::string& sidedness = "two_sided");

/// Samples a graph with n vertices and exactly m edges uniformly: over all
/// C(C(n,2), m) simple graphs when `simple`, otherwise over all
/// multisets of m position pairs.  Requires m <= C(n,2) when simple.
Graph sample_er(int n, std::int64_t m, bool simple, std::uint64_t seed);

}  // namespace seqloc
