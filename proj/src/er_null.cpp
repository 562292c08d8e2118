#include "seqloc/er_null.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "seqloc/normal.hpp"
#include "seqloc/stats.hpp"
#include "slot_region.hpp"

namespace seqloc {

namespace {

// Aggregated per-edge value population: distinct metric values with their
// slot counts (weight n - x per distance x).
struct ValuePopulation {
  std::vector<std::int64_t> values;   // ascending
  std::vector<std::int64_t> weights;  // positive slot counts
  std::int64_t total_weight = 0;      // C(n, 2)
  std::int64_t min_v = 0, max_v = 0;
};

ValuePopulation build_population(int n, const AffinityMetric& metric) {
  if (n < 2) throw ValidationError("need at least 2 vertices");
  if (!metric.integer_valued())
    throw ValidationError("exact tables require an integer-valued metric");
  std::map<std::int64_t, std::int64_t> agg;
  for (int x = 1; x <= n - 1; ++x)
    agg[metric.int_value(x, n)] += n - x;
  ValuePopulation pop;
  for (const auto& [v, w] : agg) {
    pop.values.push_back(v);
    pop.weights.push_back(w);
    pop.total_weight += w;
  }
  pop.min_v = pop.values.front();
  pop.max_v = pop.values.back();
  return pop;
}

// Shared cap policy: exact rationals below `cell_cap` cells, long-double DP
// up to 100x that, error beyond.
enum class DpMode { kExact, kFloat };

DpMode dp_mode(std::int64_t support_len, std::int64_t m,
               std::int64_t cell_cap) {
  const std::int64_t cells = support_len * m;
  if (cells <= cell_cap) return DpMode::kExact;
  if (cells <= 100 * cell_cap) return DpMode::kFloat;
  throw SizeCapError(
      "distribution table needs " + std::to_string(cells) +
      " DP cells (cap " + std::to_string(100 * cell_cap) +
      "); use the normal approximation instead");
}

DistributionTable finalize_exact(std::vector<BigInt> dp, std::int64_t offset,
                                 const BigInt& denominator) {
  DistributionTable t;
  t.denominator = denominator;
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (dp[i] == 0) continue;
    t.support.push_back(offset + static_cast<std::int64_t>(i));
    t.probability.push_back(BigRat(dp[i], denominator).convert_to<double>());
    t.count.push_back(std::move(dp[i]));
  }
  return t;
}

DistributionTable finalize_float(const std::vector<long double>& dp,
                                 std::int64_t offset) {
  DistributionTable t;
  long double total = 0.0L;
  for (long double p : dp) total += p;
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (dp[i] <= 0.0L) continue;
    t.support.push_back(offset + static_cast<std::int64_t>(i));
    t.probability.push_back(static_cast<double>(dp[i] / total));
  }
  return t;
}

}  // namespace

DistributionTable triangular_pmf(int n) {
  if (n < 2) throw ValidationError("need at least 2 vertices");
  DistributionTable t;
  t.denominator = binomial(n, 2);
  for (int x = 1; x <= n - 1; ++x) {
    t.support.push_back(x);
    t.count.push_back(n - x);
    t.probability.push_back(
        BigRat(BigInt(n - x), t.denominator).convert_to<double>());
  }
  return t;
}

DistributionTable exact_h_distribution_iid(int n, std::int64_t m,
                                           const AffinityMetric& metric,
                                           std::int64_t cell_cap) {
  if (m < 1) throw ValidationError("need at least 1 edge");
  const ValuePopulation pop = build_population(n, metric);
  const std::int64_t lo = m * pop.min_v, hi = m * pop.max_v;
  const std::int64_t width = hi - lo + 1;
  const DpMode mode = dp_mode(width, m, cell_cap);

  if (mode == DpMode::kExact) {
    // dp over the sum of k iid per-edge values, counts weighted by slot
    // multiplicity; after k steps dp sums to C(n,2)^k.
    std::vector<BigInt> dp(static_cast<std::size_t>(pop.max_v - pop.min_v + 1));
    for (std::size_t j = 0; j < pop.values.size(); ++j)
      dp[static_cast<std::size_t>(pop.values[j] - pop.min_v)] = pop.weights[j];
    std::int64_t cur_lo = pop.min_v, cur_hi = pop.max_v;
    for (std::int64_t step = 2; step <= m; ++step) {
      const std::int64_t next_lo = cur_lo + pop.min_v;
      const std::int64_t next_hi = cur_hi + pop.max_v;
      std::vector<BigInt> next(static_cast<std::size_t>(next_hi - next_lo + 1));
      for (std::size_t s = 0; s < dp.size(); ++s) {
        if (dp[s] == 0) continue;
        const std::int64_t base = cur_lo + static_cast<std::int64_t>(s);
        for (std::size_t j = 0; j < pop.values.size(); ++j)
          next[static_cast<std::size_t>(base + pop.values[j] - next_lo)] +=
              dp[s] * pop.weights[j];
      }
      dp = std::move(next);
      cur_lo = next_lo;
      cur_hi = next_hi;
    }
    BigInt denom = 1;
    for (std::int64_t step = 0; step < m; ++step) denom *= pop.total_weight;
    return finalize_exact(std::move(dp), cur_lo, denom);
  }

  std::vector<long double> dp(static_cast<std::size_t>(pop.max_v - pop.min_v + 1), 0.0L);
  for (std::size_t j = 0; j < pop.values.size(); ++j)
    dp[static_cast<std::size_t>(pop.values[j] - pop.min_v)] =
        static_cast<long double>(pop.weights[j]) / pop.total_weight;
  std::int64_t cur_lo = pop.min_v, cur_hi = pop.max_v;
  for (std::int64_t step = 2; step <= m; ++step) {
    const std::int64_t next_lo = cur_lo + pop.min_v;
    const std::int64_t next_hi = cur_hi + pop.max_v;
    std::vector<long double> next(static_cast<std::size_t>(next_hi - next_lo + 1), 0.0L);
    for (std::size_t s = 0; s < dp.size(); ++s) {
      if (dp[s] <= 0.0L) continue;
      const std::int64_t base = cur_lo + static_cast<std::int64_t>(s);
      for (std::size_t j = 0; j < pop.values.size(); ++j)
        next[static_cast<std::size_t>(base + pop.values[j] - next_lo)] +=
            dp[s] * static_cast<long double>(pop.weights[j]) / pop.total_weight;
    }
    dp = std::move(next);
    cur_lo = next_lo;
    cur_hi = next_hi;
  }
  return finalize_float(dp, cur_lo);
}

DistributionTable exact_h1_distribution_iid(int n, std::int64_t m,
                                            std::int64_t cell_cap) {
  return exact_h_distribution_iid(n, m, AffinityMetric::sequential(), cell_cap);
}

DistributionTable exact_h_distribution_multigraph(int n, std::int64_t m,
                                                  const AffinityMetric& metric,
                                                  std::int64_t cell_cap) {
  if (m < 1) throw ValidationError("need at least 1 edge");
  const ValuePopulation pop = build_population(n, metric);
  const std::int64_t lo = m * pop.min_v, hi = m * pop.max_v;
  const std::int64_t width = hi - lo + 1;
  const DpMode mode = dp_mode(width, m, cell_cap);

  // layer[k][s]: weighted count of multisets of k edges with value sum
  // k * min_v + s, processed class by class; a class of c slots sharing one
  // value contributes multichoose(c, j) ways to place j of its edges.
  if (mode == DpMode::kExact) {
    std::vector<std::vector<BigInt>> layer(static_cast<std::size_t>(m + 1));
    layer[0] = {BigInt(1)};  // sum = 0 relative to 0*min_v
    for (std::size_t j = 0; j < pop.values.size(); ++j) {
      const std::int64_t v = pop.values[j];
      const std::int64_t c = pop.weights[j];
      std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(m + 1));
      for (std::int64_t k = 0; k <= m; ++k)
        next[static_cast<std::size_t>(k)].assign(
            static_cast<std::size_t>(k * (pop.max_v - pop.min_v) + 1),
            BigInt(0));
      for (std::int64_t k = 0; k <= m; ++k) {
        const auto& src = layer[static_cast<std::size_t>(k)];
        for (std::size_t s = 0; s < src.size(); ++s) {
          if (src[s] == 0) continue;
          const std::int64_t sum = k * pop.min_v + static_cast<std::int64_t>(s);
          BigInt ways = 1;  // multichoose(c, take)
          for (std::int64_t take = 0; k + take <= m; ++take) {
            if (take > 0) {
              ways *= (c + take - 1);
              ways /= take;
            }
            const std::int64_t k2 = k + take;
            const std::int64_t sum2 = sum + take * v;
            auto& dst = next[static_cast<std::size_t>(k2)];
            dst[static_cast<std::size_t>(sum2 - k2 * pop.min_v)] += src[s] * ways;
          }
        }
      }
      layer = std::move(next);
    }
    std::vector<BigInt> final_counts = std::move(layer[static_cast<std::size_t>(m)]);
    return finalize_exact(std::move(final_counts), m * pop.min_v,
                          multichoose(pop.total_weight, m));
  }

  std::vector<std::vector<long double>> layer(static_cast<std::size_t>(m + 1));
  layer[0] = {1.0L};
  for (std::size_t j = 0; j < pop.values.size(); ++j) {
    const std::int64_t v = pop.values[j];
    const std::int64_t c = pop.weights[j];
    std::vector<std::vector<long double>> next(static_cast<std::size_t>(m + 1));
    for (std::int64_t k = 0; k <= m; ++k)
      next[static_cast<std::size_t>(k)].assign(
          static_cast<std::size_t>(k * (pop.max_v - pop.min_v) + 1), 0.0L);
    for (std::int64_t k = 0; k <= m; ++k) {
      const auto& src = layer[static_cast<std::size_t>(k)];
      for (std::size_t s = 0; s < src.size(); ++s) {
        if (src[s] <= 0.0L) continue;
        const std::int64_t sum = k * pop.min_v + static_cast<std::int64_t>(s);
        long double ways = 1.0L;
        for (std::int64_t take = 0; k + take <= m; ++take) {
          if (take > 0) ways *= static_cast<long double>(c + take - 1) / take;
          const std::int64_t k2 = k + take;
          const std::int64_t sum2 = sum + take * v;
          next[static_cast<std::size_t>(k2)]
              [static_cast<std::size_t>(sum2 - k2 * pop.min_v)] += src[s] * ways;
        }
      }
    }
    layer = std::move(next);
  }
  return finalize_float(layer[static_cast<std::size_t>(m)], m * pop.min_v);
}

DistributionTable canonical_h_distribution(int n, std::int64_t m,
                                           const AffinityMetric& metric,
                                           std::optional<std::int64_t> k_max,
                                           std::int64_t cell_cap) {
  if (m < 1) throw ValidationError("need at least 1 edge");
  const double sqrt_m = std::sqrt(static_cast<double>(m));
  const std::int64_t k_cut =
      k_max.value_or(m + static_cast<std::int64_t>(12.0 * sqrt_m) + 20);
  if (static_cast<double>(k_cut) < static_cast<double>(m) + 10.0 * sqrt_m)
    throw ValidationError("k_max below the Poisson tail cutoff m + 10 sqrt(m)");
  const ValuePopulation pop = build_population(n, metric);
  const std::int64_t width = k_cut * (pop.max_v - pop.min_v) + 1;
  if (width * k_cut > 100 * cell_cap)
    throw SizeCapError("canonical table too large; reduce k_max or sizes");

  // Population pmf in long double.
  std::vector<long double> step(static_cast<std::size_t>(pop.max_v - pop.min_v + 1), 0.0L);
  for (std::size_t j = 0; j < pop.values.size(); ++j)
    step[static_cast<std::size_t>(pop.values[j] - pop.min_v)] =
        static_cast<long double>(pop.weights[j]) / pop.total_weight;

  // Accumulate sum_k Pois(m)[k] * (k-fold convolution) over a window
  // covering sum = 0 (the k = 0 term) through k_cut * max_v.
  const double log_m = std::log(static_cast<double>(m));
  const std::int64_t global_lo = std::min<std::int64_t>(0, k_cut * pop.min_v);
  const std::int64_t global_hi = std::max<std::int64_t>(0, k_cut * pop.max_v);
  std::vector<long double> mix(
      static_cast<std::size_t>(global_hi - global_lo + 1), 0.0L);

  std::vector<long double> conv = {1.0L};  // 0-fold, sum relative to 0
  long double covered = 0.0L;
  for (std::int64_t k = 0; k <= k_cut; ++k) {
    const long double pois = std::exp(
        -static_cast<double>(m) + static_cast<double>(k) * log_m -
        std::lgamma(static_cast<double>(k) + 1.0));
    covered += pois;
    const std::int64_t base = k * pop.min_v;
    for (std::size_t s = 0; s < conv.size(); ++s) {
      if (conv[s] <= 0.0L) continue;
      mix[static_cast<std::size_t>(base + static_cast<std::int64_t>(s) - global_lo)] +=
          pois * conv[s];
    }
    if (k == k_cut) break;
    // conv <- conv * step
    std::vector<long double> next(conv.size() + step.size() - 1, 0.0L);
    for (std::size_t s = 0; s < conv.size(); ++s) {
      if (conv[s] <= 0.0L) continue;
      for (std::size_t j = 0; j < step.size(); ++j)
        next[s + j] += conv[s] * step[j];
    }
    conv = std::move(next);
  }

  DistributionTable t;
  // The exact tail mass is nonnegative; the subtraction can round below 0.
  t.truncated_mass = std::max(0.0, static_cast<double>(1.0L - covered));
  for (std::size_t i = 0; i < mix.size(); ++i) {
    if (mix[i] <= 0.0L) continue;
    t.support.push_back(global_lo + static_cast<std::int64_t>(i));
    t.probability.push_back(static_cast<double>(mix[i]));
  }
  return t;
}

double iid_overcount_ratio(int n, std::int64_t m) {
  return std::exp(static_cast<double>(m) * (m - 1) /
                  (static_cast<double>(n) * (n - 1)));
}

TestReport er_test(const Graph& g, const VertexSequence& s, double alpha,
                   const std::string& sidedness) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  const int n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  const double h = h1(g, s);
  const double z = z1_from_h1(h, n, m);
  TestReport rep;
  rep.statistic = "H1";
  rep.null_model = "er_fixed_m_normal";
  rep.sidedness = sidedness;
  rep.observed = h;
  rep.z = z;
  if (sidedness == "two_sided") {
    rep.p_value = two_sided_p(z);
  } else if (sidedness == "lower") {
    rep.p_value = lower_tail_p(z);
  } else if (sidedness == "upper") {
    rep.p_value = 1.0 - lower_tail_p(z);
  } else {
    throw ValidationError("sidedness must be two_sided, lower or upper");
  }
  rep.alpha = alpha;
  rep.reject = rep.p_value < alpha;
  rep.details = {{"n", n},
                 {"m", m},
                 {"null", "Erdos-Renyi, fixed edge count, iid normal approximation"}};
  return rep;
}

TestReport er_test(const Graph& g, const VertexSequence& s, double alpha) {
  return er_test(g, s, alpha, "two_sided");
}

TestReport er_test_hg(const Graph& g, const VertexSequence& s, double alpha,
                      const std::string& sidedness) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  const int n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  const double h = hg(g, s);
  const double z = zg_from_hg(h, n, m);
  TestReport rep;
  rep.statistic = "HG";
  rep.null_model = "er_fixed_m_normal";
  rep.sidedness = sidedness;
  rep.observed = h;
  rep.z = z;
  if (sidedness == "two_sided") {
    rep.p_value = two_sided_p(z);
  } else if (sidedness == "lower") {
    rep.p_value = lower_tail_p(z);
  } else if (sidedness == "upper") {
    rep.p_value = 1.0 - lower_tail_p(z);
  } else {
    throw ValidationError("sidedness must be two_sided, lower or upper");
  }
  rep.alpha = alpha;
  rep.reject = rep.p_value < alpha;
  rep.details = {{"n", n},
                 {"m", m},
                 {"null", "Erdos-Renyi, fixed edge count, iid normal approximation"}};
  return rep;
}

Graph sample_er(int n, std::int64_t m, bool simple, std::uint64_t seed) {
  if (n < 2 && m > 0) throw ValidationError("need at least 2 vertices");
  const auto region = detail::SlotRegion::distance_range(n, 1, n - 1);
  if (simple && m > region.size())
    throw ValidationError("m exceeds C(n,2) for a simple graph");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  detail::sample_region_edges(region, m, simple, rng, edges);
  return Graph::from_edges(n, edges);
}

}  // namespace seqloc
