#include "seqloc/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seqloc/er_null.hpp"
#include "seqloc/normal.hpp"
#include "seqloc/ordering.hpp"
#include "seqloc/stats.hpp"

namespace seqloc {

namespace {

// Multiplicity-weighted count of edges at each sequential distance.
std::vector<std::int64_t> distance_histogram(const Graph& g,
                                             const VertexSequence& s) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  std::vector<std::int64_t> cnt(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges())
    cnt[static_cast<std::size_t>(std::abs(s.position(e.u) - s.position(e.v)))] +=
        e.mult;
  return cnt;
}

}  // namespace

FitResult fit_bandwidth(const Graph& g, const VertexSequence& s, bool simple) {
  const int n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  if (n < 3) throw ValidationError("need at least 3 vertices");
  if (m < 1) throw ValidationError("need at least 1 edge");

  const std::vector<std::int64_t> cnt = distance_histogram(g, s);
  FitResult fit;
  fit.simple = simple;
  fit.curve.reserve(static_cast<std::size_t>(n - 1));

  std::int64_t m_in = 0;
  int best_r = -1;
  double best_obj = std::numeric_limits<double>::infinity();
  for (int r = 1; r <= n - 1; ++r) {
    m_in += cnt[static_cast<std::size_t>(r)];
    const std::int64_t m_out = m - m_in;
    const auto [oin, oout] = EnvelopeSpec::banded(r).omega_sizes(n);
    FitRow row;
    row.r = r;
    row.m_in = m_in;
    row.m_out = m_out;
    row.feasible = !simple || (m_in <= oin && m_out <= oout);
    if (row.feasible) {
      // Number of graphs the model can emit; the MLE of r minimizes it
      // (uniform likelihood = 1 / count).
      row.log_count = simple
                          ? log_binomial(oin, m_in) + log_binomial(oout, m_out)
                          : log_multichoose(oin, m_in) +
                                log_multichoose(oout, m_out);
      if (row.log_count < best_obj) {  // strict: ties keep the smaller r
        best_obj = row.log_count;
        best_r = r;
      }
    } else {
      row.log_count = std::numeric_limits<double>::quiet_NaN();
    }
    fit.curve.push_back(row);
  }
  if (best_r < 0)
    throw ValidationError("no feasible bandwidth for the simple variant");

  fit.r_star = best_r;
  const FitRow& best = fit.curve[static_cast<std::size_t>(best_r - 1)];
  fit.m_in = best.m_in;
  fit.m_out = best.m_out;
  const auto [oin, oout] = EnvelopeSpec::banded(best_r).omega_sizes(n);
  if (best.m_in > 0 && oout > 0)
    fit.eps_star = (static_cast<double>(best.m_out) / static_cast<double>(oout)) /
                   (static_cast<double>(best.m_in) / static_cast<double>(oin));
  else if (best.m_out == 0)
    fit.eps_star = 0.0;
  else
    fit.eps_star = std::numeric_limits<double>::infinity();
  return fit;
}

std::vector<SweepRow> ci_sweep(const Graph& g, const VertexSequence& s,
                               bool simple, double alpha, int r_lo, int r_hi) {
  const int n = g.num_vertices();
  if (r_hi <= 0) r_hi = n - 1;
  if (r_lo < 1 || r_hi > n - 1 || r_lo > r_hi)
    throw ValidationError("sweep range outside [1, n-1]");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  const double zq = normal_quantile(1.0 - alpha / 2.0);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(r_hi - r_lo + 1));
  for (int r = r_lo; r <= r_hi; ++r) {
    const InEnvelopeStat st = in_envelope_stat(g, s, r);
    SweepRow row;
    row.r = r;
    row.m_in = st.m_in;
    row.m_out = st.m_out;
    row.h1_in = st.h1_in;
    row.defined = st.m_in >= 2;
    if (row.defined) {
      OrgmParams null_params;
      null_params.n = n;
      null_params.envelope = EnvelopeSpec::banded(r);
      null_params.m_in = st.m_in;
      null_params.m_out = 0;
      null_params.simple = simple;
      try {
        const auto [mean, sd] = orgm_h1_normal(null_params);
        row.mean = mean;
        row.ci_lower = mean - zq * sd;
        row.ci_upper = mean + zq * sd;
        if (sd > 0.0) {
          row.z = (st.h1_in - mean) / sd;
          row.p_value = two_sided_p(row.z);
        } else {
          row.z = st.h1_in == mean
                      ? 0.0
                      : std::copysign(std::numeric_limits<double>::infinity(),
                                      st.h1_in - mean);
          row.p_value = st.h1_in == mean ? 1.0 : 0.0;
        }
      } catch (const ValidationError&) {
        row.defined = false;  // e.g. multiedges exceed a simple region
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double max_average_ratio(int n, int r) {
  if (r < 1 || r > n - 1)
    throw ValidationError("bandwidth outside [1, n-1]");
  return 3.0 * r * (2.0 * n - r - 1) / ((r + 1.0) * (3.0 * n - 2.0 * r - 1));
}

std::string to_string(LocalityType t) {
  switch (t) {
    case LocalityType::kI: return "I";
    case LocalityType::kII: return "II";
    case LocalityType::kIII: return "III";
    case LocalityType::kIV: return "IV";
    case LocalityType::kIndeterminate: return "indeterminate";
  }
  return "?";
}

LocalityType classify(const ClassificationInput& in) {
  if (in.h1_in < in.ci_lower) return LocalityType::kI;
  if (in.h1_in <= in.ci_upper) return LocalityType::kII;
  if (!in.er_reference_quantile.has_value())
    return LocalityType::kIndeterminate;
  return in.h1_all < *in.er_reference_quantile ? LocalityType::kIII
                                               : LocalityType::kIV;
}

LocalityType classify(const TestReport& report_all,
                      const TestReport& report_in,
                      const std::optional<std::vector<double>>& er_reference,
                      double alpha) {
  ClassificationInput in;
  in.h1_in = report_in.observed;
  in.ci_lower = report_in.details.at("ci_lower").get<double>();
  in.ci_upper = report_in.details.at("ci_upper").get<double>();
  in.h1_all = report_all.observed;
  if (er_reference.has_value()) {
    std::vector<double> sorted = *er_reference;
    std::sort(sorted.begin(), sorted.end());
    in.er_reference_quantile = empirical_quantile(sorted, alpha);
  }
  return classify(in);
}

std::vector<double> er_reference_h1(int n, std::int64_t m, int count,
                                    std::uint64_t seed) {
  if (count < 1) throw ValidationError("reference sample count must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Graph g = sample_er(n, m, /*simple=*/true, seed + static_cast<std::uint64_t>(i));
    const OrderingResult ord = spectral_ordering(g);
    values.push_back(h1(g, ord.sequence));
  }
  std::sort(values.begin(), values.end());
  return values;
}

double empirical_quantile(const std::vector<double>& sorted_values,
                          double alpha) {
  if (sorted_values.empty())
    throw ValidationError("quantile of an empty sample");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  const std::size_t k = sorted_values.size();
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(alpha * static_cast<double>(k)));
  rank = std::clamp<std::size_t>(rank, 1, k);
  return sorted_values[rank - 1];
}

}  // namespace seqloc
