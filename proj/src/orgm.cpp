#include "seqloc/orgm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "seqloc/normal.hpp"
#include "seqloc/stats.hpp"
#include "slot_region.hpp"

namespace seqloc {

namespace {

// Sums over distance layers (x = 1..limit, each with n - x slots):
//   S1 = sum x (n - x) = limit (limit+1) (3n - 2 limit - 1) / 6
//   S2 = sum x^2 (n - x) = n sum x^2 - sum x^3
BigRat s1_sum(int n, int limit) {
  const BigInt l(limit);
  return BigRat(l * (l + 1) * (3 * BigInt(n) - 2 * l - 1), 6);
}

BigRat s2_sum(int n, int limit) {
  const BigInt l(limit);
  const BigRat sum_sq(l * (l + 1) * (2 * l + 1), 6);
  const BigRat sum_cu(l * l * (l + 1) * (l + 1), 4);
  return BigInt(n) * sum_sq - sum_cu;
}

struct RegionMoments {
  BigRat p = 0;  // E[A_s]
  BigRat q = 0;  // E[A_s^2]
  BigRat c = 0;  // E[A_s A_t], distinct slots in the same region
};

RegionMoments region_moments(std::int64_t omega, std::int64_t m_region,
                             bool simple) {
  RegionMoments rm;
  if (m_region == 0) return rm;
  if (omega <= 0)
    throw ValidationError("edges assigned to an empty envelope region");
  rm.p = BigRat(m_region, omega);
  if (simple) {
    if (m_region > omega)
      throw ValidationError("too many edges for a simple graph region");
    rm.q = rm.p;
    rm.c = omega >= 2
               ? BigRat(BigInt(m_region) * (m_region - 1),
                        BigInt(omega) * (omega - 1))
               : BigRat(0);
  } else {
    // Uniform multisets of m_region edges over omega slots.
    rm.q = BigRat(BigInt(m_region) * (omega + 2 * m_region - 1),
                  BigInt(omega) * (omega + 1));
    rm.c = BigRat(BigInt(m_region) * (m_region - 1),
                  BigInt(omega) * (omega + 1));
  }
  return rm;
}

}  // namespace

EnvelopeSpec EnvelopeSpec::banded(int r) {
  if (r < 0) throw ValidationError("bandwidth must be nonnegative");
  return EnvelopeSpec(Kind::kBanded, r, {});
}

EnvelopeSpec EnvelopeSpec::block_diagonal(std::vector<int> sizes) {
  if (sizes.empty())
    throw ValidationError("block envelope needs at least one block");
  for (int b : sizes)
    if (b <= 0) throw ValidationError("block sizes must be positive");
  return EnvelopeSpec(Kind::kBlockDiagonal, 0, std::move(sizes));
}

bool EnvelopeSpec::contains(int pi, int pj, int n) const {
  if (pi < 1 || pj < 1 || pi > n || pj > n || pi == pj)
    throw ValidationError("positions must be distinct and within 1..n");
  if (kind_ == Kind::kBanded) return std::abs(pi - pj) <= r_;
  int start = 1;
  for (int b : blocks_) {
    const int end = start + b;  // exclusive
    const bool i_in = pi >= start && pi < end;
    const bool j_in = pj >= start && pj < end;
    if (i_in || j_in) return i_in && j_in;
    start = end;
  }
  return false;
}

std::pair<std::int64_t, std::int64_t> EnvelopeSpec::omega_sizes(int n) const {
  if (n < 2) throw ValidationError("need at least 2 vertices");
  const std::int64_t all = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (kind_ == Kind::kBanded) {
    if (r_ > n - 1)
      throw ValidationError("bandwidth exceeds n - 1");
    const std::int64_t in =
        static_cast<std::int64_t>(r_) * (2 * static_cast<std::int64_t>(n) - r_ - 1) / 2;
    return {in, all - in};
  }
  std::int64_t total = 0, in = 0;
  for (int b : blocks_) {
    total += b;
    in += static_cast<std::int64_t>(b) * (b - 1) / 2;
  }
  if (total != n)
    throw ValidationError("block sizes sum to " + std::to_string(total) +
                          ", expected " + std::to_string(n));
  return {in, all - in};
}

nlohmann::json EnvelopeSpec::to_json() const {
  if (kind_ == Kind::kBanded) return {{"kind", "banded"}, {"r", r_}};
  return {{"kind", "block_diagonal"}, {"blocks", blocks_}};
}

double OrgmParams::eps() const {
  const auto [oin, oout] = envelope.omega_sizes(n);
  if (m_in <= 0 || oout <= 0)
    throw ValidationError("eps undefined: needs m_in > 0 and a nonempty "
                          "out-of-envelope region");
  return (static_cast<double>(m_out) / oout) /
         (static_cast<double>(m_in) / oin);
}

void OrgmParams::validate() const {
  if (n < 2) throw ValidationError("need at least 2 vertices");
  if (m_in < 0 || m_out < 0)
    throw ValidationError("edge counts must be nonnegative");
  const auto [oin, oout] = envelope.omega_sizes(n);
  if (m_in > 0 && oin == 0)
    throw ValidationError("in-envelope edges but empty in-envelope region");
  if (m_out > 0 && oout == 0)
    throw ValidationError("out-of-envelope edges but empty out region");
  if (simple && (m_in > oin || m_out > oout))
    throw ValidationError(
        "simple variant: region capacities exceeded (m_in <= " +
        std::to_string(oin) + ", m_out <= " + std::to_string(oout) + ")");
}

nlohmann::json OrgmParams::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  if (envelope.kind() == EnvelopeSpec::Kind::kBanded)
    j["r"] = envelope.bandwidth();
  else
    j["blocks"] = envelope.block_sizes();
  j["m_in"] = m_in;
  j["m_out"] = m_out;
  j["simple"] = simple;
  return j;
}

OrgmParams OrgmParams::from_json(const nlohmann::json& j) {
  OrgmParams p;
  p.n = j.at("n").get<int>();
  if (j.contains("r") && j.contains("blocks"))
    throw ValidationError("specify either r or blocks, not both");
  if (j.contains("r"))
    p.envelope = EnvelopeSpec::banded(j.at("r").get<int>());
  else if (j.contains("blocks"))
    p.envelope =
        EnvelopeSpec::block_diagonal(j.at("blocks").get<std::vector<int>>());
  else
    throw ValidationError("missing envelope: need r or blocks");
  p.m_in = j.at("m_in").get<std::int64_t>();
  p.m_out = j.at("m_out").get<std::int64_t>();
  p.simple = j.value("simple", true);
  p.validate();
  return p;
}

BigInt orgm_graph_count(const OrgmParams& p) {
  p.validate();
  const auto [oin, oout] = p.envelope.omega_sizes(p.n);
  return p.simple ? binomial(oin, p.m_in) * binomial(oout, p.m_out)
                  : multichoose(oin, p.m_in) * multichoose(oout, p.m_out);
}

Graph sample_orgm(const OrgmParams& p, std::uint64_t seed) {
  p.validate();
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.m()));
  if (p.envelope.kind() == EnvelopeSpec::Kind::kBanded) {
    const int r = p.envelope.bandwidth();
    const auto in = detail::SlotRegion::distance_range(p.n, 1, r);
    const auto out = detail::SlotRegion::distance_range(p.n, r + 1, p.n - 1);
    detail::sample_region_edges(in, p.m_in, p.simple, rng, edges);
    detail::sample_region_edges(out, p.m_out, p.simple, rng, edges);
  } else {
    std::vector<std::pair<int, int>> in_slots, out_slots;
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j)
        (p.envelope.contains(i + 1, j + 1, p.n) ? in_slots : out_slots)
            .emplace_back(i, j);
    detail::sample_region_edges(detail::SlotRegion::explicit_slots(in_slots),
                                p.m_in, p.simple, rng, edges);
    detail::sample_region_edges(detail::SlotRegion::explicit_slots(out_slots),
                                p.m_out, p.simple, rng, edges);
  }
  return Graph::from_edges(p.n, edges);
}

std::pair<BigRat, BigRat> orgm_raw_moments_exact(const OrgmParams& p) {
  p.validate();
  if (p.envelope.kind() != EnvelopeSpec::Kind::kBanded)
    throw NotSupportedError(
        "closed-form moments are defined for banded envelopes only");
  if (p.m() < 1) throw ValidationError("need at least 1 edge");
  const int n = p.n;
  const int r = p.envelope.bandwidth();
  const auto [oin, oout] = p.envelope.omega_sizes(n);

  const BigRat s1_in = s1_sum(n, r);
  const BigRat s1_all = s1_sum(n, n - 1);
  const BigRat s1_out = s1_all - s1_in;
  const BigRat s2_in = s2_sum(n, r);
  const BigRat s2_all = s2_sum(n, n - 1);
  const BigRat s2_out = s2_all - s2_in;

  const RegionMoments in = region_moments(oin, p.m_in, p.simple);
  const RegionMoments out = region_moments(oout, p.m_out, p.simple);

  const BigRat mean = in.p * s1_in + out.p * s1_out;
  const BigRat second = in.q * s2_in + out.q * s2_out +
                        in.c * (s1_in * s1_in - s2_in) +
                        out.c * (s1_out * s1_out - s2_out) +
                        2 * in.p * out.p * s1_in * s1_out;
  return {mean, second};
}

Moments orgm_h1_moments(const OrgmParams& p) {
  const auto [raw_mean, raw_second] = orgm_raw_moments_exact(p);
  const BigRat beta1(BigInt(p.m()) * (p.n + 1), 3);
  const BigRat mean = raw_mean / beta1;
  const BigRat var = raw_second / (beta1 * beta1) - mean * mean;
  return {mean.convert_to<double>(), var.convert_to<double>()};
}

std::pair<double, double> orgm_h1_normal(const OrgmParams& p) {
  const Moments mo = orgm_h1_moments(p);
  if (mo.variance < -1e-12)
    throw ValidationError("negative model variance (numeric degeneracy)");
  return {mo.mean, std::sqrt(std::max(0.0, mo.variance))};
}

InEnvelopeStat in_envelope_stat(const Graph& g, const VertexSequence& s,
                                int r) {
  if (s.size() != g.num_vertices())
    throw ValidationError("sequence length does not match vertex count");
  InEnvelopeStat st;
  std::int64_t raw_in = 0;
  for (const Edge& e : g.edges()) {
    const std::int64_t x = std::abs(s.position(e.u) - s.position(e.v));
    if (x <= r) {
      st.m_in += e.mult;
      raw_in += e.mult * x;
    } else {
      st.m_out += e.mult;
    }
  }
  if (st.m_in > 0) {
    const double beta1 =
        static_cast<double>(st.m_in) * (g.num_vertices() + 1) / 3.0;
    st.h1_in = static_cast<double>(raw_in) / beta1;
  }
  return st;
}

TestReport in_envelope_test(const Graph& g, const VertexSequence& s, int r,
                            bool simple, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");
  const int n = g.num_vertices();
  if (r < 1 || r > n - 1)
    throw ValidationError("bandwidth outside [1, n-1]");
  const InEnvelopeStat st = in_envelope_stat(g, s, r);
  if (st.m_in < 2)
    throw ValidationError(
        "insufficient in-envelope edges (need at least 2, found " +
        std::to_string(st.m_in) + ")");

  // Null: the m_in in-envelope edges fall uniformly in the banded region
  // (out-of-envelope entries are ignored, hence m_out = 0 in the model).
  OrgmParams null_params;
  null_params.n = n;
  null_params.envelope = EnvelopeSpec::banded(r);
  null_params.m_in = st.m_in;
  null_params.m_out = 0;
  null_params.simple = simple;
  const auto [mean, sd] = orgm_h1_normal(null_params);

  double z, p;
  if (sd > 0.0) {
    z = (st.h1_in - mean) / sd;
    p = two_sided_p(z);
  } else {
    z = st.h1_in == mean ? 0.0
                         : std::copysign(
                               std::numeric_limits<double>::infinity(),
                               st.h1_in - mean);
    p = st.h1_in == mean ? 1.0 : 0.0;
  }
  const double zq = normal_quantile(1.0 - alpha / 2.0);

  TestReport rep;
  rep.statistic = "H1_in";
  rep.null_model = "orgm_banded_normal";
  rep.sidedness = "two_sided";
  rep.observed = st.h1_in;
  rep.z = z;
  rep.p_value = p;
  rep.alpha = alpha;
  rep.reject = p < alpha;
  rep.details = {{"n", n},
                 {"r", r},
                 {"m_in", st.m_in},
                 {"m_out_observed", st.m_out},
                 {"variant", simple ? "simple" : "multigraph"},
                 {"normalization", "beta1 computed from m_in"},
                 {"mean", mean},
                 {"std", sd},
                 {"ci_lower", mean - zq * sd},
                 {"ci_upper", mean + zq * sd}};
  return rep;
}

}  // namespace seqloc
