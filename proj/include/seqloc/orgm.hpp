/// Ordered random graph model (ORGM): edges fall uniformly inside / outside
/// an envelope defined on the position axis.  Banded envelopes |p_i - p_j|
/// <= r admit closed-form H1 moments; block-diagonal envelopes support
/// sampling and fitting only.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqloc/distribution.hpp"
#include "seqloc/graph.hpp"
#include "seqloc/report.hpp"

#include <json.hpp>

namespace seqloc {

/// Raised for operations a model variant does not define (e.g. closed-form
/// moments of a block-diagonal envelope).
class NotSupportedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EnvelopeSpec {
 public:
  enum class Kind { kBanded, kBlockDiagonal };

  /// Banded envelope of bandwidth r (positions at distance <= r are inside);
  /// r in [0, n-1], r = n-1 makes everything inside, r = 0 nothing.
  static EnvelopeSpec banded(int r);

  /// Blocks of consecutive positions; sizes must be positive and sum to n.
  static EnvelopeSpec block_diagonal(std::vector<int> sizes);

  Kind kind() const { return kind_; }
  int bandwidth() const { return r_; }
  const std::vector<int>& block_sizes() const { return blocks_; }

  /// Whether the position pair (pi, pj), 1-based, lies inside the envelope.
  bool contains(int pi, int pj, int n) const;

  /// (|Omega_in|, |Omega_out|): number of position pairs inside / outside.
  std::pair<std::int64_t, std::int64_t> omega_sizes(int n) const;

  nlohmann::json to_json() const;

 private:
  EnvelopeSpec(Kind k, int r, std::vector<int> blocks)
      : kind_(k), r_(r), blocks_(std::move(blocks)) {}
  Kind kind_;
  int r_ = 0;
  std::vector<int> blocks_;
};

struct OrgmParams {
  int n = 0;
  EnvelopeSpec envelope = EnvelopeSpec::banded(0);
  std::int64_t m_in = 0;
  std::int64_t m_out = 0;
  bool simple = true;

  std::int64_t m() const { return m_in + m_out; }

  /// Density ratio eps = (m_out/|Omega_out|) / (m_in/|Omega_in|); requires
  /// m_in > 0 and |Omega_out| > 0.
  double eps() const;

  /// Checks feasibility: positive sizes, region capacities respected when
  /// simple, m >= 1.  Throws ValidationError otherwise.
  void validate() const;

  nlohmann::json to_json() const;
  static OrgmParams from_json(const nlohmann::json& j);
};

/// Number of graphs the model can emit: C(|Omega_in|, m_in) *
/// C(|Omega_out|, m_out) for simple, multichoose analogue otherwise.
BigInt orgm_graph_count(const OrgmParams& p);

/// Uniform sample from the model; vertices carry the identity sequence
/// (vertex i at position i + 1).
Graph sample_orgm(const OrgmParams& p, std::uint64_t seed);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Closed-form mean and variance of H1 under the model (banded envelopes
/// only; block-diagonal throws NotSupportedError).  Exact up to floating
/// rounding; the exact-rational raw moments are available below.
Moments orgm_h1_moments(const OrgmParams& p);

/// Normal-approximation parameters (mean, std) of the H1 distribution under
/// the model.  Throws ValidationError when rounding noise would make the
/// variance negative beyond tolerance; clamps tiny negatives to 0.
std::pair<double, double> orgm_h1_normal(const OrgmParams& p);

/// Exact first and second raw moments (E[raw], E[raw^2]) of the sequential
/// raw sum as rationals.  Banded envelopes only.
std::pair<BigRat, BigRat> orgm_raw_moments_exact(const OrgmParams& p);

/// Two-sided test of the in-envelope statistic: H1 of the sub-multigraph of
/// edges with position distance <= r, normalized by beta_1(n, m_in), against
/// the banded model with the observed (m_in, m_out).  Requires m_in >= 2
/// (insufficient-edges error otherwise).  The report's details record the
/// model mean and the alpha-level confidence band (ci_lower, ci_upper).
TestReport in_envelope_test(const Graph& g, const VertexSequence& s, int r,
                            bool simple, double alpha);

/// Raw in-envelope quantities used by the test and the classifier.
struct InEnvelopeStat {
  std::int64_t m_in = 0;
  std::int64_t m_out = 0;
  double h1_in = 0.0;  // normalized by beta_1(n, m_in)
};
InEnvelopeStat in_envelope_stat(const Graph& g, const VertexSequence& s,
                                int r);

}  // namespace seqloc
