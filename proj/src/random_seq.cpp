#include "seqloc/random_seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>

#include "seqloc/normal.hpp"
#include "seqloc/stats.hpp"

namespace seqloc {

namespace {

double z1_scale(int n, std::int64_t m) {
  return std::sqrt(2.0 * static_cast<double>(m) * (n + 1) / (n - 2));
}

double raw_to_z1(std::int64_t raw, int n, std::int64_t m) {
  const double beta1 = static_cast<double>(m) * (n + 1) / 3.0;
  return z1_scale(n, m) * (static_cast<double>(raw) / beta1 - 1.0);
}

// Multiplicity-weighted raw sequential sum for an explicit position array.
std::int64_t raw_for_positions(const Graph& g, const std::vector<int>& pos) {
  std::int64_t raw = 0;
  for (const Edge& e : g.edges())
    raw += e.mult * std::abs(pos[static_cast<std::size_t>(e.u)] -
                             pos[static_cast<std::size_t>(e.v)]);
  return raw;
}

// Canonical byte encoding of the relabeled edge multiset (positions as
// labels), used to count distinct adjacency matrices.
std::string relabeled_key(const Graph& g, const std::vector<int>& pos) {
  std::vector<std::int64_t> enc;
  enc.reserve(g.edges().size());
  const std::int64_t n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    std::int64_t a = pos[static_cast<std::size_t>(e.u)];
    std::int64_t b = pos[static_cast<std::size_t>(e.v)];
    if (a > b) std::swap(a, b);
    enc.push_back((a * (n + 1) + b) * (g.num_edges() + 1) + e.mult);
  }
  std::sort(enc.begin(), enc.end());
  return std::string(reinterpret_cast<const char*>(enc.data()),
                     enc.size() * sizeof(std::int64_t));
}

void fill_moments(SequenceNullSummary& s) {
  // Mean/variance of z1 from the histogram (double precision view).
  double total = 0.0, sum = 0.0, sum_sq = 0.0;
  for (const auto& [raw, cnt] : s.histogram) {
    const double z = raw_to_z1(raw, s.n, s.m);
    const double c = static_cast<double>(cnt);
    total += c;
    sum += c * z;
    sum_sq += c * z * z;
  }
  const double mean = sum / total;
  s.mean_z1 = mean;
  s.var_z1 = sum_sq / total - mean * mean;
}

}  // namespace

double SequenceNullSummary::min_z1() const {
  if (histogram.empty()) throw ValidationError("empty sequence-null histogram");
  return raw_to_z1(histogram.begin()->first, n, m);
}

double SequenceNullSummary::p_leq(double z) const {
  std::uint64_t below = 0, total = 0;
  for (const auto& [raw, cnt] : histogram) {
    if (raw_to_z1(raw, n, m) <= z) below += cnt;
    total += cnt;
  }
  return static_cast<double>(below) / static_cast<double>(total);
}

double SequenceNullSummary::p_lt(double z) const {
  std::uint64_t below = 0, total = 0;
  for (const auto& [raw, cnt] : histogram) {
    if (raw_to_z1(raw, n, m) < z) below += cnt;
    total += cnt;
  }
  return static_cast<double>(below) / static_cast<double>(total);
}

BigRat SequenceNullSummary::exact_mean_z1() const {
  // E[z1] = scale * (E[raw] / beta1 - 1) with scale irrational; it is
  // representable exactly only when E[raw] = beta1 (then it is 0), which
  // enumeration guarantees.
  BigInt total = 0, sum = 0;
  for (const auto& [raw, cnt] : histogram) {
    total += cnt;
    sum += BigInt(raw) * cnt;
  }
  const BigRat beta1(BigInt(m) * (n + 1), 3);
  const BigRat diff = BigRat(sum, total) - beta1;
  if (diff != 0)
    throw std::logic_error("mean z1 is irrational for this histogram");
  return 0;
}

BigRat SequenceNullSummary::exact_var_z1() const {
  // Var[z1] = (2 m (n+1) / (n-2)) * Var[raw] / beta1^2
  //         = 18 Var[raw] / (m (n+1) (n-2)).
  BigInt total = 0, s1 = 0, s2 = 0;
  for (const auto& [raw, cnt] : histogram) {
    total += cnt;
    s1 += BigInt(raw) * cnt;
    s2 += BigInt(raw) * raw * cnt;
  }
  const BigRat mean(s1, total);
  const BigRat var_raw = BigRat(s2, total) - mean * mean;
  return 18 * var_raw / (BigInt(m) * (n + 1) * (n - 2));
}

nlohmann::json SequenceNullSummary::to_json() const {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [raw, cnt] : histogram) hist.push_back({raw, cnt});
  nlohmann::json j{{"n", n},
                   {"m", m},
                   {"m3", m3},
                   {"mean_z1", mean_z1},
                   {"var_z1", var_z1},
                   {"enumerated", enumerated},
                   {"n_sequences", n_sequences},
                   {"histogram", hist}};
  if (distinct_matrices.has_value()) j["distinct_matrices"] = *distinct_matrices;
  return j;
}

void SequenceNullSummary::write_histogram_csv(std::ostream& out) const {
  out << "raw_sum,count\n";
  for (const auto& [raw, cnt] : histogram) out << raw << "," << cnt << "\n";
}

BigRat randseq_variance_rational(int n, std::int64_t m, std::int64_t m3) {
  if (n < 3) throw ValidationError("variance undefined for n < 3");
  // (n+1)/(n-2) [ (5n-8)/(5(n+1)) + m3 (n-4)/(5 m (n+1)) - 2m/(5(n+1)) ].
  const BigRat lead(n + 1, n - 2);
  const BigRat t1(5 * static_cast<std::int64_t>(n) - 8,
                  5 * static_cast<std::int64_t>(n + 1));
  const BigRat t2(BigInt(m3) * (n - 4), BigInt(5) * m * (n + 1));
  const BigRat t3(2 * m, 5 * static_cast<std::int64_t>(n + 1));
  return lead * (t1 + t2 - t3);
}

double randseq_variance_formula(int n, std::int64_t m, std::int64_t m3) {
  return randseq_variance_rational(n, m, m3).convert_to<double>();
}

double randseq_variance(int n, std::int64_t m, std::int64_t m3) {
  if (n <= 3)
    throw ValidationError(
        "the variance formula assumes n > 3; enumerate the sequence null "
        "instead (exact_seq_distribution)");
  if (m < 1) throw ValidationError("need at least 1 edge");
  return randseq_variance_formula(n, m, m3);
}

double z1_factor(const Graph& g, const VertexSequence& s) {
  const int n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  double var;
  if (n > 3) {
    var = randseq_variance(n, m, g.wedge_count());
  } else {
    var = exact_seq_distribution(g).var_z1;  // tiny n: enumerate
  }
  if (!(var > 0.0))
    throw ValidationError("z1 factor undefined: zero sequence-null variance");
  return z1(g, s) / std::sqrt(var);
}

SequenceNullSummary exact_seq_distribution(const Graph& g, int n_cap) {
  const int n = g.num_vertices();
  if (g.num_edges() < 1) throw ValidationError("need at least 1 edge");
  if (n < 3) throw ValidationError("need at least 3 vertices for z1");
  if (n > n_cap)
    throw ValidationError(
        "n = " + std::to_string(n) + " exceeds the enumeration cap " +
        std::to_string(n_cap) + "; use sampled_seq_distribution");

  SequenceNullSummary s;
  s.n = n;
  s.m = g.num_edges();
  s.m3 = g.wedge_count();
  s.enumerated = true;

  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  std::unordered_set<std::string> distinct;
  std::uint64_t count = 0;
  do {
    ++count;
    ++s.histogram[raw_for_positions(g, pos)];
    distinct.insert(relabeled_key(g, pos));
  } while (std::next_permutation(pos.begin(), pos.end()));

  s.n_sequences = count;
  s.distinct_matrices = static_cast<std::uint64_t>(distinct.size());
  fill_moments(s);
  s.mean_z1 = 0.0;  // exact: enumeration averages distances identically
  return s;
}

SequenceNullSummary sampled_seq_distribution(const Graph& g,
                                             std::uint64_t n_samples,
                                             std::uint64_t seed) {
  const int n = g.num_vertices();
  if (g.num_edges() < 1) throw ValidationError("need at least 1 edge");
  if (n < 3) throw ValidationError("need at least 3 vertices for z1");
  if (n_samples < 1) throw ValidationError("need at least 1 sample");

  SequenceNullSummary s;
  s.n = n;
  s.m = g.num_edges();
  s.m3 = g.wedge_count();
  s.enumerated = false;
  s.n_sequences = n_samples;

  std::mt19937_64 rng(seed);
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    std::shuffle(pos.begin(), pos.end(), rng);
    ++s.histogram[raw_for_positions(g, pos)];
  }
  fill_moments(s);
  return s;
}

std::vector<CurveTable> er_vs_random_curve(int n, std::int64_t m,
                                           const std::vector<double>& m3_ratios,
                                           const std::vector<double>& z1_grid) {
  std::vector<CurveTable> tables;
  tables.reserve(m3_ratios.size());
  const double c = 2.0 * static_cast<double>(m) / n;  // average degree
  for (double ratio : m3_ratios) {
    CurveTable t;
    t.m3_ratio = ratio;
    t.m3 = static_cast<std::int64_t>(
        std::llround(ratio * c * static_cast<double>(m)));
    if (t.m3 < 0) throw ValidationError("negative wedge count");
    t.var_z1 = randseq_variance(n, m, t.m3);
    const double sd = std::sqrt(t.var_z1);
    t.points.reserve(z1_grid.size());
    for (double z : z1_grid) {
      CurvePoint pt;
      pt.z1 = z;
      pt.p_er = lower_tail_p(z);
      pt.p_random = lower_tail_p(z / sd);
      t.points.push_back(pt);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

BigRat distance_product_mean_shared(int n) {
  // E[|a-b||b-c|] over ordered distinct position triples.
  return BigRat(BigInt(n + 1) * (7 * BigInt(n) + 4), 60);
}

BigRat distance_product_mean_disjoint(int n) {
  // E[|a-b||c-d|] over ordered distinct position quadruples.
  return BigRat(BigInt(n + 1) * (5 * BigInt(n) + 4), 45);
}

}  // namespace seqloc
