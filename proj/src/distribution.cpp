#include "seqloc/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace seqloc {

double DistributionTable::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i)
    s += static_cast<double>(support[i]) * probability[i];
  return s;
}

double DistributionTable::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double d = static_cast<double>(support[i]) - mu;
    s += d * d * probability[i];
  }
  return s;
}

double DistributionTable::cdf_leq(std::int64_t v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < support.size() && support[i] <= v; ++i)
    s += probability[i];
  return s;
}

double DistributionTable::cdf_lt(std::int64_t v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < support.size() && support[i] < v; ++i)
    s += probability[i];
  return s;
}

BigRat DistributionTable::exact_probability(std::size_t i) const {
  if (!has_exact()) throw std::logic_error("table has no exact counts");
  return BigRat(count[i], denominator);
}

BigRat DistributionTable::exact_mean() const {
  if (!has_exact()) throw std::logic_error("table has no exact counts");
  BigInt weighted = 0;
  for (std::size_t i = 0; i < support.size(); ++i)
    weighted += BigInt(support[i]) * count[i];
  return BigRat(weighted, denominator);
}

BigRat DistributionTable::exact_variance() const {
  if (!has_exact()) throw std::logic_error("table has no exact counts");
  BigInt w1 = 0, w2 = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    w1 += BigInt(support[i]) * count[i];
    w2 += BigInt(support[i]) * support[i] * count[i];
  }
  const BigRat mu(w1, denominator);
  return BigRat(w2, denominator) - mu * mu;
}

BigRat DistributionTable::exact_cdf_leq(std::int64_t v) const {
  if (!has_exact()) throw std::logic_error("table has no exact counts");
  BigInt c = 0;
  for (std::size_t i = 0; i < support.size() && support[i] <= v; ++i)
    c += count[i];
  return BigRat(c, denominator);
}

void DistributionTable::write_csv(std::ostream& out) const {
  out << "raw_sum,probability\n";
  char buf[64];
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", probability[i]);
    out << support[i] << "," << buf << "\n";
  }
}

nlohmann::json DistributionTable::to_json() const {
  nlohmann::json j;
  j["support"] = support;
  j["probability"] = probability;
  j["truncated_mass"] = truncated_mass;
  if (has_exact()) {
    std::vector<std::string> counts;
    counts.reserve(count.size());
    for (const BigInt& c : count) counts.push_back(c.str());
    j["count"] = counts;
    j["denominator"] = denominator.str();
  }
  return j;
}

}  // namespace seqloc
