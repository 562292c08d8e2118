#include "seqloc/metric.hpp"

#include <cmath>
#include <stdexcept>

#include "seqloc/graph.hpp"

namespace seqloc {

AffinityMetric AffinityMetric::step(int r) {
  if (r < 0) throw ValidationError("step metric radius must be nonnegative");
  return AffinityMetric(Kind::kStep, r);
}

double AffinityMetric::value(std::int64_t x, int n) const {
  switch (kind_) {
    case Kind::kSequential:
      return static_cast<double>(x);
    case Kind::kLogarithmic:
      return -std::log1p(-static_cast<double>(x) / n);
    case Kind::kSquared:
      return static_cast<double>(x) * static_cast<double>(x);
    case Kind::kStep:
      return x > radius_ ? 1.0 : 0.0;
  }
  return 0.0;
}

std::int64_t AffinityMetric::int_value(std::int64_t x, int) const {
  switch (kind_) {
    case Kind::kSequential:
      return x;
    case Kind::kSquared:
      return x * x;
    case Kind::kStep:
      return x > radius_ ? 1 : 0;
    case Kind::kLogarithmic:
      break;
  }
  throw ValidationError("metric '" + name() + "' is not integer valued");
}

double AffinityMetric::beta(int n, std::int64_t m) const {
  switch (kind_) {
    case Kind::kSequential:
      return static_cast<double>(m) * (n + 1) / 3.0;
    case Kind::kLogarithmic:
      return log_metric_mean(n) * static_cast<double>(m);
    case Kind::kSquared:
    case Kind::kStep:
      return 1.0;
  }
  return 1.0;
}

std::string AffinityMetric::name() const {
  switch (kind_) {
    case Kind::kSequential:
      return "sequential";
    case Kind::kLogarithmic:
      return "logarithmic";
    case Kind::kSquared:
      return "squared";
    case Kind::kStep:
      return "step:" + std::to_string(radius_);
  }
  return "?";
}

AffinityMetric AffinityMetric::parse(const std::string& text) {
  if (text == "sequential") return sequential();
  if (text == "logarithmic") return logarithmic();
  if (text == "squared") return squared();
  if (text.rfind("step:", 0) == 0) {
    try {
      return step(std::stoi(text.substr(5)));
    } catch (const std::exception&) {
      throw ValidationError("malformed step metric '" + text + "'");
    }
  }
  throw ValidationError("unknown metric '" + text + "'");
}

double log_metric_mean(int n) {
  if (n < 2) throw ValidationError("log metric needs at least 2 vertices");
  // E[-log(1 - x/n)] = log n - (2 / (n (n-1))) sum_{k=1}^{n-1} k log k,
  // since -log(1 - x/n) = log n - log(n - x) and k = n - x runs over 1..n-1
  // with weight 2 k / (n (n-1)).
  double s = 0.0;
  for (int k = 2; k <= n - 1; ++k) s += static_cast<double>(k) * std::log(k);
  return std::log(n) - 2.0 * s / (static_cast<double>(n) * (n - 1));
}

double log_metric_stddev(int n) {
  if (n < 2) throw ValidationError("log metric needs at least 2 vertices");
  const double norm = 2.0 / (static_cast<double>(n) * (n - 1));
  double s1 = 0.0, s2 = 0.0;
  for (int k = 2; k <= n - 1; ++k) {
    const double lk = std::log(k);
    s1 += static_cast<double>(k) * lk;
    s2 += static_cast<double>(k) * lk * lk;
  }
  // Var[log(n - x)] with x the triangular distance; the log n shift cancels.
  const double mean_log = norm * s1;
  const double var = norm * s2 - mean_log * mean_log;
  return std::sqrt(std::max(0.0, var));
}

}  // namespace seqloc
