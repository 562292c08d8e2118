#include "seqloc/exact.hpp"

#include <cmath>

namespace seqloc {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

BigInt multichoose(std::int64_t n, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("multichoose: negative size");
  if (m == 0) return 1;
  if (n <= 0) return 0;
  return binomial(n + m - 1, m);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k outside [0, n]");
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_multichoose(std::int64_t n, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("log_multichoose: negative size");
  if (m == 0) return 0.0;
  if (n <= 0) throw std::invalid_argument("log_multichoose: empty ground set");
  return log_binomial(n + m - 1, m);
}

double to_double(const BigRat& x) { return x.convert_to<double>(); }

}  // namespace seqloc
