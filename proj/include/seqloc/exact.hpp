/// Exact combinatorial helpers: arbitrary-precision integers/rationals,
/// binomial coefficients, multiset coefficients, and their log-space versions.
#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqloc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Number of multisets of size m drawn from n distinct elements,
/// C(n + m - 1, m).  By convention equals 1 when m == 0 (also for n == 0)
/// and 0 when n == 0 and m > 0.
BigInt multichoose(std::int64_t n, std::int64_t m);

/// log C(n, k) evaluated with the log-gamma function (exact up to floating
/// rounding, not a Stirling truncation).  Requires 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// log of multichoose(n, m) via log-gamma.  Requires m >= 0 and, when m > 0,
/// n >= 1.  Returns 0 for m == 0.
double log_multichoose(std::int64_t n, std::int64_t m);

/// Lossy conversion of an exact rational to double (used for reporting only).
double to_double(const BigRat& x);

}  // namespace seqloc
