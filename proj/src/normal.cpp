#include "seqloc/normal.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace seqloc {

namespace {
const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);
}

double normal_cdf(double z) { return boost::math::cdf(kStdNormal, z); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  return boost::math::quantile(kStdNormal, p);
}

double two_sided_p(double z) {
  double tail = boost::math::cdf(boost::math::complement(kStdNormal, std::abs(z)));
  return std::min(1.0, 2.0 * tail);
}

double lower_tail_p(double z) { return boost::math::cdf(kStdNormal, z); }

}  // namespace seqloc
