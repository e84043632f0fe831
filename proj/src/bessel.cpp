#include "trieig/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>

#include "trieig/errors.hpp"

namespace trieig {

double bessel_zero_upper(double nu) {
  if (!(nu >= 1.0)) throw std::domain_error("bessel_zero_upper requires nu >= 1");
  const double cbrt2 = std::cbrt(2.0);
  const double a1 = kAiryFirstZero;
  const double n13 = std::cbrt(nu);
  return nu - a1 / cbrt2 * n13 + 3.0 * a1 * a1 * cbrt2 / 20.0 / n13;
}

double bessel_zero_ratio_bound(double nu) {
  if (!(nu >= 1.0)) throw std::domain_error("bessel_zero_ratio_bound requires nu >= 1");
  const double n23 = std::pow(nu, -2.0 / 3.0);
  return 1.0 + 2.0 * n23 + 2.0 * n23 * n23;
}

double bessel_zero(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw std::domain_error("bessel_zero requires nu >= 0");
  auto J = [nu](double x) { return boost::math::cyl_bessel_j(nu, x); };

  // j_nu > nu for nu > 0 and j_0 > 2; the spacing of zeros exceeds pi, so
  // a step of 1/4 cannot skip the first sign change.
  const double step = 0.25;
  const double limit = nu + 4.0 * std::cbrt(nu + 1.0) + 4.0;
  double lo = std::max(nu, 2.0);
  if (!(J(lo) > 0.0)) throw RootNotBracketed("J_nu is not positive at the bracket start");
  double hi = lo + step;
  while (J(hi) > 0.0) {
    lo = hi;
    hi += step;
    if (hi > limit) {
      throw RootNotBracketed("no sign change of J_nu below " + std::to_string(limit));
    }
  }

  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      J, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (a + b);
}

}  // namespace trieig
