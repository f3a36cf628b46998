#include "mathcore.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace cdwt {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Maclaurin series for erf, good for |x| < 2 where the alternating terms
// stay small enough that cancellation costs at most a couple of digits.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;  // x^(2n+1) / n!
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / n;
    const double contrib = term / (2 * n + 1);
    sum += contrib;
    if (std::fabs(contrib) < 1e-17 * std::fabs(sum)) break;
  }
  return 2.0 / kSqrtPi * sum;
}

// Continued fraction for sqrt(pi) e^(x^2) erfc(x), x >= 2:
//   1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = tiny, c = tiny, d = 0.0;
  for (int n = 1; n < 300; ++n) {
    const double a = (n == 1) ? 1.0 : (n - 1) * 0.5;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / kSqrtPi * f;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::fabs(x);
  double r;
  if (ax < 2.0) {
    r = erf_series(ax);
  } else {
    r = 1.0 - erfc_cf(ax);  // erfc underflows to 0 beyond |x| ~ 27
  }
  return std::signbit(x) ? -r : r;
}

double truncated_gaussian_integral(double a, double b) {
  if (!(a > 0.0)) throw std::domain_error("truncated_gaussian_integral: a must be positive");
  if (!(b >= 0.0)) throw std::domain_error("truncated_gaussian_integral: b must be nonnegative");
  if (std::isinf(b)) return 0.5 * std::sqrt(M_PI / a);
  return 0.5 * std::sqrt(M_PI / a) * erf(b * std::sqrt(a));
}

double log_cosh_times_exp(double c, double d) {
  const double ac = std::fabs(c);
  // logcosh(c) = |c| + log((1 + e^(-2|c|))/2)
  return ac + std::log1p(std::exp(-2.0 * ac)) - M_LN2 + d;
}

SeriesSum exp_series_sum(double s, double x, const SeriesControl& ctl) {
  if (!(ctl.rel_tolerance > 0.0) || !(ctl.rel_tolerance < 1.0))
    throw std::invalid_argument("exp_series_sum: rel_tolerance must lie in (0,1)");
  if (ctl.max_terms < 1)
    throw std::invalid_argument("exp_series_sum: max_terms must be >= 1");
  if (!(s > 0.0)) throw std::domain_error("exp_series_sum: s must be positive");
  if (!(x > 0.0) || !(x < 1.0))
    throw std::domain_error("exp_series_sum: x must lie in (0,1)");

  double sum = 0.0;
  double xn = 1.0;
  for (long n = 1; n <= ctl.max_terms; ++n) {
    xn *= x;
    sum += xn * std::pow(static_cast<double>(n), -s);
    const double next = xn * x * std::pow(static_cast<double>(n + 1), -s);
    if (next < ctl.rel_tolerance * sum) return {sum, n};
  }
  throw convergence_error("exp_series_sum: tolerance not met within max_terms",
                          sum, ctl.max_terms);
}

}  // namespace cdwt
