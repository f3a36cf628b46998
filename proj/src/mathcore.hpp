#pragma once

namespace cdwt {

// Truncation control for the infinite sums in the pair-creation rates.
// Terms decay geometrically, so the defaults are cheap even for the
// slowest-converging fields of interest.
struct SeriesControl {
  double rel_tolerance = 1e-12;
  long max_terms = 1000000;
};

struct SeriesSum {
  double value;
  long terms_used;
};

// Error function, |erf(x)| <= 1, odd, accurate to better than 1e-13
// absolute.  Implemented in-module (Taylor series plus a continued
// fraction for the tail) so the library carries no numerical dependencies.
double erf(double x);

// Integral of exp(-a x^2) over [0, b] via the erf closed form
//   (1/2) sqrt(pi/a) erf(b sqrt(a)).
// b may be +infinity.  Throws std::domain_error for a <= 0 or b < 0.
double truncated_gaussian_integral(double a, double b);

// ln(cosh(c) * e^d), evaluated without overflow for any finite c, d.
double log_cosh_times_exp(double c, double d);

// Sum_{n>=1} n^(-s) x^n for 0 < x < 1, s > 0, truncated when the next
// term drops below rel_tolerance times the running sum.  Throws
// convergence_error (carrying the partial sum) if max_terms is exhausted
// first, std::domain_error for x outside (0,1) or s <= 0.
SeriesSum exp_series_sum(double s, double x, const SeriesControl& ctl = {});

}  // namespace cdwt
