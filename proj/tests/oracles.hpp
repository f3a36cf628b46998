// Independent numerical oracles used only by the tests.  Nothing here may
// call into the library paths it is checking.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

// Adaptive Simpson quadrature.
inline double simpson_step(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb, double whole,
                           double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Brute-force Sum_{n=1}^{n_terms} n^(-s) x^n.
inline double brute_series(double s, double x, int n_terms = 10000) {
  double sum = 0.0;
  double xn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    xn *= x;
    sum += xn * std::pow(static_cast<double>(n), -s);
  }
  return sum;
}

// Closed-form ordinary least squares R^2.
template <class Curve>
double r_squared(const Curve& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x / n;
    my += y / n;
  }
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  return sxy * sxy / (sxx * syy);
}

}  // namespace oracle
