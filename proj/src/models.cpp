#include "models.hpp"

#include <cmath>
#include <stdexcept>

namespace cdwt {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

// for operation inputs, as opposed to parameter-struct invariants
void require_positive_input(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

}  // namespace

WashboardParams WashboardParams::experimental(double pinning, double mu_e,
                                              double e_star) {
  require_positive(pinning, "pinning_coefficient");
  require_positive(mu_e, "electrostatic_mu_e");
  require_positive(e_star, "e_star_field");
  const double ratio = mu_e / pinning;
  if (!(ratio > 0.01 && ratio <= 0.015))
    throw std::domain_error(
        "WashboardParams::experimental: mu_E / pinning must lie in (0.01, 0.015]");
  WashboardParams p;
  p.pinning_coefficient = pinning;
  p.electrostatic_mu_e = mu_e;
  p.e_star_field = e_star;
  return p;
}

double soliton_current(double e_field, const SolitonCurrentParams& p) {
  require_positive(p.amplitude_c1_tilde, "amplitude_c1_tilde");
  require_positive(p.threshold_field_et, "threshold_field_et");
  require_positive(p.cv, "cv");
  if (e_field < 0.0) throw std::domain_error("soliton_current: e_field must be nonnegative");
  if (e_field == 0.0) return 0.0;  // analytic limit, exponential factor wins

  const double etcv = p.threshold_field_et * p.cv;
  const double arg = std::sqrt(2.0 * e_field / etcv) - std::sqrt(etcv / e_field);
  return p.amplitude_c1_tilde * std::exp(log_cosh_times_exp(arg, -etcv / e_field));
}

double zener_current(double e_field, const ZenerParams& p) {
  require_positive(p.conductance_gp, "conductance_gp");
  require_positive(p.threshold_field_et, "threshold_field_et");
  if (e_field < 0.0) throw std::domain_error("zener_current: e_field must be nonnegative");
  if (e_field <= p.threshold_field_et) return 0.0;
  return p.conductance_gp * (e_field - p.threshold_field_et) *
         std::exp(-p.threshold_field_et / e_field);
}

double lin_rate(double e_field, const LinRateParams& p) {
  if (p.dimension_d < 1 || p.dimension_d > 3)
    throw std::invalid_argument("lin_rate: dimension_d must be 1, 2 or 3");
  require_positive(p.charge_e, "charge_e");
  require_positive(p.mass_m, "mass_m");
  if (!(e_field > 0.0)) throw std::domain_error("lin_rate: e_field must be positive");

  const double ee = p.charge_e * e_field;
  const double x = std::exp(-M_PI * p.mass_m * p.mass_m / ee);
  if (x == 0.0) return 0.0;  // field so weak the rate underflows

  const double s = 0.5 * (p.dimension_d + 1);
  const double prefactor = (p.dimension_d == 3 ? 2.0 : 1.0) * std::pow(ee, s) /
                           std::pow(2.0 * M_PI, p.dimension_d);
  return prefactor * exp_series_sum(s, x, p.series).value;
}

double washboard_potential(double phi, double theta, const WashboardParams& p) {
  const double d = phi - theta;
  return 0.5 * p.electrostatic_mu_e * d * d +
         0.5 * p.pinning_coefficient * (1.0 - std::cos(phi));
}

double washboard_quartic_approx(double phi, const WashboardParams& p) {
  const double phi2 = phi * phi;
  return 0.5 * p.pinning_coefficient * (phi2 / 2.0 - phi2 * phi2 / 24.0);
}

double drive_theta(double e_field, const WashboardParams& p) {
  require_positive(p.e_star_field, "e_star_field");
  if (e_field < 0.0) throw std::domain_error("drive_theta: e_field must be nonnegative");
  return 2.0 * M_PI * e_field / p.e_star_field;
}

double threshold_field(const WashboardParams& p) {
  require_positive(p.e_star_field, "e_star_field");
  return 0.5 * p.e_star_field;
}

double energy_gap(double e_field, const WashboardParams& p) {
  const double theta = drive_theta(e_field, p);
  return washboard_potential(p.false_vacuum_phase, theta, p) -
         washboard_potential(p.true_vacuum_phase, theta, p);
}

double pair_separation(double e_field, double delta_s, double e_star_charge) {
  require_positive_input(e_field, "e_field");
  require_positive_input(delta_s, "delta_s");
  require_positive_input(e_star_charge, "e_star_charge");
  return 2.0 * delta_s / e_star_charge / e_field;
}

double harmonic_reference(double e_field, double charge, double mass, double omega) {
  require_positive_input(e_field, "e_field");
  require_positive_input(charge, "charge");
  require_positive_input(mass, "mass");
  require_positive_input(omega, "omega");
  return charge * e_field / (mass * omega * omega);
}

double derive_cv(double separation_l, double x_bar, double e_field, double e_threshold) {
  require_positive_input(separation_l, "separation_l");
  require_positive_input(x_bar, "x_bar");
  require_positive_input(e_field, "e_field");
  require_positive_input(e_threshold, "e_threshold");
  return separation_l / x_bar * e_field / e_threshold;
}

double soliton_profile(double x, const SolitonProfileParams& p) {
  if (!(p.steepness_b > 0.0))
    throw std::invalid_argument("soliton_profile: steepness_b must be positive");
  if (!(p.center_a < p.center_b))
    throw std::invalid_argument("soliton_profile: center_a must precede center_b");
  return M_PI * (std::tanh(p.steepness_b * (x - p.center_a)) +
                 std::tanh(p.steepness_b * (p.center_b - x)));
}

}  // namespace cdwt
