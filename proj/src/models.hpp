#pragma once

#include "mathcore.hpp"

namespace cdwt {

// I(E) = C1 cosh[sqrt(2E/(Et cv)) - sqrt(Et cv/E)] exp(-Et cv/E),
// the soliton-antisoliton tunneling current.  All fields strictly positive.
struct SolitonCurrentParams {
  double amplitude_c1_tilde = 1.0;  // overall current scale
  double threshold_field_et = 1.0;
  double cv = 1.0;  // dimensionless geometric proportionality factor
};

// Phenomenological Zener baseline Gp (E - Et) exp(-Et/E) above threshold.
struct ZenerParams {
  double conductance_gp = 1.0;
  double threshold_field_et = 1.0;
};

// D+1 dimensional pair-creation rate, D in {1,2,3}.
struct LinRateParams {
  int dimension_d = 1;
  double charge_e = 1.0;
  double mass_m = 1.0;
  SeriesControl series{};
};

// Washboard potential (1/2) mu_E (phi - Theta)^2 + (1/2) P (1 - cos phi),
// with P the pinning coefficient (mass-like parameter times omega_p^2 --
// distinct from the spatial dimension used by LinRateParams).
struct WashboardParams {
  double pinning_coefficient = 100.0;
  double electrostatic_mu_e = 1.0;
  double e_star_field = 2.0;
  double false_vacuum_phase = 0.0;
  double true_vacuum_phase = 6.283185307179586476925286766559;  // 2 pi

  // Enforces the device constraint 0.01 < mu_E / pinning <= 0.015;
  // throws std::domain_error when the ratio falls outside that window.
  static WashboardParams experimental(double pinning, double mu_e, double e_star);
};

// Kink-antikink phase profile pi [tanh b(x - xa) + tanh b(xb - x)].
struct SolitonProfileParams {
  double steepness_b = 1.0;
  double center_a = -1.0;
  double center_b = 1.0;
};

double soliton_current(double e_field, const SolitonCurrentParams& p);
double zener_current(double e_field, const ZenerParams& p);
double lin_rate(double e_field, const LinRateParams& p);

double washboard_potential(double phi, double theta, const WashboardParams& p);
double washboard_quartic_approx(double phi, const WashboardParams& p);
double drive_theta(double e_field, const WashboardParams& p);
double threshold_field(const WashboardParams& p);
double energy_gap(double e_field, const WashboardParams& p);

double pair_separation(double e_field, double delta_s, double e_star_charge);
double harmonic_reference(double e_field, double charge, double mass, double omega);
double derive_cv(double separation_l, double x_bar, double e_field, double e_threshold);

double soliton_profile(double x, const SolitonProfileParams& p);

}  // namespace cdwt
