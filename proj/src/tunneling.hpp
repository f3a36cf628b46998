#pragma once

#include <utility>
#include <vector>

#include "models.hpp"

namespace cdwt {

// One Gaussian wavefunctional: width alpha (~ 1/L), the phase the state is
// centered on, and the upper momentum-integration cutoff (default L^2/2pi).
struct WavefunctionalSpec {
  double alpha = 1.0;
  double center_phase = 0.0;
  double momentum_cutoff = 1.0;
};

struct FiniteModeGrid {
  int n_modes = 64;
  std::vector<double> k_values;  // strictly increasing, positive
  double l_box = 1.0;

  // k_n = 2 pi n / l_box, n = 1..n_modes.
  static FiniteModeGrid uniform(int n_modes, double l_box);
};

struct OverlapGeometry {
  double delta_s = 1.0;        // band offset
  double e_star_charge = 2.0;  // effective pair charge
};

// Thin-wall momentum profile sqrt(2/pi) sin(kL/2)/k, with the sinc limit
// at k = 0.
double thin_wall_profile(double k, double separation_l);

// [integral_0^cutoff exp(-2 alpha phi^2) dphi]^(-1/2).
double normalization_constant(const WavefunctionalSpec& spec);

// C1 C2 / (2 m_e).
double assemble_amplitude(double c1, double c2, double electron_mass);

// Product over grid modes of unit-normalized 1-D Gaussian overlaps.  Each
// state's per-mode center is its center phase scaled by the thin-wall
// profile at that mode, so identical specs overlap to exactly 1 and the
// result is symmetric under exchange.
double finite_mode_overlap(const WavefunctionalSpec& initial,
                           const WavefunctionalSpec& final_state,
                           const FiniteModeGrid& grid, double separation_l);

// For each field value: L from pair_separation, alpha = 1/L for both
// states, then finite_mode_overlap on the default grid (l_box = 10 L).
std::vector<std::pair<double, double>> overlap_field_scan(
    const std::vector<double>& e_grid, const WashboardParams& base,
    const OverlapGeometry& geom, int n_modes = 64);

}  // namespace cdwt
