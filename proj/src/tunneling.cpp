#include "tunneling.hpp"

#include <cmath>
#include <stdexcept>

namespace cdwt {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

FiniteModeGrid FiniteModeGrid::uniform(int n_modes, double l_box) {
  if (n_modes < 1) throw std::invalid_argument("FiniteModeGrid: n_modes must be >= 1");
  if (!(l_box > 0.0)) throw std::invalid_argument("FiniteModeGrid: l_box must be positive");
  FiniteModeGrid g;
  g.n_modes = n_modes;
  g.l_box = l_box;
  g.k_values.reserve(n_modes);
  for (int n = 1; n <= n_modes; ++n) g.k_values.push_back(kTwoPi * n / l_box);
  return g;
}

double thin_wall_profile(double k, double separation_l) {
  if (!(separation_l > 0.0))
    throw std::invalid_argument("thin_wall_profile: separation_l must be positive");
  const double c = std::sqrt(2.0 / M_PI);
  if (k == 0.0) return c * separation_l / 2.0;
  return c * std::sin(k * separation_l / 2.0) / k;
}

double normalization_constant(const WavefunctionalSpec& spec) {
  if (!(spec.alpha > 0.0))
    throw std::invalid_argument("normalization_constant: alpha must be positive");
  if (!(spec.momentum_cutoff > 1e-12))
    throw std::domain_error("normalization_constant: degenerate momentum cutoff");
  return 1.0 / std::sqrt(
                   truncated_gaussian_integral(2.0 * spec.alpha, spec.momentum_cutoff));
}

double assemble_amplitude(double c1, double c2, double electron_mass) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(electron_mass > 0.0))
    throw std::domain_error("assemble_amplitude: all inputs must be positive");
  return c1 * c2 / (2.0 * electron_mass);
}

double finite_mode_overlap(const WavefunctionalSpec& initial,
                           const WavefunctionalSpec& final_state,
                           const FiniteModeGrid& grid, double separation_l) {
  if (static_cast<int>(grid.k_values.size()) != grid.n_modes)
    throw std::domain_error("finite_mode_overlap: grid size mismatch");
  if (!(initial.alpha > 0.0) || !(final_state.alpha > 0.0))
    throw std::invalid_argument("finite_mode_overlap: widths must be positive");
  if (!(separation_l > 0.0))
    throw std::invalid_argument("finite_mode_overlap: separation_l must be positive");
  double prev_k = 0.0;
  for (double k : grid.k_values) {
    if (!(k > prev_k))
      throw std::domain_error("finite_mode_overlap: k_values must be strictly increasing and positive");
    prev_k = k;
  }

  const double a1 = initial.alpha;
  const double a2 = final_state.alpha;
  // Per-mode overlap of unit-normalized Gaussians:
  //   sqrt(2 sqrt(a1 a2)/(a1+a2)) exp(-a1 a2 (c1-c2)^2/(a1+a2))
  const double width_factor = std::sqrt(2.0 * std::sqrt(a1 * a2) / (a1 + a2));
  double log_overlap = 0.0;
  for (double k : grid.k_values) {
    const double mode_shape = thin_wall_profile(k, separation_l) / kTwoPi;
    const double offset = (initial.center_phase - final_state.center_phase) * mode_shape;
    log_overlap += std::log(width_factor) - a1 * a2 * offset * offset / (a1 + a2);
  }
  return std::exp(log_overlap);
}

std::vector<std::pair<double, double>> overlap_field_scan(
    const std::vector<double>& e_grid, const WashboardParams& base,
    const OverlapGeometry& geom, int n_modes) {
  double prev = 0.0;
  for (double e : e_grid) {
    if (!(e > prev))
      throw std::invalid_argument("overlap_field_scan: e_grid must be strictly positive and increasing");
    prev = e;
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(e_grid.size());
  for (double e : e_grid) {
    const double l = pair_separation(e, geom.delta_s, geom.e_star_charge);
    const double alpha = 1.0 / l;
    const double cutoff = l * l / kTwoPi;
    const WavefunctionalSpec initial{alpha, base.false_vacuum_phase, cutoff};
    const WavefunctionalSpec final_state{alpha, base.true_vacuum_phase, cutoff};
    const FiniteModeGrid grid = FiniteModeGrid::uniform(n_modes, 10.0 * l);
    out.emplace_back(e, finite_mode_overlap(initial, final_state, grid, l));
  }
  return out;
}

}  // namespace cdwt
