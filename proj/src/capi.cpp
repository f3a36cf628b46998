#include "cdwt.h"

#include <new>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fitting.hpp"
#include "mathcore.hpp"
#include "models.hpp"
#include "tunneling.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* msg) {
  g_last_error = msg;
  return code;
}

// Runs fn, stores any exception as the thread-local error message.
template <class Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return CDWT_OK;
  } catch (const cdwt::convergence_error& e) {
    return fail(CDWT_ERR_CONVERGENCE, e.what());
  } catch (const std::domain_error& e) {
    return fail(CDWT_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CDWT_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(CDWT_ERR_INPUT, e.what());
  }
}

int require(const void* p) {
  return p ? CDWT_OK : fail(CDWT_ERR_NULL, "null pointer argument");
}

void to_c(const cdwt::FitResult& r, cdwt_fit_result* out) {
  out->model_kind =
      r.model_kind == cdwt::ModelKind::soliton ? CDWT_MODEL_SOLITON : CDWT_MODEL_ZENER;
  out->n_params = static_cast<int>(r.params.size());
  for (int i = 0; i < 3; ++i)
    out->params[i] = i < out->n_params ? r.params[i] : 0.0;
  out->sum_squared_residual = r.sum_squared_residual;
  out->iterations = r.iterations;
  out->converged = r.converged ? 1 : 0;
}

cdwt::FitOptions to_cpp(const cdwt_fit_options* opts) {
  if (!opts) return {};
  cdwt::FitOptions o;
  o.max_iterations = opts->max_iterations;
  o.tolerance = opts->tolerance;
  o.restarts = opts->restarts;
  o.lower_bound = opts->lower_bound;
  o.seed = opts->seed;
  return o;
}

}  // namespace

struct cdwt_dataset {
  cdwt::IEDataset data;
};

extern "C" {

const char* cdwt_last_error(void) { return g_last_error.c_str(); }

int cdwt_erf(double x, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::erf(x); });
}

int cdwt_truncated_gaussian_integral(double a, double b, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::truncated_gaussian_integral(a, b); });
}

int cdwt_log_cosh_times_exp(double c, double d, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::log_cosh_times_exp(c, d); });
}

int cdwt_exp_series_sum(double s, double x, double rel_tolerance, long max_terms,
                        double* out, long* terms_used) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    const cdwt::SeriesSum sum = cdwt::exp_series_sum(s, x, {rel_tolerance, max_terms});
    *out = sum.value;
    if (terms_used) *terms_used = sum.terms_used;
  });
}

int cdwt_soliton_current(double e_field, double c1, double et, double cv, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::soliton_current(e_field, {c1, et, cv}); });
}

int cdwt_zener_current(double e_field, double gp, double et, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::zener_current(e_field, {gp, et}); });
}

int cdwt_lin_rate(double e_field, int dimension, double charge, double mass,
                  double rel_tolerance, long max_terms, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    *out = cdwt::lin_rate(e_field,
                          {dimension, charge, mass, {rel_tolerance, max_terms}});
  });
}

int cdwt_washboard_potential(double phi, double theta, double pinning, double mu_e,
                             double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    cdwt::WashboardParams p;
    p.pinning_coefficient = pinning;
    p.electrostatic_mu_e = mu_e;
    *out = cdwt::washboard_potential(phi, theta, p);
  });
}

int cdwt_washboard_quartic_approx(double phi, double pinning, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    cdwt::WashboardParams p;
    p.pinning_coefficient = pinning;
    *out = cdwt::washboard_quartic_approx(phi, p);
  });
}

int cdwt_drive_theta(double e_field, double e_star, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    cdwt::WashboardParams p;
    p.e_star_field = e_star;
    *out = cdwt::drive_theta(e_field, p);
  });
}

int cdwt_threshold_field(double e_star, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    cdwt::WashboardParams p;
    p.e_star_field = e_star;
    *out = cdwt::threshold_field(p);
  });
}

int cdwt_energy_gap(double e_field, double pinning, double mu_e, double e_star,
                    double phi_false, double phi_true, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    cdwt::WashboardParams p;
    p.pinning_coefficient = pinning;
    p.electrostatic_mu_e = mu_e;
    p.e_star_field = e_star;
    p.false_vacuum_phase = phi_false;
    p.true_vacuum_phase = phi_true;
    *out = cdwt::energy_gap(e_field, p);
  });
}

int cdwt_pair_separation(double e_field, double delta_s, double e_star_charge,
                         double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::pair_separation(e_field, delta_s, e_star_charge); });
}

int cdwt_harmonic_reference(double e_field, double charge, double mass, double omega,
                            double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::harmonic_reference(e_field, charge, mass, omega); });
}

int cdwt_derive_cv(double separation_l, double x_bar, double e_field,
                   double e_threshold, double* out) {
  if (int rc = require(out)) return rc;
  return guarded(
      [&] { *out = cdwt::derive_cv(separation_l, x_bar, e_field, e_threshold); });
}

int cdwt_soliton_profile(double x, double steepness_b, double center_a,
                         double center_b, double* out) {
  if (int rc = require(out)) return rc;
  return guarded(
      [&] { *out = cdwt::soliton_profile(x, {steepness_b, center_a, center_b}); });
}

int cdwt_thin_wall_profile(double k, double separation_l, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::thin_wall_profile(k, separation_l); });
}

int cdwt_normalization_constant(double alpha, double cutoff, double* out) {
  if (int rc = require(out)) return rc;
  return guarded(
      [&] { *out = cdwt::normalization_constant({alpha, 0.0, cutoff}); });
}

int cdwt_assemble_amplitude(double c1, double c2, double electron_mass, double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] { *out = cdwt::assemble_amplitude(c1, c2, electron_mass); });
}

int cdwt_finite_mode_overlap(double alpha_initial, double phase_initial,
                             double alpha_final, double phase_final,
                             double separation_l, int n_modes, double l_box,
                             double* out) {
  if (int rc = require(out)) return rc;
  return guarded([&] {
    const cdwt::FiniteModeGrid grid = cdwt::FiniteModeGrid::uniform(n_modes, l_box);
    *out = cdwt::finite_mode_overlap({alpha_initial, phase_initial, 1.0},
                                     {alpha_final, phase_final, 1.0}, grid,
                                     separation_l);
  });
}

int cdwt_overlap_scan(const double* e_grid, size_t n, double delta_s,
                      double e_star_charge, double phi_false, double phi_true,
                      int n_modes, double* out_overlaps) {
  if (int rc = require(e_grid)) return rc;
  if (int rc = require(out_overlaps)) return rc;
  return guarded([&] {
    cdwt::WashboardParams base;
    base.false_vacuum_phase = phi_false;
    base.true_vacuum_phase = phi_true;
    const std::vector<double> grid(e_grid, e_grid + n);
    const auto scan =
        cdwt::overlap_field_scan(grid, base, {delta_s, e_star_charge}, n_modes);
    for (size_t i = 0; i < scan.size(); ++i) out_overlaps[i] = scan[i].second;
  });
}

int cdwt_dataset_create(const double* e_fields, const double* currents, size_t n,
                        cdwt_dataset** out) {
  if (int rc = require(out)) return rc;
  if (int rc = require(e_fields)) return rc;
  if (int rc = require(currents)) return rc;
  return guarded([&] {
    std::vector<std::pair<double, double>> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = {e_fields[i], currents[i]};
    *out = new cdwt_dataset{cdwt::IEDataset::ingest(std::move(pts))};
  });
}

void cdwt_dataset_destroy(cdwt_dataset* data) { delete data; }

size_t cdwt_dataset_size(const cdwt_dataset* data) {
  return data ? data->data.points.size() : 0;
}

void cdwt_fit_options_default(cdwt_fit_options* opts) {
  if (!opts) return;
  const cdwt::FitOptions d;
  opts->max_iterations = d.max_iterations;
  opts->tolerance = d.tolerance;
  opts->restarts = d.restarts;
  opts->lower_bound = d.lower_bound;
  opts->seed = d.seed;
}

int cdwt_fit(const cdwt_dataset* data, int model_kind, const cdwt_fit_options* opts,
             cdwt_fit_result* out) {
  if (int rc = require(data)) return rc;
  if (int rc = require(out)) return rc;
  if (model_kind != CDWT_MODEL_SOLITON && model_kind != CDWT_MODEL_ZENER)
    return fail(CDWT_ERR_INPUT, "cdwt_fit: unknown model kind");
  return guarded([&] {
    const cdwt::ModelKind kind = model_kind == CDWT_MODEL_SOLITON
                                     ? cdwt::ModelKind::soliton
                                     : cdwt::ModelKind::zener;
    to_c(cdwt::fit_model(data->data, kind, to_cpp(opts)), out);
  });
}

int cdwt_compare_models(const cdwt_dataset* data, const cdwt_fit_options* opts,
                        cdwt_fit_result* soliton, cdwt_fit_result* zener,
                        int* preferred, int* tie) {
  if (int rc = require(data)) return rc;
  if (int rc = require(soliton)) return rc;
  if (int rc = require(zener)) return rc;
  if (int rc = require(preferred)) return rc;
  return guarded([&] {
    const cdwt::ComparisonResult c = cdwt::compare_models(data->data, to_cpp(opts));
    to_c(c.soliton, soliton);
    to_c(c.zener, zener);
    *preferred = c.preferred == cdwt::ModelKind::soliton ? CDWT_MODEL_SOLITON
                                                         : CDWT_MODEL_ZENER;
    if (tie) *tie = c.tie ? 1 : 0;
  });
}

int cdwt_linearity_score(const double* x, const double* y, size_t n, double* out) {
  if (int rc = require(x)) return rc;
  if (int rc = require(y)) return rc;
  if (int rc = require(out)) return rc;
  return guarded([&] {
    std::vector<std::pair<double, double>> curve(n);
    for (size_t i = 0; i < n; ++i) curve[i] = {x[i], y[i]};
    *out = cdwt::linearity_score(curve);
  });
}

int cdwt_shape_compare(const double* x, const double* y_a, const double* y_b, size_t n,
                       double* sup_norm_diff, double* slope_correlation) {
  if (int rc = require(x)) return rc;
  if (int rc = require(y_a)) return rc;
  if (int rc = require(y_b)) return rc;
  if (int rc = require(sup_norm_diff)) return rc;
  if (int rc = require(slope_correlation)) return rc;
  return guarded([&] {
    std::vector<std::pair<double, double>> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = {x[i], y_a[i]};
      b[i] = {x[i], y_b[i]};
    }
    const cdwt::ShapeMetrics m = cdwt::shape_compare(a, b);
    *sup_norm_diff = m.sup_norm_diff;
    *slope_correlation = m.slope_correlation;
  });
}

}  // extern "C"
