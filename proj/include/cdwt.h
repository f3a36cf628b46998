/* cdwt — charge-density-wave tunneling current models.
 *
 * C interface to the cdwt shared library.  Every function returns a
 * cdwt_status; results come back through out-pointers.  On any failure
 * cdwt_last_error() gives a one-line, thread-local diagnostic.
 */
#ifndef CDWT_H
#define CDWT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdwt_status {
  CDWT_OK = 0,
  CDWT_ERR_DOMAIN = 1,      /* input outside a model's domain */
  CDWT_ERR_CONVERGENCE = 2, /* series tolerance not met */
  CDWT_ERR_INPUT = 3,       /* malformed dataset / argument */
  CDWT_ERR_NULL = 4         /* null handle or out-pointer */
} cdwt_status;

const char* cdwt_last_error(void);

/* --- special functions ------------------------------------------------ */

int cdwt_erf(double x, double* out);
int cdwt_truncated_gaussian_integral(double a, double b, double* out);
int cdwt_log_cosh_times_exp(double c, double d, double* out);
/* terms_used may be NULL. */
int cdwt_exp_series_sum(double s, double x, double rel_tolerance, long max_terms,
                        double* out, long* terms_used);

/* --- closed-form models ----------------------------------------------- */

int cdwt_soliton_current(double e_field, double c1, double et, double cv, double* out);
int cdwt_zener_current(double e_field, double gp, double et, double* out);
int cdwt_lin_rate(double e_field, int dimension, double charge, double mass,
                  double rel_tolerance, long max_terms, double* out);

int cdwt_washboard_potential(double phi, double theta, double pinning, double mu_e,
                             double* out);
int cdwt_washboard_quartic_approx(double phi, double pinning, double* out);
int cdwt_drive_theta(double e_field, double e_star, double* out);
int cdwt_threshold_field(double e_star, double* out);
int cdwt_energy_gap(double e_field, double pinning, double mu_e, double e_star,
                    double phi_false, double phi_true, double* out);

int cdwt_pair_separation(double e_field, double delta_s, double e_star_charge,
                         double* out);
int cdwt_harmonic_reference(double e_field, double charge, double mass, double omega,
                            double* out);
int cdwt_derive_cv(double separation_l, double x_bar, double e_field,
                   double e_threshold, double* out);
int cdwt_soliton_profile(double x, double steepness_b, double center_a,
                         double center_b, double* out);

/* --- wavefunctional machinery ----------------------------------------- */

int cdwt_thin_wall_profile(double k, double separation_l, double* out);
int cdwt_normalization_constant(double alpha, double cutoff, double* out);
int cdwt_assemble_amplitude(double c1, double c2, double electron_mass, double* out);
int cdwt_finite_mode_overlap(double alpha_initial, double phase_initial,
                             double alpha_final, double phase_final,
                             double separation_l, int n_modes, double l_box,
                             double* out);
/* e_grid must be strictly increasing and positive; out_overlaps holds n values. */
int cdwt_overlap_scan(const double* e_grid, size_t n, double delta_s,
                      double e_star_charge, double phi_false, double phi_true,
                      int n_modes, double* out_overlaps);

/* --- fitting ----------------------------------------------------------- */

typedef struct cdwt_dataset cdwt_dataset;

int cdwt_dataset_create(const double* e_fields, const double* currents, size_t n,
                        cdwt_dataset** out);
void cdwt_dataset_destroy(cdwt_dataset* data);
size_t cdwt_dataset_size(const cdwt_dataset* data);

enum { CDWT_MODEL_SOLITON = 0, CDWT_MODEL_ZENER = 1 };

typedef struct cdwt_fit_options {
  long max_iterations;
  double tolerance;
  int restarts;
  double lower_bound;
  unsigned long seed;
} cdwt_fit_options;

void cdwt_fit_options_default(cdwt_fit_options* opts);

typedef struct cdwt_fit_result {
  int model_kind;    /* CDWT_MODEL_* */
  double params[3];  /* soliton: c1, et, cv; zener: gp, et */
  int n_params;
  double sum_squared_residual;
  long iterations;
  int converged;
} cdwt_fit_result;

int cdwt_fit(const cdwt_dataset* data, int model_kind, const cdwt_fit_options* opts,
             cdwt_fit_result* out);
/* preferred receives CDWT_MODEL_*; tie may be NULL. */
int cdwt_compare_models(const cdwt_dataset* data, const cdwt_fit_options* opts,
                        cdwt_fit_result* soliton, cdwt_fit_result* zener,
                        int* preferred, int* tie);

int cdwt_linearity_score(const double* x, const double* y, size_t n, double* out);
int cdwt_shape_compare(const double* x, const double* y_a, const double* y_b, size_t n,
                       double* sup_norm_diff, double* slope_correlation);

#ifdef __cplusplus
}
#endif

#endif /* CDWT_H */
