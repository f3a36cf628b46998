#pragma once

#include <string>
#include <utility>
#include <vector>

#include "models.hpp"

namespace cdwt {

enum class ModelKind { soliton, zener };

// Measured or synthetic (E, I) samples, sorted by field on ingestion.
struct IEDataset {
  std::vector<std::pair<double, double>> points;
  std::string label;

  // Sorts by field and validates: nonempty, finite nonnegative fields,
  // strictly increasing after the sort.  Throws std::invalid_argument.
  static IEDataset ingest(std::vector<std::pair<double, double>> points,
                          std::string label = {});
};

struct FitOptions {
  long max_iterations = 2000;
  double tolerance = 1e-10;  // relative residual change
  int restarts = 4;
  double lower_bound = 1e-9;  // positivity floor for every parameter
  unsigned long seed = 0;     // restart perturbations
};

struct FitResult {
  ModelKind model_kind = ModelKind::soliton;
  std::vector<double> params;  // soliton: {c1, et, cv}; zener: {gp, et}
  double sum_squared_residual = 0.0;
  long iterations = 0;
  bool converged = false;
};

struct ComparisonResult {
  FitResult soliton;
  FitResult zener;
  ModelKind preferred = ModelKind::soliton;
  bool tie = false;
};

// Least-squares fit by multi-start Nelder-Mead simplex descent.
// Deterministic for a fixed seed.  Throws std::invalid_argument when the
// dataset has fewer points than the model has free parameters.
FitResult fit_model(const IEDataset& data, ModelKind kind, const FitOptions& opts = {});

// Fits both models; prefers the smaller residual, ties broken toward the
// soliton model.
ComparisonResult compare_models(const IEDataset& data, const FitOptions& opts = {});

// R^2 of the ordinary least-squares line through the points.  Requires at
// least 3 points with non-degenerate x.
double linearity_score(const std::vector<std::pair<double, double>>& curve);

struct ShapeMetrics {
  double sup_norm_diff = 0.0;
  double slope_correlation = 1.0;
};

// Min-max-normalizes both curves (common x grid required) and reports the
// sup-norm difference plus the Pearson correlation of finite-difference
// slopes.
ShapeMetrics shape_compare(const std::vector<std::pair<double, double>>& curve_a,
                           const std::vector<std::pair<double, double>>& curve_b);

}  // namespace cdwt
