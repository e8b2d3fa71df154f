#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crcurve/smooth_curves.hpp"

namespace crcurve {

enum class Quantity { kappa, tau, tangent, normal, binormal };

std::string_view quantity_name(Quantity q);                    // kappa, tau, T, N, B
std::optional<Quantity> parse_quantity(std::string_view name);

inline const std::vector<Quantity>& all_quantities() {
  static const std::vector<Quantity> q = {Quantity::kappa, Quantity::tau, Quantity::tangent,
                                          Quantity::normal, Quantity::binormal};
  return q;
}

// Refinement schedule eps = 0.1 * 1.1^level, level = 0, -1, -2, ...
inline double level_epsilon(int level) { return 0.1 * std::pow(1.1, level); }

// l-infinity deviation of each requested discrete quantity from the smooth
// one, over all interior edges of the uniform sampling at eps.  Discrete
// values live at edges and are compared at the edge midpoint parameter;
// frame vectors are compared per component after per-edge sign alignment.
struct MeasureResult {
  std::map<Quantity, double> errors;
  std::vector<Quantity> skipped;  // undefined for this curve (e.g. tau on planar input)
  int singular_edges = 0;         // edges dropped due to discrete singularities
};

MeasureResult measure_errors(const SmoothCurve& curve, double eps,
                             const std::vector<Quantity>& quantities);

// Ordinary least-squares slope of log(error) against log(eps).  Zero errors
// are excluded; fewer than two usable points yield no fit (all-zero series
// are exact at machine precision).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  int points_used = 0;
  int points_excluded = 0;
  bool low_confidence = false;  // fewer than 8 points in the fit
};

std::optional<RateFit> fit_rate(const std::vector<std::pair<double, double>>& eps_error);

struct ExperimentConfig {
  std::vector<std::string> curves;      // empty = full registry
  int level_hi = 0;
  int level_lo = -15;
  std::vector<Quantity> quantities;     // empty = kappa, tau, T, N, B
  std::string out_dir;                  // empty = no artifacts written
  bool write_csv = true;
  bool write_json = true;
  bool write_svg = true;
};

struct LevelPoint {
  int level = 0;
  double epsilon = 0.0;
  double error = 0.0;
};

struct QuantitySeries {
  Quantity quantity = Quantity::kappa;
  std::vector<LevelPoint> points;
  std::optional<RateFit> fit;
  std::string note;  // "skipped (...)" or "exact at machine precision"
};

struct CurveReport {
  std::string name;
  int dim = 0;
  std::vector<QuantitySeries> series;
  int singular_edges = 0;
  std::string failure;  // non-empty when the whole curve failed
};

struct ConvergenceReport {
  std::vector<int> levels;
  std::vector<Quantity> quantities;
  std::vector<Quantity> excluded_quantities;  // requested away by the config
  std::vector<CurveReport> curves;
};

// Runs the whole experiment (deterministic; identical configs produce
// byte-identical artifacts).  Per-curve failures are isolated in the report.
// Throws std::invalid_argument on config errors (unknown curve, bad levels).
ConvergenceReport run_experiment(const ExperimentConfig& config);

void write_csv(const ConvergenceReport& report, const std::string& path);
void write_json(const ConvergenceReport& report, const std::string& path);
// One log-log SVG plot per quantity, named convergence_<quantity>.svg.
void write_svg_plots(const ConvergenceReport& report, const std::string& dir);

}  // namespace crcurve
