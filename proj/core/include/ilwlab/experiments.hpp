#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"
#include "ilwlab/gauge.hpp"
#include "ilwlab/multipliers.hpp"

namespace ilw {

struct InitialDataSpec {
  enum class Profile { default_profile, cosine, coeff_list };
  Profile profile = Profile::default_profile;
  double amplitude = 0.1;  // cosine
  int mode = 1;            // cosine
  std::vector<std::tuple<int, double, double>> coeffs;  // (n, re, im)

  SpectralField build(const TorusGrid& grid) const;
};

enum class DeepwaterMode { original, renormalized };

struct ExperimentConfig {
  std::string experiment;

  Variant variant = Variant::ilw;
  double delta = 1.0;
  std::vector<double> delta_list;

  double lambda = 1.0;
  int n_points = 256;

  SolveConfig solver;
  InitialDataSpec initial_data;
  std::vector<double> sobolev_s_list{0.0, 0.5};

  DeepwaterMode deepwater_mode = DeepwaterMode::original;
  std::optional<double> delta_min_fit;

  double scaling_lambda = 2.0;
  int scaling_n_points_target = 0;  // 0: same as n_points

  int gauge_refinement_levels = 3;

  // symbols dump
  MultiplierSpec symbols_spec = MultiplierSpec::hilbert();
  double symbols_xi_min = -8.0;
  double symbols_xi_max = 8.0;
  int symbols_count = 129;
  bool symbols_log_spacing = false;

  std::string out_dir = "out";
  int threads = 1;

  /// Strict parse: unknown keys anywhere are rejected.
  static ExperimentConfig parse_json(const std::string& text);
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  bool degenerate = false;
};

/// Least squares on (log delta, log error). Pairs with non-positive error mark
/// the fit degenerate (reported, not fitted). Throws below 3 usable points.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& pairs);

struct ConvergenceRow {
  double delta = 0.0;
  double s = 0.0;
  double sup_error = 0.0;
  double runtime_seconds = 0.0;
};

struct ConvergenceReport {
  DeepwaterMode mode = DeepwaterMode::original;
  std::vector<ConvergenceRow> rows;  // delta-major, s-minor, deltas increasing
  struct SlopeFit {
    double s = 0.0;
    FitResult fit;
  };
  std::vector<SlopeFit> fits;

  double error_at(double delta, double s) const;
};

/// Deep-water limit experiment: ILW (or renormalized ILW) family against the
/// BO reference with the same initial data.
ConvergenceReport run_deepwater(const ExperimentConfig& config);

struct ScalingReport {
  double lambda = 0.0;
  double delta = 0.0;
  double discrepancy = 0.0;        // sup-H0 between mapped and cross-solved
  double l2_identity_error = 0.0;  // | ||S u0|| - lambda^{-1/2} ||u0|| |
};

ScalingReport run_scaling_check(const ExperimentConfig& config);

struct GalileanReport {
  double delta = 0.0;
  double initial_mean = 0.0;
  double discrepancy = 0.0;  // sup-H0 between the direct and reduced paths
};

GalileanReport run_galilean_check(const ExperimentConfig& config);

struct GaugeCheckReport {
  struct Level {
    double dt = 0.0;
    ResidualSeries residual_F;
    ResidualSeries residual_w;
    double max_reconstruct = 0.0;
  };
  std::vector<Level> levels;            // dt halving per level
  std::vector<double> ratios_F;         // max residual ratios between levels
  std::vector<double> ratios_w;
};

GaugeCheckReport run_gauge_check(const ExperimentConfig& config);

/// Runs the experiment named in the config and writes its reports under
/// config.out_dir. Returns the process exit code contract: 0 on success.
void run_experiment(const ExperimentConfig& config);

}  // namespace ilw
