#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfis/estimators.hpp"

namespace gfis {

struct SweepSpec {
  FieldModel model;
  std::string algorithm;             // finite | holder | smooth | naive
  std::optional<PointSet> points;    // required by finite / naive
  std::vector<double> levels;        // strictly increasing
  double epsilon = 0.25;
  std::int64_t n = 10000;
  std::uint64_t seed = 1;
  int batches = 1;                   // odd; > 1 applies the median trick
  Alg2Overrides overrides{};
  int threads = 1;
  int bootstrap_resamples = 200;
};

struct StudyRow {
  std::string arm;                       // "is", "ref", "regular", "underresolved", ...
  double b = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double cv = 0.0;
  double variance_ratio = 0.0;
  double cv_se = 0.0;                    // bootstrap
  double variance_ratio_se = 0.0;        // bootstrap
  int M = 0;
  double a = 0.0;
  double epsilon = 0.0;
  double theta = 0.0;
  double wall_time_s = 0.0;
  std::optional<double> naive_estimate;
  std::optional<double> naive_std_error;
  std::optional<double> deficit;             // (ref - coarse) / ref
  std::optional<double> deficit_over_sqrt_eps;
  std::optional<double> z;                   // combined z-score
  std::optional<double> efficiency_multiplier;
};

struct StudyRecord {
  std::string kind;  // "sweep" | "bias" | "compare"
  std::vector<StudyRow> rows;
};

/// Runs the chosen estimator at each level, with per-level bootstrap error
/// bars on cv and on the second-moment ratio.
StudyRecord efficiency_sweep(const SweepSpec& spec);

/// Discretization-bias study on nested lattices: a fine reference grid with
/// theta_ref = min(eps)/(4b), coarse decimations at theta = eps/b, and an
/// under-resolved arm of about b^{d/2} points. All arms are evaluated on the
/// same sample paths, so coarse max <= fine max holds exactly per path.
StudyRecord bias_study(const FieldModel& model, double b, std::vector<double> epsilons, std::int64_t n,
                       std::uint64_t seed, int threads = 1);

/// Importance sampling vs naive Monte Carlo on the same discrete target:
/// both estimates, the combined z-score, and the ratio of replicates needed
/// for equal standard error.
StudyRecord oracle_compare(const FieldModel& model, const PointSet& points, double b, std::int64_t n_is,
                           std::int64_t n_naive, std::uint64_t seed, int threads = 1);

}  // namespace gfis
