#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfis/field_model.hpp"
#include "gfis/discretization.hpp"
#include "gfis/gaussian.hpp"
#include "gfis/rng.hpp"

namespace gfis {

/// Excursion level b together with the effective forcing level gamma used by
/// the mixture: b itself (finite fields), b - a/b (random discretization), or
/// b - 1/b (regular grids).
struct LevelSpec {
  double b = 0.0;
  double a = 0.0;
  double gamma = 0.0;

  static LevelSpec finite(double b);
  static LevelSpec holder(double b, double a);
  static LevelSpec smooth(double b);
};

/// One importance-sampling draw.
struct ReplicateOutcome {
  int selected_index = 0;
  Eigen::VectorXd field_values;
  double likelihood_ratio = 0.0;
  bool exceeded_b = false;     // max_j X_j > b (strict)
  int num_exceed_gamma = 0;    // denominator count, always >= 1
};

struct ConfigEcho {
  std::string algorithm;
  double b = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double epsilon = 0.0;
  double v = 0.0;
  double theta = 0.0;
  int M = 0;
  std::uint64_t seed = 0;
  bool m_truncated = false;        // param_select hit the M cap
  std::int64_t recommended_n = 0;  // eps^-2 delta^-1 guidance (delta = 0.05); 0 when n/a
};

struct EstimatorResult {
  double estimate = 0.0;
  double std_error = 0.0;        // sample std / sqrt(n)
  double cv = 0.0;               // sample std of a single replicate / estimate (0 when estimate <= 0)
  double variance_ratio = 0.0;   // empirical E[L^2] / estimate^2 (0 when estimate <= 0)
  std::int64_t n = 0;
  int M = 0;
  ConfigEcho config;
  double wall_time_s = 0.0;
};

/// Bernoulli average of 1(max_j X_j > b) over n MVN draws on `points`.
EstimatorResult naive_mc(const FieldModel& model, const PointSet& points, double b, std::int64_t n,
                         std::uint64_t seed, int threads = 1, std::vector<double>* replicate_values = nullptr);

/// One draw of the exceedance-weighted mixture on a fixed point set:
/// index i ~ p(i,b) proportional to P(X_i > b), X_i truncated above b, the
/// rest conditional; L = sum_j P(X_j > b) / #{j : X_j > b}.
ReplicateOutcome finite_is_replicate(const FieldModel& model, const PointSet& points, double b,
                                     RandomStream& rng);

EstimatorResult run_algorithm_1(const FieldModel& model, const PointSet& points, double b, std::int64_t n,
                                std::uint64_t seed, int threads = 1,
                                std::vector<double>* replicate_values = nullptr);

/// One draw for Holder-continuous fields: fresh U of M uniform points, then
/// the mixture at level gamma = b - a/b on the covariance assembled on U.
ReplicateOutcome holder_is_replicate(const FieldModel& model, int M, const LevelSpec& level,
                                     RandomStream& rng);

struct ParamSelection {
  double a = 0.0;
  int M = 0;
  bool truncated = false;  // M hit the cap
  double rho = 0.0;
  double exponent = 0.0;   // (4 + 4v) d / beta
};

/// a = min(1, eps * b^-rho / 4) with rho = 2d/beta + dv + 1, and
/// M = ceil(eps^-1 (b/a)^{(4+4v)d/beta}) capped at M_max. The scheme's
/// unknown constants are taken as 1; a, M and v are all overridable.
ParamSelection param_select(double b, double epsilon, const FieldModel& model, double v = 0.5,
                            int M_max = 4096);

struct Alg2Overrides {
  std::optional<double> a;
  std::optional<int> M;
  double v = 0.5;
  int M_max = 4096;
};

EstimatorResult run_algorithm_2(const FieldModel& model, double b, double epsilon, std::int64_t n,
                                std::uint64_t seed, const Alg2Overrides& overrides = {}, int threads = 1,
                                std::vector<double>* replicate_values = nullptr);

/// One draw of the uniform mixture on a theta-regular grid of a homogeneous
/// field: i uniform, X_i truncated above b - 1/b, rest conditional;
/// L = M P(X_1 > b - 1/b) / #{j : X_j > b - 1/b} * 1(max_j X_j > b).
ReplicateOutcome smooth_is_replicate(const FieldModel& model, const PointSet& grid, double b,
                                     RandomStream& rng);

EstimatorResult run_algorithm_3(const FieldModel& model, double b, double epsilon, std::int64_t n,
                                std::uint64_t seed, std::optional<double> theta_override = {},
                                int threads = 1, std::vector<double>* replicate_values = nullptr);

enum class functional_kind { excursion_volume, exceed_count_fraction, custom };

/// Bounded nonnegative functional of the discretized path. Custom functionals
/// are clamped to [0, cap].
struct FunctionalSpec {
  functional_kind kind = functional_kind::exceed_count_fraction;
  double cap = 1.0;
  std::function<double(const ReplicateOutcome&, const PointSet&, double b)> fn;

  static FunctionalSpec excursion_volume();
  static FunctionalSpec exceed_count_fraction();
  static FunctionalSpec custom(double cap,
                               std::function<double(const ReplicateOutcome&, const PointSet&, double)> fn);
};

/// Ratio estimator mean(Gamma L) / mean(L) for E[Gamma | sup > b], with a
/// delta-method standard error. `points` is required for algorithm 1 and
/// ignored otherwise.
EstimatorResult conditional_expectation(const FieldModel& model, int algorithm, const FunctionalSpec& gamma,
                                        double b, double epsilon, std::int64_t n, std::uint64_t seed,
                                        const PointSet* points = nullptr, const Alg2Overrides& overrides = {},
                                        int threads = 1);

/// Median of an odd number of batch means (confidence boosting).
double median_trick(const std::vector<double>& batch_means);

}  // namespace gfis
