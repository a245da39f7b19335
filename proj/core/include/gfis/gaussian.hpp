#pragma once

#include <Eigen/Dense>

#include "gfis/discretization.hpp"
#include "gfis/field_model.hpp"
#include "gfis/rng.hpp"

namespace gfis {

/// Geometric jitter schedule {0, initial, initial*growth, ...} tried in order
/// until the factorization succeeds. `initial` is relative to the largest
/// diagonal entry.
struct JitterPolicy {
  double initial = 1e-10;
  double growth = 10.0;
  int max_tries = 6;
};

struct CovMatrix {
  Eigen::MatrixXd entries;  // symmetric by construction
  PointSet source_points;
  int order() const { return static_cast<int>(entries.rows()); }
};

struct CholeskyFactor {
  Eigen::MatrixXd lower;        // L with L L^T = Sigma + jitter I
  double jitter_applied = 0.0;
  int order() const { return static_cast<int>(lower.rows()); }
};

struct ConditionalLaw {
  int index = 0;          // conditioning coordinate
  double value = 0.0;     // observed value at that coordinate
  Eigen::VectorXd mean;   // length M-1
  CholeskyFactor factor;  // order M-1, Cholesky of the Schur complement
};

/// entries[i][j] = C(p_i, p_j); evaluated once per unordered pair.
CovMatrix assemble_cov(const FieldModel& model, const PointSet& points);

Eigen::VectorXd mean_vector(const FieldModel& model, const PointSet& points);

CholeskyFactor cholesky(const Eigen::MatrixXd& cov, const JitterPolicy& policy = {});
CholeskyFactor cholesky(const CovMatrix& cov, const JitterPolicy& policy = {});

/// mean + L z with z i.i.d. standard normal from the stream.
Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const CholeskyFactor& factor, RandomStream& rng);

/// Repeated conditioning on one coordinate of a fixed (cov, mean): the Schur
/// complement and its factor are computed once, only the conditional mean
/// depends on the observed value.
class CoordinateConditioner {
public:
  CoordinateConditioner(const Eigen::MatrixXd& cov, const Eigen::VectorXd& mean, int index,
                        const JitterPolicy& policy = {});

  ConditionalLaw law(double observed) const;
  Eigen::VectorXd conditional_mean(double observed) const;

  /// Draws X_{-i} | X_i = observed.
  Eigen::VectorXd sample(double observed, RandomStream& rng) const;

  const CholeskyFactor& factor() const { return factor_; }
  int index() const { return index_; }

private:
  int index_;
  double pivot_mean_;
  Eigen::VectorXd base_mean_;  // mean with coordinate i removed
  Eigen::VectorXd gain_;       // Sigma_{-i,i} / Sigma_{ii}
  CholeskyFactor factor_;
};

ConditionalLaw condition_on_coordinate(const CovMatrix& cov, const Eigen::VectorXd& mean, int index,
                                       double observed, const JitterPolicy& policy = {});

/// Draw of Z ~ Normal(mu, sigma^2) conditioned on Z > lower. Inverse-CDF for
/// standardized truncation points up to 3; translated-exponential rejection
/// in the deep tail (expected iterations bounded uniformly in the truncation
/// point). The result is strictly greater than `lower`.
double sample_truncated_normal(double mu, double sigma, double lower, RandomStream& rng);

}  // namespace gfis
