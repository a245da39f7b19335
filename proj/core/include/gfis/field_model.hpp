#pragma once

#include <span>
#include <string>
#include <vector>

namespace gfis {

/// Hyperrectangle domain T = prod_k [lower_k, upper_k] with positive volume.
class Domain {
public:
  Domain(std::vector<double> lower, std::vector<double> upper);

  int dimension() const { return static_cast<int>(lower_.size()); }
  double lower(int k) const { return lower_[static_cast<std::size_t>(k)]; }
  double upper(int k) const { return upper_[static_cast<std::size_t>(k)]; }
  double edge(int k) const { return upper_[static_cast<std::size_t>(k)] - lower_[static_cast<std::size_t>(k)]; }
  double min_edge() const;
  double volume() const;
  bool contains(std::span<const double> t) const;

private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Mean function mu(t): zero, constant, or affine a.t + c.
class MeanFunction {
public:
  enum class kind { zero, constant, affine };

  static MeanFunction zero();
  static MeanFunction constant(double c);
  static MeanFunction affine(std::vector<double> slope, double intercept);

  double operator()(std::span<const double> t) const;
  kind variant() const { return kind_; }
  bool is_constant() const { return kind_ != kind::affine; }

private:
  MeanFunction(kind k, std::vector<double> slope, double intercept)
      : kind_(k), slope_(std::move(slope)), intercept_(intercept) {}

  kind kind_;
  std::vector<double> slope_;
  double intercept_ = 0.0;
};

/// Stationary covariance kernel catalog. The kernels are isotropic in the
/// Euclidean distance; each carries the Holder exponent beta of its
/// correlation modulus (exponential: 1, squared-exponential and Matern-3/2:
/// 2), which drives discretization-size selection.
class CovarianceKernel {
public:
  enum class family { squared_exponential, exponential, matern32 };

  static CovarianceKernel squared_exponential(double lengthscale, double variance);
  static CovarianceKernel exponential(double lengthscale, double variance);
  static CovarianceKernel matern32(double lengthscale, double variance);

  /// C(s, t); evaluated on the distance |s - t|, hence symmetric exactly.
  double operator()(std::span<const double> s, std::span<const double> t) const;

  /// Isotropic profile c(r) with c(0) = variance.
  double at_distance(double r) const;

  double variance() const { return variance_; }
  double lengthscale() const { return lengthscale_; }
  double holder_exponent() const;
  family kind() const { return family_; }
  std::string name() const;

private:
  CovarianceKernel(family f, double lengthscale, double variance);

  family family_;
  double lengthscale_;
  double variance_;
};

/// A Gaussian field specification: domain, mean, covariance. Immutable and
/// safely shareable across replication workers.
class FieldModel {
public:
  FieldModel(Domain domain, MeanFunction mean, CovarianceKernel kernel)
      : domain_(std::move(domain)), mean_(std::move(mean)), kernel_(std::move(kernel)) {}

  const Domain& domain() const { return domain_; }
  const MeanFunction& mean() const { return mean_; }
  const CovarianceKernel& kernel() const { return kernel_; }

  /// Constant mean + stationary kernel (all catalog kernels are stationary).
  bool homogeneous() const { return mean_.is_constant(); }

private:
  Domain domain_;
  MeanFunction mean_;
  CovarianceKernel kernel_;
};

double eval_mean(const FieldModel& model, std::span<const double> t);
double eval_cov(const FieldModel& model, std::span<const double> s, std::span<const double> t);
/// r(s, t) in [-1, 1]; returns 1 exactly when s == t.
double eval_corr(const FieldModel& model, std::span<const double> s, std::span<const double> t);

}  // namespace gfis
