#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfis/rng.hpp"

namespace gfis {

/// max + log(sum exp(x - max)); -inf entries are ignored, all -inf gives -inf.
double log_sum_exp(std::span<const double> log_terms);

/// Welford/Chan accumulator. Merging per-block accumulators in block order
/// gives results independent of how blocks were assigned to workers, and a
/// constant input sequence yields exactly zero variance.
class RunningStats {
public:
  void add(double x);
  void merge(const RunningStats& other);

  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double sample_variance() const;          // n-1 denominator; 0 when n < 2
  double second_moment() const;            // E[X^2] estimate
  double std_error() const;                // sqrt(sample_variance / n)

private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Bivariate version tracking the covariance, for delta-method ratio errors.
class RunningStats2 {
public:
  void add(double a, double b);
  void merge(const RunningStats2& other);

  std::int64_t count() const { return n_; }
  double mean_a() const { return mean_a_; }
  double mean_b() const { return mean_b_; }
  double sample_var_a() const;
  double sample_var_b() const;
  double sample_cov() const;

private:
  std::int64_t n_ = 0;
  double mean_a_ = 0.0, mean_b_ = 0.0;
  double m2a_ = 0.0, m2b_ = 0.0, cab_ = 0.0;
};

/// Median of an odd number of batch means.
double median_trick(std::vector<double> batch_means);

struct DispersionErrors {
  double cv_se = 0.0;
  double variance_ratio_se = 0.0;
};

/// Bootstrap standard errors (with replacement) for the coefficient of
/// variation and for E[L^2]/mean^2 of a replicate sample.
DispersionErrors bootstrap_dispersion(std::span<const double> values, int resamples, RandomStream& rng);

}  // namespace gfis
