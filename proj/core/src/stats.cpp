#include "gfis/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gfis/errors.hpp"

namespace gfis {

double log_sum_exp(std::span<const double> log_terms) {
  double max = -std::numeric_limits<double>::infinity();
  for (double v : log_terms) max = std::max(max, v);
  if (!std::isfinite(max)) return max;  // all -inf (or a stray +inf)
  double sum = 0.0;
  for (double v : log_terms) sum += std::exp(v - max);
  return max + std::log(sum);
}

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / (na + nb);
  m2_ += other.m2_ + delta * delta * na * nb / (na + nb);
  n_ += other.n_;
}

double RunningStats::sample_variance() const {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

double RunningStats::second_moment() const {
  if (n_ == 0) return 0.0;
  return m2_ / static_cast<double>(n_) + mean_ * mean_;
}

double RunningStats::std_error() const {
  return n_ > 0 ? std::sqrt(sample_variance() / static_cast<double>(n_)) : 0.0;
}

void RunningStats2::add(double a, double b) {
  ++n_;
  const double inv = 1.0 / static_cast<double>(n_);
  const double da = a - mean_a_;
  const double db = b - mean_b_;
  mean_a_ += da * inv;
  mean_b_ += db * inv;
  m2a_ += da * (a - mean_a_);
  m2b_ += db * (b - mean_b_);
  cab_ += da * (b - mean_b_);
}

void RunningStats2::merge(const RunningStats2& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double da = other.mean_a_ - mean_a_;
  const double db = other.mean_b_ - mean_b_;
  const double w = na * nb / (na + nb);
  m2a_ += other.m2a_ + da * da * w;
  m2b_ += other.m2b_ + db * db * w;
  cab_ += other.cab_ + da * db * w;
  mean_a_ += da * nb / (na + nb);
  mean_b_ += db * nb / (na + nb);
  n_ += other.n_;
}

double RunningStats2::sample_var_a() const { return n_ > 1 ? m2a_ / static_cast<double>(n_ - 1) : 0.0; }
double RunningStats2::sample_var_b() const { return n_ > 1 ? m2b_ / static_cast<double>(n_ - 1) : 0.0; }
double RunningStats2::sample_cov() const { return n_ > 1 ? cab_ / static_cast<double>(n_ - 1) : 0.0; }

double median_trick(std::vector<double> batch_means) {
  if (batch_means.empty()) raise(errc::invalid_argument, "median_trick: empty batch list");
  if (batch_means.size() % 2 == 0) raise(errc::invalid_argument, "median_trick: batch count must be odd");
  const auto mid = batch_means.begin() + static_cast<std::ptrdiff_t>(batch_means.size() / 2);
  std::nth_element(batch_means.begin(), mid, batch_means.end());
  return *mid;
}

DispersionErrors bootstrap_dispersion(std::span<const double> values, int resamples, RandomStream& rng) {
  const std::size_t n = values.size();
  if (n < 2 || resamples < 2) return {};
  RunningStats cv_stats;
  RunningStats vr_stats;
  for (int r = 0; r < resamples; ++r) {
    RunningStats s;
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n));
      s.add(values[std::min(j, n - 1)]);
    }
    const double mean = s.mean();
    if (mean > 0.0) {
      cv_stats.add(std::sqrt(s.sample_variance()) / mean);
      vr_stats.add(s.second_moment() / (mean * mean));
    }
  }
  DispersionErrors out;
  out.cv_se = std::sqrt(cv_stats.sample_variance());
  out.variance_ratio_se = std::sqrt(vr_stats.sample_variance());
  return out;
}

}  // namespace gfis
