#include "gfis/field_model.hpp"

#include <cmath>

#include "gfis/errors.hpp"

namespace gfis {
namespace {

constexpr double kSqrt3 = 1.7320508075688772935274463415058723669428;

void check_in_domain(const Domain& domain, std::span<const double> t, const char* op) {
  if (static_cast<int>(t.size()) != domain.dimension())
    raise(errc::domain_violation, std::string(op) + ": point dimension mismatch");
  if (!domain.contains(t)) raise(errc::domain_violation, std::string(op) + ": point outside domain");
}

double distance(std::span<const double> s, std::span<const double> t) {
  double sum = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double d = s[k] - t[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

Domain::Domain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    raise(errc::invalid_argument, "domain: lower/upper must be non-empty and of equal length");
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k]) || !(lower_[k] < upper_[k]))
      raise(errc::invalid_argument, "domain: need lower < upper on every axis");
  }
}

double Domain::min_edge() const {
  double best = edge(0);
  for (int k = 1; k < dimension(); ++k) best = std::min(best, edge(k));
  return best;
}

double Domain::volume() const {
  double v = 1.0;
  for (int k = 0; k < dimension(); ++k) v *= edge(k);
  return v;
}

bool Domain::contains(std::span<const double> t) const {
  if (static_cast<int>(t.size()) != dimension()) return false;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(t[k] >= lower_[k]) || !(t[k] <= upper_[k])) return false;
  }
  return true;
}

MeanFunction MeanFunction::zero() { return MeanFunction(kind::zero, {}, 0.0); }

MeanFunction MeanFunction::constant(double c) {
  if (!std::isfinite(c)) raise(errc::invalid_argument, "mean: constant must be finite");
  return MeanFunction(kind::constant, {}, c);
}

MeanFunction MeanFunction::affine(std::vector<double> slope, double intercept) {
  if (slope.empty()) raise(errc::invalid_argument, "mean: affine slope must be non-empty");
  for (double a : slope)
    if (!std::isfinite(a)) raise(errc::invalid_argument, "mean: affine slope must be finite");
  if (!std::isfinite(intercept)) raise(errc::invalid_argument, "mean: affine intercept must be finite");
  return MeanFunction(kind::affine, std::move(slope), intercept);
}

double MeanFunction::operator()(std::span<const double> t) const {
  switch (kind_) {
    case kind::zero:
      return 0.0;
    case kind::constant:
      return intercept_;
    case kind::affine: {
      double v = intercept_;
      for (std::size_t k = 0; k < slope_.size() && k < t.size(); ++k) v += slope_[k] * t[k];
      return v;
    }
  }
  return 0.0;
}

CovarianceKernel::CovarianceKernel(family f, double lengthscale, double variance)
    : family_(f), lengthscale_(lengthscale), variance_(variance) {
  if (!(lengthscale > 0.0) || !std::isfinite(lengthscale))
    raise(errc::invalid_argument, "kernel: lengthscale must be > 0");
  if (!(variance > 0.0) || !std::isfinite(variance))
    raise(errc::invalid_argument, "kernel: variance must be > 0");
}

CovarianceKernel CovarianceKernel::squared_exponential(double lengthscale, double variance) {
  return CovarianceKernel(family::squared_exponential, lengthscale, variance);
}

CovarianceKernel CovarianceKernel::exponential(double lengthscale, double variance) {
  return CovarianceKernel(family::exponential, lengthscale, variance);
}

CovarianceKernel CovarianceKernel::matern32(double lengthscale, double variance) {
  return CovarianceKernel(family::matern32, lengthscale, variance);
}

double CovarianceKernel::at_distance(double r) const {
  const double u = r / lengthscale_;
  switch (family_) {
    case family::squared_exponential:
      return variance_ * std::exp(-0.5 * u * u);
    case family::exponential:
      return variance_ * std::exp(-u);
    case family::matern32: {
      const double w = kSqrt3 * u;
      return variance_ * (1.0 + w) * std::exp(-w);
    }
  }
  return 0.0;
}

double CovarianceKernel::operator()(std::span<const double> s, std::span<const double> t) const {
  return at_distance(distance(s, t));
}

double CovarianceKernel::holder_exponent() const {
  return family_ == family::exponential ? 1.0 : 2.0;
}

std::string CovarianceKernel::name() const {
  switch (family_) {
    case family::squared_exponential:
      return "sqexp";
    case family::exponential:
      return "exponential";
    case family::matern32:
      return "matern32";
  }
  return "?";
}

double eval_mean(const FieldModel& model, std::span<const double> t) {
  check_in_domain(model.domain(), t, "eval_mean");
  return model.mean()(t);
}

double eval_cov(const FieldModel& model, std::span<const double> s, std::span<const double> t) {
  check_in_domain(model.domain(), s, "eval_cov");
  check_in_domain(model.domain(), t, "eval_cov");
  return model.kernel()(s, t);
}

double eval_corr(const FieldModel& model, std::span<const double> s, std::span<const double> t) {
  check_in_domain(model.domain(), s, "eval_corr");
  check_in_domain(model.domain(), t, "eval_corr");
  bool same = true;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != t[k]) {
      same = false;
      break;
    }
  }
  if (same) return 1.0;
  // Stationary catalog: sigma(s) = sigma(t) = sqrt(variance).
  const double r = model.kernel()(s, t) / model.kernel().variance();
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace gfis
