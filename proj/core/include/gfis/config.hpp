#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfis/estimators.hpp"

namespace gfis {

/// Fully validated run description parsed from the flat key-value
/// configuration format (see README for the schema). Unknown keys, missing
/// required keys, type mismatches and range violations are all reported as
/// configuration errors naming the offending key.
struct RunConfig {
  enum class command_kind { estimate, sweep, bias_study, compare, cond_expect };
  enum class algorithm_kind { finite, holder, smooth, naive };
  enum class points_mode { none, list, uniform, grid };
  enum class output_format { json, csv };

  command_kind command = command_kind::estimate;

  // model block
  std::vector<double> domain_lower;
  std::vector<double> domain_upper;
  CovarianceKernel::family kernel = CovarianceKernel::family::squared_exponential;
  double lengthscale = 1.0;
  double variance = 1.0;
  MeanFunction::kind mean = MeanFunction::kind::zero;
  double mean_constant = 0.0;
  std::vector<double> mean_slope;
  double mean_intercept = 0.0;

  // run block
  algorithm_kind algorithm = algorithm_kind::finite;
  double b = 0.0;
  double epsilon = 0.25;
  std::int64_t n = 1;
  std::uint64_t seed = 1;

  // points block (finite / naive)
  points_mode points = points_mode::none;
  std::vector<std::vector<double>> point_list;
  int point_count = 0;
  double point_theta = 0.0;

  // overrides
  std::optional<double> override_a;
  std::optional<int> override_M;
  std::optional<double> override_theta;
  double v = 0.5;
  int M_max = 4096;

  // command-specific
  std::vector<double> sweep_levels;
  int sweep_batches = 1;
  std::vector<double> study_epsilons;
  std::int64_t compare_n_naive = 0;
  functional_kind cond_functional = functional_kind::exceed_count_fraction;

  // output block
  std::string output_path;  // defaulted from the format when empty
  output_format format = output_format::json;

  FieldModel make_model() const;
  PointSet make_points(const FieldModel& model) const;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace gfis
