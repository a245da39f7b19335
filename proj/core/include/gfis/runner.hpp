#pragma once

#include <string>

#include "gfis/config.hpp"
#include "gfis/estimators.hpp"
#include "gfis/experiments.hpp"

namespace gfis {

struct RunArtifacts {
  int exit_code = 0;
  std::string output_path;
  std::string summary;  // one human line: estimate +- std_error, n, M, seconds
};

/// Executes a validated config: runs the command, writes the result document
/// atomically (temp file + rename), and returns the summary line. Errors map
/// to exit codes via exit_code_for().
RunArtifacts run(const RunConfig& config, int threads = 1);

/// Serialized result document (JSON or CSV) for a command, exposed so tests
/// can check schemas without touching the filesystem.
std::string render_estimate_json(const EstimatorResult& r);
std::string render_cond_expect_json(const EstimatorResult& r, const std::string& functional);
std::string render_sweep_csv(const StudyRecord& record);
std::string render_bias_csv(const StudyRecord& record);
std::string render_compare_csv(const StudyRecord& record);

/// Replaces wall-time values by a fixed token. Timing is the single
/// intentionally nondeterministic field in result documents; determinism
/// contracts compare canonicalized bytes.
std::string canonicalize_timing(const std::string& document);

void write_atomic(const std::string& path, const std::string& content);

}  // namespace gfis
