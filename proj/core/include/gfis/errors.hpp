#pragma once

#include <stdexcept>
#include <string>

namespace gfis {

enum class errc {
  invalid_argument,
  domain_violation,
  configuration,
  near_singular_covariance,
  level_out_of_range,
  degenerate_ratio,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Process exit codes used by the CLI: configuration/argument problems map to
// 2, numeric failures to 3, unrepresentable levels to 4.
int exit_code_for(errc code) noexcept;

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gfis
