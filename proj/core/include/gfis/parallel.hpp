#pragma once

#include <cstdint>
#include <functional>

#include "gfis/stats.hpp"

namespace gfis {

// Replicates are processed in fixed blocks of kReplicateBlock; workers claim
// whole blocks and block accumulators are merged in block order afterwards,
// so the aggregate is bit-identical for every thread count.
inline constexpr std::int64_t kReplicateBlock = 4096;

/// f(k) -> replicate value; values optionally captured into `out` (size n).
RunningStats parallel_replicates(std::int64_t n, int threads, const std::function<double(std::int64_t)>& f,
                                 std::vector<double>* out = nullptr);

/// f(k) -> (a, b) pair fed to a bivariate accumulator.
RunningStats2 parallel_replicates2(std::int64_t n, int threads,
                                   const std::function<std::pair<double, double>(std::int64_t)>& f);

}  // namespace gfis
