#pragma once

#include <array>
#include <cstdint>

namespace gfis {

// xoshiro256++ seeded through splitmix64. Self-contained so that draws do
// not depend on the standard library's unspecified distribution algorithms:
// a given seed yields the same stream on every platform and toolchain.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1).
  double uniform01();

  /// Uniform draw on (lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via inverse-CDF transform of uniform01().
  double normal();

private:
  std::array<std::uint64_t, 4> state_;
};

// Stream-derivation tags. Each consumer of randomness (replicate k, point
// set, bootstrap resample, per-level subseed) owns a stream derived from
// (master seed, tag, index), so results never depend on worker count or on
// which component draws first.
enum class stream_tag : std::uint64_t {
  replicate = 1,
  point_set = 2,
  bootstrap = 3,
  level = 4,
  misc = 5,
};

std::uint64_t derive_seed(std::uint64_t seed, stream_tag tag, std::uint64_t index);
RandomStream derive_stream(std::uint64_t seed, stream_tag tag, std::uint64_t index);

}  // namespace gfis
