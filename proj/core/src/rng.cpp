#include "gfis/rng.hpp"

#include "gfis/normal.hpp"

namespace gfis {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform01() {
  // 53 random bits, centered in the bin: strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double RandomStream::normal() { return normal_quantile(uniform01()); }

std::uint64_t derive_seed(std::uint64_t seed, stream_tag tag, std::uint64_t index) {
  std::uint64_t s = seed;
  (void)splitmix64(s);
  s ^= static_cast<std::uint64_t>(tag) * 0xd1342543de82ef95ULL;
  (void)splitmix64(s);
  s ^= index * 0xaf251af3b0f025b5ULL;
  return splitmix64(s);
}

RandomStream derive_stream(std::uint64_t seed, stream_tag tag, std::uint64_t index) {
  return RandomStream(derive_seed(seed, tag, index));
}

}  // namespace gfis
