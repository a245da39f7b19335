#include "gfis/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "gfis/errors.hpp"

namespace gfis {
namespace {

int clamp_threads(int threads) {
  if (threads < 1) raise(errc::invalid_argument, "thread count must be >= 1");
  return std::min(threads, 256);
}

// Runs f over every block [block*kReplicateBlock, ...) and stores the result
// in slot block. The block accumulators are merged by the caller in block
// order, which keeps the fold identical for every worker count (including 1).
template <class Acc, class PerBlock>
std::vector<Acc> run_blocks(std::int64_t n, int threads, const PerBlock& per_block) {
  const std::int64_t blocks = (n + kReplicateBlock - 1) / kReplicateBlock;
  std::vector<Acc> partials(static_cast<std::size_t>(blocks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::int64_t blk = next.fetch_add(1);
      if (blk >= blocks) return;
      try {
        const std::int64_t lo = blk * kReplicateBlock;
        const std::int64_t hi = std::min(n, lo + kReplicateBlock);
        per_block(lo, hi, partials[static_cast<std::size_t>(blk)]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(clamp_threads(threads), blocks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return partials;
}

}  // namespace

RunningStats parallel_replicates(std::int64_t n, int threads, const std::function<double(std::int64_t)>& f,
                                 std::vector<double>* out) {
  if (n < 1) raise(errc::invalid_argument, "replicate count must be >= 1");
  if (out) out->assign(static_cast<std::size_t>(n), 0.0);
  auto partials = run_blocks<RunningStats>(n, threads, [&](std::int64_t lo, std::int64_t hi, RunningStats& acc) {
    for (std::int64_t k = lo; k < hi; ++k) {
      const double value = f(k);
      if (out) (*out)[static_cast<std::size_t>(k)] = value;
      acc.add(value);
    }
  });
  RunningStats total;
  for (const auto& p : partials) total.merge(p);
  return total;
}

RunningStats2 parallel_replicates2(std::int64_t n, int threads,
                                   const std::function<std::pair<double, double>(std::int64_t)>& f) {
  if (n < 1) raise(errc::invalid_argument, "replicate count must be >= 1");
  auto partials = run_blocks<RunningStats2>(n, threads, [&](std::int64_t lo, std::int64_t hi, RunningStats2& acc) {
    for (std::int64_t k = lo; k < hi; ++k) {
      const auto [a, b] = f(k);
      acc.add(a, b);
    }
  });
  RunningStats2 total;
  for (const auto& p : partials) total.merge(p);
  return total;
}

}  // namespace gfis
