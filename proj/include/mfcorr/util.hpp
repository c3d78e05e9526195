#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mfcorr {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using cplx = std::complex<double>;

// Thrown when a request exceeds an explicit cost guard (grid sizes,
// series lengths, search budgets). Maps to CLI exit code 3;
// std::invalid_argument (precondition violations) maps to exit code 4.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// sin(t)/t with the removable singularity filled in; series near 0
// keeps full double accuracy.
inline double sinc(double t) {
  double a = std::fabs(t);
  if (a < 1e-4) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

// H(x) = sum_{n<=x} 1/n, accumulated in increasing n. All logarithmic
// averages in this library are normalised by H(x) rather than log x:
// the two agree up to O(1/log x) and H keeps indicator averages <= 1.
inline double harmonic_sum(u64 x) {
  double s = 0.0;
  for (u64 n = 1; n <= x; ++n) s += 1.0 / static_cast<double>(n);
  return s;
}

// Kahan compensated accumulator, used behind the optional flag of
// restricted_prime_sum.
struct compensated_sum {
  double s = 0.0;
  double c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

// Runs fn(block_index, begin, end) over [0, n) split into fixed-size
// blocks. Block boundaries do not depend on the thread count, so any
// per-block result is reproducible; callers merge blocks in index order.
inline void parallel_blocks(u64 n, u64 block_size,
                            const std::function<void(u64, u64, u64)>& fn,
                            unsigned threads = 0) {
  if (n == 0) return;
  if (block_size == 0) block_size = 1;
  u64 nblocks = (n + block_size - 1) / block_size;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || nblocks <= 1) {
    for (u64 b = 0; b < nblocks; ++b)
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<u64> next{0};
  unsigned use = static_cast<unsigned>(std::min<u64>(threads, nblocks));
  for (unsigned t = 0; t < use; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        u64 b = next.fetch_add(1);
        if (b >= nblocks) break;
        fn(b, b * block_size, std::min(n, (b + 1) * block_size));
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Global worker-thread setting, wired to the CLI --threads flag.
unsigned worker_threads();
void set_worker_threads(unsigned n);

}  // namespace mfcorr
