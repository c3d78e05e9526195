#include "mfcorr/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace mfcorr {

namespace {

unsigned g_worker_threads = 0;

// Odd-composite bitmask over one segment; segments sized to stay inside
// L2 while sieving.
constexpr u64 kSegmentBytes = 1 << 18;

std::vector<u64> simple_sieve(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

unsigned worker_threads() {
  if (g_worker_threads == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  return g_worker_threads;
}

void set_worker_threads(unsigned n) { g_worker_threads = n; }

PrimeTable PrimeTable::build(u64 limit, PrimeTableOptions opts) {
  if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
  if (limit > (u64{1} << 40))
    throw budget_error("PrimeTable: limit exceeds 2^40");

  PrimeTable t;
  t.limit_ = limit;

  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 2;
  std::vector<u64> base = simple_sieve(std::min(root, limit));

  // Segmented sieve over [2, limit].
  double ll = std::log(static_cast<double>(std::max<u64>(limit, 16)));
  t.primes_.reserve(static_cast<size_t>(1.15 * limit / ll) + 16);
  u64 seg_len = kSegmentBytes * 8;
  std::vector<bool> mark;
  for (u64 lo = 2; lo <= limit; lo += seg_len) {
    u64 hi = std::min(limit, lo + seg_len - 1);
    mark.assign(hi - lo + 1, false);
    for (u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (u64 m = start; m <= hi; m += p) mark[m - lo] = true;
    }
    for (u64 n = lo; n <= hi; ++n)
      if (!mark[n - lo]) t.primes_.push_back(n);
  }

  if (opts.build_spf) {
    u64 cap = std::min(limit, opts.spf_limit);
    cap = std::min<u64>(cap, 0xFFFFFFFFull);
    t.spf_limit_ = cap;
    t.spf_.assign(cap + 1, 0);
    // Ascending-p marking: the first prime that touches n is spf(n).
    for (u64 p : t.primes_) {
      if (p > cap) break;
      for (u64 m = p; m <= cap; m += p)
        if (t.spf_[m] == 0) t.spf_[m] = static_cast<u32>(p);
    }
  }
  return t;
}

u64 PrimeTable::count_primes(u64 x) const {
  if (x > limit_)
    throw std::invalid_argument("count_primes: x exceeds table limit");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<u64>(it - primes_.begin());
}

bool PrimeTable::is_prime(u64 n) const {
  if (n > limit_)
    throw std::invalid_argument("is_prime: n exceeds table limit");
  if (n >= 2 && n <= spf_limit_ && !spf_.empty()) return spf_[n] == n;
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

void PrimeTable::check_factor_range(u64 n) const {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (spf_.empty() || n > spf_limit_)
    throw std::invalid_argument(
        "factorize: n exceeds the factorization limit of this table");
}

u64 PrimeTable::smallest_prime_factor(u64 n) const {
  check_factor_range(n);
  if (n == 1) throw std::invalid_argument("smallest_prime_factor: n = 1");
  return spf_[n];
}

Factorization PrimeTable::factorize(u64 n) const {
  Factorization out;
  for_each_prime_power(n, [&](u64 p, u32 e) { out.push_back({p, e}); });
  return out;
}

double PrimeTable::restricted_prime_sum(u64 x,
                                        const std::function<bool(u64)>& member,
                                        bool compensated) const {
  if (x > limit_)
    throw std::invalid_argument("restricted_prime_sum: x exceeds table limit");
  if (compensated) {
    compensated_sum acc;
    for (u64 p : primes_) {
      if (p > x) break;
      if (member(p)) acc.add(1.0 / static_cast<double>(p));
    }
    return acc.value();
  }
  double s = 0.0;
  for (u64 p : primes_) {
    if (p > x) break;
    if (member(p)) s += 1.0 / static_cast<double>(p);
  }
  return s;
}

double PrimeTable::prime_reciprocal_sum(u64 x) const {
  return restricted_prime_sum(x, [](u64) { return true; });
}

}  // namespace mfcorr
