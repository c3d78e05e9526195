#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mfcorr/util.hpp"

namespace mfcorr {

// One (prime, exponent) pair of a factorization, primes strictly
// increasing, exponents >= 1. n = 1 factors into the empty list.
struct PrimeFactor {
  u64 prime;
  u32 exponent;
  bool operator==(const PrimeFactor&) const = default;
};
using Factorization = std::vector<PrimeFactor>;

struct PrimeTableOptions {
  // Smallest-prime-factor array is kept only up to this bound; density
  // sums factor every n <= x, so the default covers desk-scale runs
  // while keeping memory at 4 bytes per integer.
  u64 spf_limit = 100'000'000;
  bool build_spf = true;
};

// Primes and smallest-prime-factor map up to a limit. Immutable after
// construction; safe for unrestricted concurrent reads.
class PrimeTable {
 public:
  static PrimeTable build(u64 limit, PrimeTableOptions opts = {});

  u64 limit() const { return limit_; }
  u64 factor_limit() const { return spf_.empty() ? 1 : spf_limit_; }
  const std::vector<u64>& primes() const { return primes_; }

  // pi(x): number of primes <= x. Requires x <= limit.
  u64 count_primes(u64 x) const;

  bool is_prime(u64 n) const;

  // Smallest prime factor of n, 2 <= n <= factor_limit().
  u64 smallest_prime_factor(u64 n) const;

  Factorization factorize(u64 n) const;

  // Walks the prime factorization of n without materialising a
  // Factorization; fn(p, e) is called in increasing-p order. Hot path
  // for evaluating multiplicative functions over long ranges.
  template <typename Fn>
  void for_each_prime_power(u64 n, Fn&& fn) const {
    check_factor_range(n);
    while (n > 1) {
      u64 p = spf_[n];
      u32 e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      fn(p, e);
    }
  }

  // Sum of 1/p over primes p <= x with member(p), accumulated in
  // increasing-p order. Deterministic; Kahan compensation optional.
  double restricted_prime_sum(u64 x, const std::function<bool(u64)>& member,
                              bool compensated = false) const;

  // Sum of 1/p over all primes p <= x.
  double prime_reciprocal_sum(u64 x) const;

 private:
  void check_factor_range(u64 n) const;

  u64 limit_ = 0;
  u64 spf_limit_ = 0;
  std::vector<u64> primes_;
  std::vector<u32> spf_;  // spf_[n] for n <= spf_limit_, 0 and 1 unused
};

}  // namespace mfcorr
