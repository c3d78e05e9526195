#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfcorr/mult_function.hpp"
#include "mfcorr/util.hpp"

namespace mfcorr {

// Exact Fourier coefficients a(1..N) of a weight-k eigenform, with the
// normalised values lambda(n) = a(n)/n^{(k-1)/2}. Construction verifies
// a(1) = 1, the Hecke prime-power recursion
//   a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1})
// for every p^{j+1} <= N, and |a(p)|^2 <= 4 p^{k-1} at every prime,
// all in exact integer arithmetic.
struct CuspFormCoefficients {
  u32 weight = 12;
  u64 N = 0;
  std::vector<mpz_class> a;     // 1-based; a[0] unused
  std::vector<double> lambda;   // 1-based
  std::vector<u64> primes;      // primes <= N

  const mpz_class& coeff(u64 n) const { return a[n]; }
};

// tau(n) for n <= N from q prod (1-q^m)^24: the pentagonal-number
// sparse series for prod (1-q^m), raised to the 24th power by repeated
// truncated multiplication over exact integers. N <= 10^6.
// When cache_path is nonempty, coefficients are loaded from it if
// present (and cover N) and written to it after computing otherwise.
CuspFormCoefficients delta_coefficients(u64 N,
                                        const std::string& cache_path = "");

// max over p <= N of |a(p)| / (2 p^{(k-1)/2}); the underlying bound is
// asserted via the exact comparison |a(p)|^2 <= 4 p^{k-1}.
double deligne_check(const CuspFormCoefficients& c);

// (sum_{p<=X} lambda(p)^2 log p) / X.
double rs_pnt_ratio(const CuspFormCoefficients& c, u64 X);

// sum_{y<=p<=2y, |a(p)| != 1} log p. Requires 2y <= N and a nonempty
// prime range. Compared against y/5 by callers; the threshold is only
// claimed for y above a scale cutoff (default 100 in reports).
double dyadic_ne1_logsum(const CuspFormCoefficients& c, u64 y);

struct Ne1ReciprocalResult {
  double sum;         // sum of 1/p over p <= x with |a(p)| != 1
  double prediction;  // log log x / (10 log 2)
};
Ne1ReciprocalResult ne1_reciprocal_sum(const CuspFormCoefficients& c, u64 x);

// Binary cache: versioned header, then length-prefixed little-endian
// big integers (sign carried by the length).
void save_coefficients(const CuspFormCoefficients& c, const std::string& path);
std::optional<CuspFormCoefficients> load_coefficients(const std::string& path,
                                                      u64 min_N);

// Normalised Hecke coefficients lambda(n) as a multiplicative function;
// evaluation requires every prime factor <= coeffs->N.
MultiplicativeFunction mf_hecke_delta(
    std::shared_ptr<const CuspFormCoefficients> coeffs);

}  // namespace mfcorr
