#pragma once

#include "mfcorr/mult_function.hpp"
#include "mfcorr/prime_table.hpp"
#include "mfcorr/util.hpp"

namespace mfcorr {

// D(f, g; x)^2 = sum_{p<=x} (1 - Re f(p) conj(g(p))) / p, accumulated in
// increasing-p order. Both functions must take values in the closed unit
// disc; every prime value is checked and a violation throws.
double distance_squared(const MultiplicativeFunction& f,
                        const MultiplicativeFunction& g, u64 x,
                        const PrimeTable& table);

struct NitProfile {
  double measured;   // D(n^{it}, 1; x)^2 by direct prime sum
  double predicted;  // log(1 + |t| log x) for |t| <= 10, else loglog x / 3
};
NitProfile nit_distance_profile(double t, u64 x, const PrimeTable& table);

struct PretenseResult {
  double distance_squared;
  double t;
  u64 character_modulus;  // conductor of the primitive character
  u64 character_index;
};

struct PretenderOptions {
  u64 conductor_bound = 10;
  double t_max = 100.0;
  double t_step = 0.01;
};

// Exhaustive search for the closest twisted character psi(n) n^{it} over
// all primitive psi of conductor <= conductor_bound and t on the uniform
// grid {-t_max, ..., t_max}. Stands in for the ineffective constants of
// the correlation theorem; the budget is configuration.
//
// Primes dividing the character modulus are omitted from each candidate's
// sum, so an exact twisted-character input has distance zero. Ties break
// by smaller conductor, then |t|, then t, then index.
PretenseResult best_pretender(const MultiplicativeFunction& f, u64 x,
                              const PretenderOptions& opts,
                              const PrimeTable& table);

}  // namespace mfcorr
