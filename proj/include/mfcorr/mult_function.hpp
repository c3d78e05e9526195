#pragma once

#include <functional>
#include <memory>
#include <string>

#include "mfcorr/dirichlet.hpp"
#include "mfcorr/prime_table.hpp"
#include "mfcorr/util.hpp"

namespace mfcorr {

enum class ValueClass { complex_valued, real_valued, unimodular_or_zero };

// A multiplicative function represented by its rule at prime powers.
// Immutable after construction; f(1) = 1 always. The class tags are
// advisory (verified by sampling in tests, not by proof).
class MultiplicativeFunction {
 public:
  using Rule = std::function<cplx(u64 p, u32 k)>;

  MultiplicativeFunction(std::string name, Rule rule,
                         bool completely_multiplicative, ValueClass vc,
                         bool integer_valued = false)
      : name_(std::move(name)),
        rule_(std::move(rule)),
        completely_multiplicative_(completely_multiplicative),
        value_class_(vc),
        integer_valued_(integer_valued) {}

  const std::string& name() const { return name_; }
  bool completely_multiplicative() const { return completely_multiplicative_; }
  ValueClass value_class() const { return value_class_; }
  bool integer_valued() const { return integer_valued_; }

  cplx at_prime_power(u64 p, u32 k) const { return rule_(p, k); }
  cplx at_prime(u64 p) const { return rule_(p, 1); }

  // f(n) via the table's smallest-prime-factor walk. Requires
  // 1 <= n <= table.factor_limit().
  cplx eval(u64 n, const PrimeTable& table) const {
    if (n == 0) throw std::invalid_argument("eval: n must be >= 1");
    cplx v(1.0, 0.0);
    table.for_each_prime_power(n, [&](u64 p, u32 k) { v *= rule_(p, k); });
    return v;
  }

 private:
  std::string name_;
  Rule rule_;
  bool completely_multiplicative_;
  ValueClass value_class_;
  bool integer_valued_;
};

// Built-ins.
MultiplicativeFunction mf_one();
MultiplicativeFunction mf_moebius();
MultiplicativeFunction mf_liouville();
MultiplicativeFunction mf_divisor();
MultiplicativeFunction mf_euler_phi();
MultiplicativeFunction mf_sigma();
MultiplicativeFunction mf_identity();
MultiplicativeFunction mf_nit(double t);  // n^{it}
MultiplicativeFunction mf_character(u64 q, u64 index);
MultiplicativeFunction mf_character(DirichletCharacter chi);
// mu^2 * inner: inner on squarefree support, 0 at higher prime powers.
MultiplicativeFunction mf_squarefree_twist(const MultiplicativeFunction& inner);

// Combinators.
MultiplicativeFunction mf_product(const MultiplicativeFunction& f,
                                  const MultiplicativeFunction& g);
MultiplicativeFunction mf_conjugate(const MultiplicativeFunction& f);
MultiplicativeFunction mf_power(const MultiplicativeFunction& f, u32 m);

// Archimedean projection |f|_t: |f(n)|^{it} on the nonzero support of f,
// 0 elsewhere. Always unimodular-or-zero.
MultiplicativeFunction mf_archimedean(const MultiplicativeFunction& f,
                                      double t);

}  // namespace mfcorr
