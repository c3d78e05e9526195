#include "mfcorr/mult_function.hpp"

#include <cmath>
#include <sstream>

namespace mfcorr {

namespace {

double pow_u64_as_double(u64 p, u32 k) {
  u64 v = 1;
  for (u32 i = 0; i < k; ++i) v *= p;
  return static_cast<double>(v);
}

}  // namespace

MultiplicativeFunction mf_one() {
  return {"one", [](u64, u32) { return cplx(1.0, 0.0); }, true,
          ValueClass::unimodular_or_zero, true};
}

MultiplicativeFunction mf_moebius() {
  return {"moebius",
          [](u64, u32 k) { return k == 1 ? cplx(-1.0, 0.0) : cplx(0.0, 0.0); },
          false, ValueClass::unimodular_or_zero, true};
}

MultiplicativeFunction mf_liouville() {
  return {"liouville",
          [](u64, u32 k) { return k % 2 == 0 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0); },
          true, ValueClass::unimodular_or_zero, true};
}

MultiplicativeFunction mf_divisor() {
  return {"divisor", [](u64, u32 k) { return cplx(k + 1.0, 0.0); }, false,
          ValueClass::real_valued, true};
}

MultiplicativeFunction mf_euler_phi() {
  return {"euler_phi",
          [](u64 p, u32 k) {
            return cplx(pow_u64_as_double(p, k) - pow_u64_as_double(p, k - 1),
                        0.0);
          },
          false, ValueClass::real_valued, true};
}

MultiplicativeFunction mf_sigma() {
  return {"sigma",
          [](u64 p, u32 k) {
            u64 num = 1, pk = 1;
            for (u32 i = 0; i < k; ++i) {
              pk *= p;
              num += pk;
            }
            return cplx(static_cast<double>(num), 0.0);
          },
          false, ValueClass::real_valued, true};
}

MultiplicativeFunction mf_identity() {
  return {"identity",
          [](u64 p, u32 k) { return cplx(pow_u64_as_double(p, k), 0.0); },
          true, ValueClass::real_valued, true};
}

MultiplicativeFunction mf_nit(double t) {
  std::ostringstream name;
  name << "nit(t=" << t << ")";
  return {name.str(),
          [t](u64 p, u32 k) {
            double theta = t * k * std::log(static_cast<double>(p));
            return cplx(std::cos(theta), std::sin(theta));
          },
          true, ValueClass::unimodular_or_zero, false};
}

MultiplicativeFunction mf_character(DirichletCharacter chi) {
  std::ostringstream name;
  name << "character(q=" << chi.modulus() << ",index=" << chi.index() << ")";
  u64 q = chi.modulus();
  return {name.str(),
          [chi = std::move(chi), q](u64 p, u32 k) {
            // Completely multiplicative; p^k mod q via modular power.
            u64 r = 1 % std::max<u64>(q, 1);
            u64 base = p % std::max<u64>(q, 1);
            if (q <= 1) return cplx(1.0, 0.0);
            for (u32 i = 0; i < k; ++i) r = r * base % q;
            return chi.value(r);
          },
          true, ValueClass::unimodular_or_zero, false};
}

MultiplicativeFunction mf_character(u64 q, u64 index) {
  auto group = std::make_shared<const CharacterGroup>(q);
  if (index >= group->size())
    throw std::invalid_argument("mf_character: index out of range");
  return mf_character(DirichletCharacter(group, index));
}

MultiplicativeFunction mf_squarefree_twist(
    const MultiplicativeFunction& inner) {
  return {"squarefree_twist(inner=" + inner.name() + ")",
          [rule = inner](u64 p, u32 k) {
            return k == 1 ? rule.at_prime_power(p, 1) : cplx(0.0, 0.0);
          },
          false, inner.value_class(), inner.integer_valued()};
}

MultiplicativeFunction mf_product(const MultiplicativeFunction& f,
                                  const MultiplicativeFunction& g) {
  ValueClass vc;
  if (f.value_class() == ValueClass::unimodular_or_zero &&
      g.value_class() == ValueClass::unimodular_or_zero)
    vc = ValueClass::unimodular_or_zero;
  else if (f.value_class() != ValueClass::complex_valued &&
           g.value_class() != ValueClass::complex_valued)
    vc = ValueClass::real_valued;
  else
    vc = ValueClass::complex_valued;
  return {"product(f=" + f.name() + ",g=" + g.name() + ")",
          [f, g](u64 p, u32 k) {
            return f.at_prime_power(p, k) * g.at_prime_power(p, k);
          },
          f.completely_multiplicative() && g.completely_multiplicative(), vc,
          f.integer_valued() && g.integer_valued()};
}

MultiplicativeFunction mf_conjugate(const MultiplicativeFunction& f) {
  return {"conjugate(inner=" + f.name() + ")",
          [f](u64 p, u32 k) { return std::conj(f.at_prime_power(p, k)); },
          f.completely_multiplicative(), f.value_class(), f.integer_valued()};
}

MultiplicativeFunction mf_power(const MultiplicativeFunction& f, u32 m) {
  if (m < 1) throw std::invalid_argument("mf_power: m must be >= 1");
  std::ostringstream name;
  name << "power(m=" << m << ",inner=" << f.name() << ")";
  return {name.str(),
          [f, m](u64 p, u32 k) {
            cplx base = f.at_prime_power(p, k);
            cplx v(1.0, 0.0);
            u32 e = m;
            while (e) {
              if (e & 1) v *= base;
              base *= base;
              e >>= 1;
            }
            return v;
          },
          f.completely_multiplicative(), f.value_class(),
          f.integer_valued()};
}

MultiplicativeFunction mf_archimedean(const MultiplicativeFunction& f,
                                      double t) {
  std::ostringstream name;
  name << "proj(t=" << t << ",inner=" << f.name() << ")";
  return {name.str(),
          [f, t](u64 p, u32 k) {
            double a = std::abs(f.at_prime_power(p, k));
            if (a == 0.0) return cplx(0.0, 0.0);
            double theta = t * std::log(a);
            return cplx(std::cos(theta), std::sin(theta));
          },
          f.completely_multiplicative(), ValueClass::unimodular_or_zero,
          false};
}

}  // namespace mfcorr
