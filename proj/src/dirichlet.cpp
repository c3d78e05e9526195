#include "mfcorr/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mfcorr {

namespace {

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = (unsigned __int128)r * base % mod;
    base = (unsigned __int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest primitive root mod p^e, p odd prime.
u64 primitive_root(u64 p, u32 e) {
  std::vector<u64> qs = prime_divisors(p - 1);
  u64 g = 2;
  for (;; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  if (e >= 2) {
    // g must stay primitive mod p^2 (then mod every p^e).
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
  }
  return g;
}

std::vector<u32> dlog_table(u64 pe, u64 gen, u64 order) {
  std::vector<u32> table(pe, ~0u);
  u64 v = 1;
  for (u64 k = 0; k < order; ++k) {
    table[v] = static_cast<u32>(k);
    v = (unsigned __int128)v * gen % pe;
  }
  return table;
}

}  // namespace

CharacterGroup::CharacterGroup(u64 modulus) {
  if (modulus < 1) throw std::invalid_argument("CharacterGroup: modulus >= 1");
  q_ = modulus;

  u64 m = q_;
  u32 two_exp = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++two_exp;
  }
  if (two_exp == 2) {
    u64 pe = 4;
    factors_.push_back({pe, 2, dlog_table(pe, 3, 2)});
  } else if (two_exp >= 3) {
    // (Z/2^e)^* = <-1> x <5>: every unit is (-1)^s 5^k, tabulate both
    // coordinates in one sweep over the <5> cycle.
    u64 pe = u64{1} << two_exp;
    u64 order5 = pe / 4;
    std::vector<u32> tsign(pe, ~0u), t5(pe, ~0u);
    u64 v = 1;
    for (u64 k = 0; k < order5; ++k) {
      tsign[v] = 0;
      t5[v] = static_cast<u32>(k);
      tsign[pe - v] = 1;
      t5[pe - v] = static_cast<u32>(k);
      v = (unsigned __int128)v * 5 % pe;
    }
    factors_.push_back({pe, 2, std::move(tsign)});
    factors_.push_back({pe, order5, std::move(t5)});
  }
  for (u64 p = 3; p * p <= m; p += 2)
    if (m % p == 0) {
      u64 pe = 1;
      u32 e = 0;
      while (m % p == 0) {
        m /= p;
        pe *= p;
        ++e;
      }
      u64 order = pe / p * (p - 1);
      factors_.push_back({pe, order, dlog_table(pe, primitive_root(p, e), order)});
    }
  if (m > 1) {
    u64 p = m;
    factors_.push_back({p, p - 1, dlog_table(p, primitive_root(p, 1), p - 1)});
  }

  num_characters_ = 1;
  L_ = 1;
  for (const auto& f : factors_) {
    num_characters_ *= f.order;
    L_ = std::lcm(L_, f.order);
  }
  angle_scale_.reserve(factors_.size());
  for (const auto& f : factors_) angle_scale_.push_back(L_ / f.order);

  roots_.resize(L_);
  for (u64 j = 0; j < L_; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(L_);
    roots_[j] = cplx(std::cos(theta), std::sin(theta));
  }
}

std::vector<u64> CharacterGroup::index_coefficients(u64 index) const {
  if (index >= num_characters_)
    throw std::invalid_argument("character index out of range");
  std::vector<u64> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    c[i] = index % factors_[i].order;
    index /= factors_[i].order;
  }
  return c;
}

std::optional<u64> CharacterGroup::angle_numerator(u64 index, u64 n) const {
  if (index >= num_characters_)
    throw std::invalid_argument("character index out of range");
  if (q_ == 1) return 0;
  u64 r = n % q_;
  if (std::gcd(r, q_) != 1) return std::nullopt;
  u64 a = 0;
  u64 idx = index;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    u64 ci = idx % f.order;
    idx /= f.order;
    u64 residue = r % f.prime_power;
    u32 k = f.dlog[residue];
    if (k == ~0u) return std::nullopt;
    a = (a + (unsigned __int128)ci * k % L_ * angle_scale_[i]) % L_;
  }
  return a;
}

cplx CharacterGroup::value(u64 index, u64 n) const {
  auto a = angle_numerator(index, n);
  if (!a) return cplx(0.0, 0.0);
  return roots_[*a];
}

u64 CharacterGroup::conductor(u64 index) const {
  if (index >= num_characters_)
    throw std::invalid_argument("character index out of range");
  // Smallest d | q with chi trivial on {n = 1 (mod d), (n, q) = 1}.
  for (u64 d = 1; d <= q_; ++d) {
    if (q_ % d != 0) continue;
    bool trivial = true;
    for (u64 n = 1 + d; n <= q_; n += d) {
      if (std::gcd(n, q_) != 1) continue;
      auto a = angle_numerator(index, n);
      if (!a || *a != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) return d;
  }
  return q_;
}

std::vector<DirichletCharacter> primitive_characters_up_to(u64 bound) {
  std::vector<DirichletCharacter> out;
  for (u64 q = 1; q <= bound; ++q) {
    auto group = std::make_shared<const CharacterGroup>(q);
    for (u64 idx = 0; idx < group->size(); ++idx)
      if (group->conductor(idx) == q) out.emplace_back(group, idx);
  }
  return out;
}

}  // namespace mfcorr
