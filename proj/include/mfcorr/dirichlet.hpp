#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mfcorr/util.hpp"

namespace mfcorr {

// The unit group (Z/q)^* decomposed into cyclic factors, with discrete
// logarithm tables per factor. Characters mod q are indexed 0..phi(q)-1
// in mixed radix over the factor orders; index 0 is principal.
//
// Values are carried exactly as exponents a/L with L the group exponent
// denominator, so orthogonality, conjugation and primitivity checks are
// integer arithmetic; complex values are derived from a root table.
class CharacterGroup {
 public:
  explicit CharacterGroup(u64 modulus);

  u64 modulus() const { return q_; }
  u64 size() const { return num_characters_; }
  // Denominator of all character angles: lcm of the factor orders.
  u64 angle_denominator() const { return L_; }

  // Exponent numerator of character `index` at n: chi(n) = e(a/L).
  // Empty when gcd(n, q) > 1 (so chi(n) = 0).
  std::optional<u64> angle_numerator(u64 index, u64 n) const;

  cplx value(u64 index, u64 n) const;

  u64 conductor(u64 index) const;
  bool is_primitive(u64 index) const { return conductor(index) == q_; }

 private:
  struct CyclicFactor {
    u64 prime_power;       // p^e this factor lives mod
    u64 order;             // order of the generator
    std::vector<u32> dlog; // residue mod prime_power -> exponent; ~0u if unit-less
  };

  std::vector<u64> index_coefficients(u64 index) const;

  u64 q_ = 1;
  u64 num_characters_ = 1;
  u64 L_ = 1;
  std::vector<CyclicFactor> factors_;
  std::vector<u64> angle_scale_;  // L_ / factor order
  std::vector<cplx> roots_;       // e(j / L_) for 0 <= j < L_
};

// A single Dirichlet character: shared group plus index. Cheap to copy.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, u64 index)
      : group_(std::move(group)), index_(index) {}

  u64 modulus() const { return group_->modulus(); }
  u64 index() const { return index_; }
  cplx value(u64 n) const { return group_->value(index_, n); }
  std::optional<u64> angle_numerator(u64 n) const {
    return group_->angle_numerator(index_, n);
  }
  u64 angle_denominator() const { return group_->angle_denominator(); }
  u64 conductor() const { return group_->conductor(index_); }
  bool is_principal() const { return index_ == 0; }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  u64 index_;
};

// All primitive characters with conductor <= bound, ordered by
// (conductor, index). Includes the conductor-1 trivial character.
std::vector<DirichletCharacter> primitive_characters_up_to(u64 bound);

}  // namespace mfcorr
