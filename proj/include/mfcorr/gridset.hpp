#pragma once

#include <optional>
#include <vector>

#include "mfcorr/util.hpp"

namespace mfcorr {

// Symmetric-range grid subset of [-D, D] with uniform step. Membership
// lives on indices -half..half with alpha = index * step; reals are
// rounded half-up to the nearest grid point. measure() = count * step.
class GridSet {
 public:
  GridSet(double bound, double step);
  // Explicit grid: indices -half..half with the given step.
  GridSet(double step, i64 half);

  double bound() const { return bound_; }
  double step() const { return step_; }
  i64 half() const { return half_; }
  u64 grid_points() const { return static_cast<u64>(2 * half_ + 1); }

  i64 index_of(double alpha) const;
  double value_at(i64 index) const { return static_cast<double>(index) * step_; }

  bool contains_index(i64 index) const {
    if (index < -half_ || index > half_) return false;
    return member_[static_cast<size_t>(index + half_)] != 0;
  }
  void set_index(i64 index, bool v = true) {
    member_[static_cast<size_t>(index + half_)] = v ? 1 : 0;
  }
  bool contains(double alpha) const;

  u64 count() const;
  double measure() const { return static_cast<double>(count()) * step_; }
  bool is_symmetric() const;
  bool contains_zero() const { return contains_index(0); }
  std::vector<i64> member_indices() const;  // ascending

 private:
  double bound_;
  double step_;
  i64 half_;
  std::vector<unsigned char> member_;
};

// {a_1 + ... + a_ell : a_i in Y}, membership exact on the grid,
// carried on [-ell*D, ell*D]. Errors if the result grid would exceed
// 10^7 points.
GridSet iterated_sumset(const GridSet& Y, u32 ell);

// True iff every grid point of [-D, D] lies in the ell-fold sumset.
// Computed with intermediate sums windowed to [-2D, 2D]: any sum of
// elements from [-D, D] landing in [-D, D] can be reordered so all
// partial sums stay in [-2D, 2D], so the window loses nothing.
bool cover_check(const GridSet& Y, u32 ell);

// Smallest ell <= max_ell with cover_check true; nullopt if none.
std::optional<u32> minimal_cover_ell(const GridSet& Y, u32 max_ell);

// Lexicographically smallest (alpha_1, ..., alpha_k), alpha_i in X,
// summing to beta rounded to the grid (so |sum - beta| <= step/2).
// Throws if beta is outside [-kD, kD] or no decomposition exists.
std::vector<double> sum_decompose(double beta, const GridSet& X, u32 k);

// Reusable k-layer reachability for repeated decompositions against a
// fixed set.
class SumDecomposer {
 public:
  SumDecomposer(const GridSet& X, u32 k);
  std::vector<double> decompose(double beta) const;
  std::vector<i64> decompose_indices(i64 target) const;

 private:
  const GridSet x_;
  u32 k_;
  std::vector<i64> members_;
  std::vector<std::vector<u64>> layers_;  // layers_[j]: sums of j members
  bool layer_contains(u32 j, i64 index) const;
};

// Real function sampled on the grid of [-B, B].
struct GridFunction {
  double bound;
  double step;
  std::vector<double> values;  // size 2*half+1, index 0 <-> -B

  i64 half() const { return (static_cast<i64>(values.size()) - 1) / 2; }
  double value_at_index(i64 i) const {
    return values[static_cast<size_t>(i + half())];
  }
  double alpha_at_index(i64 i) const { return static_cast<double>(i) * step; }
};

struct CauchyFit {
  double c;            // phi(B)/B
  double sup_error;    // max |phi(alpha) - c alpha| over the grid
  double witnessed_K;  // max |phi(a+b) - phi(a) - phi(b)| over grid pairs
  double grid_slack;   // 3 * Lip(phi) * step
};

// Fit of a near-additive function by the line through (B, phi(B)).
// Guarantee checked by tests: sup_error <= 3 * witnessed_K + grid_slack.
CauchyFit approx_cauchy_fit(const GridFunction& phi);

}  // namespace mfcorr
