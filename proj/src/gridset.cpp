#include "mfcorr/gridset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfcorr {

namespace {

constexpr u64 kGridBlowupLimit = 10'000'000;

// Bit vector over indices [-half, half] with offset addressing.
struct BitRange {
  i64 half = 0;
  std::vector<u64> words;

  explicit BitRange(i64 h) : half(h), words((static_cast<u64>(2 * h) + 64) / 64, 0) {}
  size_t pos(i64 index) const { return static_cast<size_t>(index + half); }
  bool get(i64 index) const {
    if (index < -half || index > half) return false;
    size_t p = pos(index);
    return (words[p >> 6] >> (p & 63)) & 1;
  }
  void set(i64 index) {
    size_t p = pos(index);
    words[p >> 6] |= u64{1} << (p & 63);
  }
};

// dst |= src shifted so that dst[index] collects src[index - shift].
void or_shifted(BitRange& dst, const BitRange& src, i64 shift) {
  i64 offset = shift + dst.half - src.half;  // dst bit pos = src bit pos + offset
  size_t nbits_src = static_cast<size_t>(2 * src.half + 1);
  if (offset < 0) {
    // Only source bits with pos >= -offset land inside dst.
    size_t skip = static_cast<size_t>(-offset);
    if (skip >= nbits_src) return;
    size_t word_shift = skip >> 6;
    unsigned bit_shift = skip & 63;
    size_t n = dst.words.size();
    for (size_t i = 0; i < n; ++i) {
      size_t j = i + word_shift;
      if (j >= src.words.size()) break;
      u64 v = src.words[j] >> bit_shift;
      if (bit_shift && j + 1 < src.words.size())
        v |= src.words[j + 1] << (64 - bit_shift);
      dst.words[i] |= v;
    }
  } else {
    size_t word_shift = static_cast<size_t>(offset) >> 6;
    unsigned bit_shift = static_cast<unsigned>(offset) & 63;
    size_t n = dst.words.size();
    for (size_t j = 0; j < src.words.size(); ++j) {
      size_t i = j + word_shift;
      if (i >= n) break;
      dst.words[i] |= src.words[j] << bit_shift;
      if (bit_shift && i + 1 < n) dst.words[i + 1] |= src.words[j] >> (64 - bit_shift);
    }
  }
  // Mask stray bits above the valid range.
  size_t nbits = static_cast<size_t>(2 * dst.half + 1);
  size_t last = nbits >> 6;
  unsigned rem = nbits & 63;
  if (rem && last < dst.words.size()) dst.words[last] &= (u64{1} << rem) - 1;
  for (size_t i = last + 1; i < dst.words.size(); ++i) dst.words[i] = 0;
}

BitRange to_bits(const GridSet& s) {
  BitRange b(s.half());
  for (i64 i : s.member_indices()) b.set(i);
  return b;
}

}  // namespace

GridSet::GridSet(double bound, double step) : bound_(bound), step_(step) {
  if (!(bound > 0.0) || !(step > 0.0))
    throw std::invalid_argument("GridSet: bound and step must be positive");
  half_ = static_cast<i64>(std::floor(bound / step + 0.5));
  if (half_ < 1) throw std::invalid_argument("GridSet: step too coarse");
  u64 pts = static_cast<u64>(2 * half_ + 1);
  if (pts > kGridBlowupLimit)
    throw budget_error("GridSet: grid exceeds 10^7 points");
  member_.assign(pts, 0);
}

GridSet::GridSet(double step, i64 half) : bound_(step * static_cast<double>(half)), step_(step), half_(half) {
  if (!(step > 0.0) || half < 1)
    throw std::invalid_argument("GridSet: bad explicit grid");
  u64 pts = static_cast<u64>(2 * half_ + 1);
  if (pts > kGridBlowupLimit)
    throw budget_error("GridSet: grid exceeds 10^7 points");
  member_.assign(pts, 0);
}

i64 GridSet::index_of(double alpha) const {
  return static_cast<i64>(std::floor(alpha / step_ + 0.5));
}

bool GridSet::contains(double alpha) const {
  return contains_index(index_of(alpha));
}

u64 GridSet::count() const {
  u64 c = 0;
  for (unsigned char m : member_) c += m;
  return c;
}

bool GridSet::is_symmetric() const {
  for (i64 i = 1; i <= half_; ++i)
    if (contains_index(i) != contains_index(-i)) return false;
  return true;
}

std::vector<i64> GridSet::member_indices() const {
  std::vector<i64> out;
  out.reserve(count());
  for (i64 i = -half_; i <= half_; ++i)
    if (contains_index(i)) out.push_back(i);
  return out;
}

GridSet iterated_sumset(const GridSet& Y, u32 ell) {
  if (ell < 1) throw std::invalid_argument("iterated_sumset: ell >= 1");
  i64 out_half = static_cast<i64>(ell) * Y.half();
  if (static_cast<u64>(2 * out_half + 1) > kGridBlowupLimit)
    throw budget_error("iterated_sumset: grid exceeds 10^7 points");

  auto members = Y.member_indices();
  BitRange cur = to_bits(Y);
  for (u32 j = 2; j <= ell; ++j) {
    BitRange next(static_cast<i64>(j) * Y.half());
    for (i64 y : members) or_shifted(next, cur, y);
    cur = std::move(next);
  }

  GridSet out(Y.step(), out_half);
  for (i64 i = -out_half; i <= out_half; ++i)
    if (cur.get(i)) out.set_index(i);
  return out;
}

bool cover_check(const GridSet& Y, u32 ell) {
  if (Y.count() == 0) throw std::invalid_argument("cover_check: Y is empty");
  if (ell < 1) return false;
  i64 h = Y.half();
  i64 window = 2 * h;  // prefix-rearrangement keeps partial sums here
  auto members = Y.member_indices();

  BitRange cur(window);
  for (i64 y : members) cur.set(y);
  for (u32 j = 2; j <= ell; ++j) {
    BitRange next(window);
    for (i64 y : members) or_shifted(next, cur, y);
    cur = std::move(next);
  }
  for (i64 i = -h; i <= h; ++i)
    if (!cur.get(i)) return false;
  return true;
}

std::optional<u32> minimal_cover_ell(const GridSet& Y, u32 max_ell) {
  if (Y.count() == 0) return std::nullopt;
  if (!Y.contains_zero()) {
    for (u32 l = 1; l <= max_ell; ++l)
      if (cover_check(Y, l)) return l;
    return std::nullopt;
  }
  // Monotone in ell when 0 is a member: exponential probe then bisect.
  u32 hi = 1;
  while (hi <= max_ell && !cover_check(Y, hi)) hi *= 2;
  if (hi > max_ell) {
    if (!cover_check(Y, max_ell)) return std::nullopt;
    hi = max_ell;
  }
  u32 lo = hi / 2 + 1;
  if (hi == 1) return 1;
  while (lo < hi) {
    u32 mid = lo + (hi - lo) / 2;
    if (cover_check(Y, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

SumDecomposer::SumDecomposer(const GridSet& X, u32 k) : x_(X), k_(k) {
  if (k < 1) throw std::invalid_argument("SumDecomposer: k >= 1");
  if (X.count() == 0) throw std::invalid_argument("SumDecomposer: X is empty");
  u64 layer_points = static_cast<u64>(2 * static_cast<i64>(k) * X.half() + 1);
  if (layer_points > kGridBlowupLimit)
    throw budget_error("sum_decompose: grid exceeds 10^7 points");
  members_ = X.member_indices();

  // layers_[j] holds the exact j-fold sumset, j = 1..k, over
  // [-j*half, j*half].
  layers_.resize(k + 1);
  BitRange cur = to_bits(X);
  layers_[1] = cur.words;
  for (u32 j = 2; j <= k; ++j) {
    BitRange next(static_cast<i64>(j) * X.half());
    for (i64 y : members_) or_shifted(next, cur, y);
    layers_[j] = next.words;
    cur = std::move(next);
  }
}

bool SumDecomposer::layer_contains(u32 j, i64 index) const {
  if (j == 0) return index == 0;
  i64 h = static_cast<i64>(j) * x_.half();
  if (index < -h || index > h) return false;
  size_t p = static_cast<size_t>(index + h);
  return (layers_[j][p >> 6] >> (p & 63)) & 1;
}

std::vector<i64> SumDecomposer::decompose_indices(i64 target) const {
  i64 reach = static_cast<i64>(k_) * x_.half();
  if (target < -reach || target > reach)
    throw std::invalid_argument("sum_decompose: beta outside [-kD, kD]");
  if (!layer_contains(k_, target))
    throw std::runtime_error(
        "sum_decompose: no decomposition on the grid (hypothesis violated)");
  std::vector<i64> out;
  out.reserve(k_);
  i64 cur = target;
  for (u32 i = 1; i <= k_; ++i) {
    bool found = false;
    for (i64 y : members_) {
      if (layer_contains(k_ - i, cur - y)) {
        out.push_back(y);
        cur -= y;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("sum_decompose: reachability bookkeeping broke");
  }
  return out;
}

std::vector<double> SumDecomposer::decompose(double beta) const {
  i64 target = x_.index_of(beta);
  auto idx = decompose_indices(target);
  std::vector<double> out;
  out.reserve(idx.size());
  for (i64 i : idx) out.push_back(x_.value_at(i));
  return out;
}

std::vector<double> sum_decompose(double beta, const GridSet& X, u32 k) {
  return SumDecomposer(X, k).decompose(beta);
}

CauchyFit approx_cauchy_fit(const GridFunction& phi) {
  i64 h = phi.half();
  if (h < 1 || phi.values.size() != static_cast<size_t>(2 * h + 1))
    throw std::invalid_argument("approx_cauchy_fit: malformed grid function");
  double B = static_cast<double>(h) * phi.step;
  double c = phi.value_at_index(h) / B;

  double sup = 0.0;
  for (i64 i = -h; i <= h; ++i)
    sup = std::max(sup, std::abs(phi.value_at_index(i) - c * phi.alpha_at_index(i)));

  double K = 0.0;
  for (i64 i = -h; i <= h; ++i) {
    i64 jmax = std::min(h, h - i);
    for (i64 j = std::max(-h, -h - i); j <= jmax; ++j) {
      double defect = phi.value_at_index(i + j) - phi.value_at_index(i) -
                      phi.value_at_index(j);
      K = std::max(K, std::abs(defect));
    }
  }

  double lip = 0.0;
  for (i64 i = -h; i < h; ++i)
    lip = std::max(lip,
                   std::abs(phi.value_at_index(i + 1) - phi.value_at_index(i)) /
                       phi.step);
  return {c, sup, K, 3.0 * lip * phi.step};
}

}  // namespace mfcorr
