#include "mfcorr/pretense.hpp"

#include <algorithm>
#include <cmath>

#include "mfcorr/dirichlet.hpp"

namespace mfcorr {

namespace {

constexpr double kUnitSlack = 1.0 + 1e-9;
constexpr u64 kGridBudget = 1'000'000;
constexpr int kRotationBlock = 64;  // fixed, so results ignore thread count

void check_unit_disc(const cplx& v, const char* who) {
  if (std::abs(v) > kUnitSlack)
    throw std::invalid_argument(std::string(who) +
                                ": values must lie in the closed unit disc");
}

struct Candidate {
  double d2 = std::numeric_limits<double>::infinity();
  u64 conductor = ~u64{0};
  double abs_t = 0.0;
  double t = 0.0;
  u64 index = 0;

  bool better_than(const Candidate& o) const {
    if (d2 != o.d2) return d2 < o.d2;
    if (conductor != o.conductor) return conductor < o.conductor;
    if (abs_t != o.abs_t) return abs_t < o.abs_t;
    if (t != o.t) return t < o.t;
    return index < o.index;
  }
};

}  // namespace

double distance_squared(const MultiplicativeFunction& f,
                        const MultiplicativeFunction& g, u64 x,
                        const PrimeTable& table) {
  if (x > table.limit())
    throw std::invalid_argument("distance_squared: x exceeds table limit");
  double s = 0.0;
  for (u64 p : table.primes()) {
    if (p > x) break;
    cplx fv = f.at_prime(p);
    cplx gv = g.at_prime(p);
    check_unit_disc(fv, "distance_squared");
    check_unit_disc(gv, "distance_squared");
    s += (1.0 - (fv * std::conj(gv)).real()) / static_cast<double>(p);
  }
  return s;
}

NitProfile nit_distance_profile(double t, u64 x, const PrimeTable& table) {
  if (x > table.limit())
    throw std::invalid_argument("nit_distance_profile: x exceeds table limit");
  double measured = 0.0;
  for (u64 p : table.primes()) {
    if (p > x) break;
    measured +=
        (1.0 - std::cos(t * std::log(static_cast<double>(p)))) / static_cast<double>(p);
  }
  double logx = std::log(static_cast<double>(x));
  double predicted;
  if (t == 0.0)
    predicted = 0.0;
  else if (std::abs(t) <= 10.0)
    predicted = std::log(1.0 + std::abs(t) * logx);
  else
    predicted = std::log(logx) / 3.0;
  return {measured, predicted};
}

PretenseResult best_pretender(const MultiplicativeFunction& f, u64 x,
                              const PretenderOptions& opts,
                              const PrimeTable& table) {
  if (x > table.limit())
    throw std::invalid_argument("best_pretender: x exceeds table limit");
  if (opts.conductor_bound > 50)
    throw budget_error("best_pretender: conductor bound capped at 50");
  if (!(opts.t_step > 0.0) || opts.t_max < 0.0)
    throw std::invalid_argument("best_pretender: bad t grid");
  i64 half = static_cast<i64>(std::floor(opts.t_max / opts.t_step + 0.5));
  u64 grid = static_cast<u64>(2 * half + 1);
  if (grid > kGridBudget)
    throw budget_error(
        "best_pretender: t grid exceeds the 10^6-point search budget");

  // Prime data shared by all candidates.
  std::vector<u64> primes;
  std::vector<double> logp, invp;
  std::vector<cplx> fval;
  for (u64 p : table.primes()) {
    if (p > x) break;
    cplx v = f.at_prime(p);
    check_unit_disc(v, "best_pretender");
    primes.push_back(p);
    logp.push_back(std::log(static_cast<double>(p)));
    invp.push_back(1.0 / static_cast<double>(p));
    fval.push_back(v);
  }
  size_t np = primes.size();

  auto characters = primitive_characters_up_to(std::max<u64>(opts.conductor_bound, 1));
  size_t nc = characters.size();
  std::vector<Candidate> per_char(nc);

  // D^2(f, psi n^{it}) = sum_{p不|q} 1/p - Re sum_p w_p e^{-i t log p},
  // w_p = f(p) conj(psi(p)) / p. The t-grid is swept with unit-rotation
  // updates inside fixed blocks, re-anchored at block starts.
  parallel_blocks(
      nc, 1,
      [&](u64 ci, u64, u64) {
        const auto& chi = characters[ci];
        std::vector<cplx> w(np);
        std::vector<char> used(np);
        double p1 = 0.0;
        for (size_t i = 0; i < np; ++i) {
          cplx cv = chi.value(primes[i]);
          if (cv == cplx(0.0, 0.0)) {
            used[i] = 0;
            w[i] = 0.0;
            continue;
          }
          used[i] = 1;
          p1 += invp[i];
          w[i] = fval[i] * std::conj(cv) * invp[i];
        }

        Candidate best;
        std::vector<cplx> state(np), stepm(np);
        for (i64 k0 = -half; k0 <= half; k0 += kRotationBlock) {
          double t0 = static_cast<double>(k0) * opts.t_step;
          for (size_t i = 0; i < np; ++i) {
            double a0 = -t0 * logp[i];
            state[i] = cplx(std::cos(a0), std::sin(a0));
            double da = -opts.t_step * logp[i];
            stepm[i] = cplx(std::cos(da), std::sin(da));
          }
          i64 kend = std::min(half, k0 + kRotationBlock - 1);
          for (i64 k = k0; k <= kend; ++k) {
            cplx acc(0.0, 0.0);
            for (size_t i = 0; i < np; ++i) {
              if (used[i]) acc += w[i] * state[i];
              state[i] *= stepm[i];
            }
            double d2 = p1 - acc.real();
            double t = static_cast<double>(k) * opts.t_step;
            Candidate cand{d2, chi.conductor(), std::abs(t), t, chi.index()};
            if (cand.better_than(best)) best = cand;
          }
        }
        per_char[ci] = best;
      },
      worker_threads());

  Candidate best;
  for (const auto& c : per_char)
    if (c.better_than(best)) best = c;

  // Sanity: the distance cannot exceed 2 * sum 1/p.
  double cap = 0.0;
  for (double ip : invp) cap += ip;
  if (best.d2 > 2.0 * cap + 1e-6)
    throw std::logic_error("best_pretender: distance exceeds trivial bound");

  return {best.d2, best.t, best.conductor, best.index};
}

}  // namespace mfcorr
