#include "mfcorr/cuspform.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace mfcorr {

namespace {

constexpr u64 kMaxN = 1'000'000;
constexpr char kCacheMagic[8] = {'M', 'F', 'C', 'T', 'A', 'U', '0', '1'};

struct PentagonalTerm {
  u64 exponent;
  int sign;
};

// Euler: prod (1-q^m) = 1 + sum_k (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2}).
// Terms with exponent >= 1 in ascending order, up to `bound`.
std::vector<PentagonalTerm> pentagonal_terms(u64 bound) {
  std::vector<PentagonalTerm> terms;
  for (u64 k = 1;; ++k) {
    u64 g1 = k * (3 * k - 1) / 2;
    u64 g2 = k * (3 * k + 1) / 2;
    int sign = (k % 2 == 1) ? -1 : 1;
    if (g1 > bound) break;
    terms.push_back({g1, sign});
    if (g2 <= bound) terms.push_back({g2, sign});
  }
  return terms;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> comp(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return primes;
}

void verify_invariants(const CuspFormCoefficients& c) {
  if (c.N >= 1 && c.a[1] != 1)
    throw std::logic_error("cusp form coefficients: a(1) != 1");
  mpz_class lhs, rhs, pk1;
  for (u64 p : c.primes) {
    // Deligne, exact: a(p)^2 <= 4 p^{k-1}.
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  c.weight - 1);
    lhs = c.a[p] * c.a[p];
    rhs = 4 * pk1;
    if (lhs > rhs)
      throw std::logic_error("cusp form coefficients: Deligne bound violated");
    // Hecke recursion at all prime powers p^{j+1} <= N.
    u64 pj = p;  // p^j
    mpz_class prev(1), cur(c.a[p]);
    while (pj <= c.N / p) {
      u64 pj1 = pj * p;
      mpz_class expect = c.a[p] * cur - pk1 * prev;
      if (expect != c.a[pj1])
        throw std::logic_error(
            "cusp form coefficients: Hecke recursion violated");
      prev = cur;
      cur = c.a[pj1];
      pj = pj1;
    }
  }
}

void fill_derived(CuspFormCoefficients& c) {
  c.lambda.assign(c.N + 1, 0.0);
  double half = (c.weight - 1) / 2.0;
  for (u64 n = 1; n <= c.N; ++n)
    c.lambda[n] =
        c.a[n].get_d() / std::pow(static_cast<double>(n), half);
  c.primes = primes_up_to(c.N);
  verify_invariants(c);
}

}  // namespace

CuspFormCoefficients delta_coefficients(u64 N, const std::string& cache_path) {
  if (N < 1) throw std::invalid_argument("delta_coefficients: N >= 1");
  if (N > kMaxN)
    throw budget_error("delta_coefficients: N exceeds the 10^6 budget");

  if (!cache_path.empty()) {
    if (auto cached = load_coefficients(cache_path, N)) {
      if (cached->N > N) {
        cached->N = N;
        cached->a.resize(N + 1);
        cached->lambda.clear();
        fill_derived(*cached);
      }
      return *cached;
    }
  }

  u64 M = N - 1;  // tau(n) = [q^{n-1}] prod (1-q^m)^24
  auto terms = pentagonal_terms(M);

  // cur = Euler product series; 23 further sparse multiplications give
  // the 24th power. Output coefficients are independent, so each pass
  // is parallelised over output ranges into a second buffer.
  std::vector<mpz_class> cur(M + 1), next(M + 1);
  cur[0] = 1;
  for (const auto& t : terms) cur[t.exponent] = t.sign;

  for (int pass = 2; pass <= 24; ++pass) {
    parallel_blocks(
        M + 1, 16384,
        [&](u64, u64 begin, u64 end) {
          mpz_class acc;
          for (u64 n = begin; n < end; ++n) {
            acc = cur[n];
            for (const auto& t : terms) {
              if (t.exponent > n) break;
              if (t.sign > 0)
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(),
                        cur[n - t.exponent].get_mpz_t());
              else
                mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(),
                        cur[n - t.exponent].get_mpz_t());
            }
            mpz_swap(next[n].get_mpz_t(), acc.get_mpz_t());
          }
        },
        worker_threads());
    cur.swap(next);
  }

  CuspFormCoefficients c;
  c.weight = 12;
  c.N = N;
  c.a.resize(N + 1);
  for (u64 n = 1; n <= N; ++n) mpz_swap(c.a[n].get_mpz_t(), cur[n - 1].get_mpz_t());
  fill_derived(c);

  if (!cache_path.empty()) save_coefficients(c, cache_path);
  return c;
}

double deligne_check(const CuspFormCoefficients& c) {
  mpz_class lhs, pk1;
  double max_ratio = 0.0;
  double half = (c.weight - 1) / 2.0;
  for (u64 p : c.primes) {
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  c.weight - 1);
    lhs = c.a[p] * c.a[p];
    if (lhs > 4 * pk1)
      throw std::logic_error("deligne_check: exact bound violated");
    double ratio = std::abs(c.a[p].get_d()) /
                   (2.0 * std::pow(static_cast<double>(p), half));
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return max_ratio;
}

double rs_pnt_ratio(const CuspFormCoefficients& c, u64 X) {
  if (X > c.N) throw std::invalid_argument("rs_pnt_ratio: X exceeds N");
  double s = 0.0;
  for (u64 p : c.primes) {
    if (p > X) break;
    double l = c.lambda[p];
    s += l * l * std::log(static_cast<double>(p));
  }
  return s / static_cast<double>(X);
}

double dyadic_ne1_logsum(const CuspFormCoefficients& c, u64 y) {
  if (2 * y > c.N)
    throw std::invalid_argument("dyadic_ne1_logsum: 2y exceeds N");
  if (y < 2) throw std::invalid_argument("dyadic_ne1_logsum: y >= 2");
  double s = 0.0;
  bool any = false;
  for (u64 p : c.primes) {
    if (p < y) continue;
    if (p > 2 * y) break;
    any = true;
    if (mpz_cmpabs_ui(c.a[p].get_mpz_t(), 1) != 0)
      s += std::log(static_cast<double>(p));
  }
  if (!any)
    throw std::logic_error("dyadic_ne1_logsum: no primes in [y, 2y]");
  return s;
}

Ne1ReciprocalResult ne1_reciprocal_sum(const CuspFormCoefficients& c, u64 x) {
  if (x > c.N) throw std::invalid_argument("ne1_reciprocal_sum: x exceeds N");
  double s = 0.0;
  for (u64 p : c.primes) {
    if (p > x) break;
    if (mpz_cmpabs_ui(c.a[p].get_mpz_t(), 1) != 0)
      s += 1.0 / static_cast<double>(p);
  }
  double prediction =
      std::log(std::log(static_cast<double>(x))) / (10.0 * std::log(2.0));
  return {s, prediction};
}

void save_coefficients(const CuspFormCoefficients& c,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file: " + path);
  out.write(kCacheMagic, 8);
  u32 version = 1, weight = c.weight;
  u64 n = c.N;
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&weight), 4);
  out.write(reinterpret_cast<const char*>(&n), 8);
  std::vector<unsigned char> buf;
  for (u64 i = 1; i <= c.N; ++i) {
    const mpz_class& v = c.a[i];
    size_t bytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (v == 0) bytes = 0;
    buf.resize(bytes);
    size_t written = 0;
    if (bytes > 0)
      mpz_export(buf.data(), &written, -1, 1, -1, 0, v.get_mpz_t());
    std::int32_t len = static_cast<std::int32_t>(written);
    if (sgn(v) < 0) len = -len;
    out.write(reinterpret_cast<const char*>(&len), 4);
    if (written > 0)
      out.write(reinterpret_cast<const char*>(buf.data()),
                static_cast<std::streamsize>(written));
  }
}

std::optional<CuspFormCoefficients> load_coefficients(const std::string& path,
                                                      u64 min_N) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kCacheMagic, 8) != 0) return std::nullopt;
  u32 version = 0, weight = 0;
  u64 n = 0;
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&weight), 4);
  in.read(reinterpret_cast<char*>(&n), 8);
  if (!in || version != 1 || n < min_N || n > kMaxN) return std::nullopt;
  CuspFormCoefficients c;
  c.weight = weight;
  c.N = n;
  c.a.resize(n + 1);
  std::vector<unsigned char> buf;
  for (u64 i = 1; i <= n; ++i) {
    std::int32_t len = 0;
    in.read(reinterpret_cast<char*>(&len), 4);
    if (!in) return std::nullopt;
    size_t bytes = static_cast<size_t>(len < 0 ? -len : len);
    if (bytes > 0) {
      buf.resize(bytes);
      in.read(reinterpret_cast<char*>(buf.data()),
              static_cast<std::streamsize>(bytes));
      if (!in) return std::nullopt;
      mpz_import(c.a[i].get_mpz_t(), bytes, -1, 1, -1, 0, buf.data());
      if (len < 0) c.a[i] = -c.a[i];
    }
  }
  fill_derived(c);
  return c;
}

MultiplicativeFunction mf_hecke_delta(
    std::shared_ptr<const CuspFormCoefficients> coeffs) {
  std::ostringstream name;
  name << "hecke_delta(N=" << coeffs->N << ")";
  return {name.str(),
          [coeffs](u64 p, u32 k) {
            if (p > coeffs->N)
              throw std::invalid_argument(
                  "hecke_delta: prime exceeds computed coefficient range");
            // lambda(p^{j+1}) = lambda(p) lambda(p^j) - lambda(p^{j-1})
            double l1 = coeffs->lambda[p];
            if (k == 1) return cplx(l1, 0.0);
            double prev = 1.0, cur = l1;
            for (u32 j = 1; j < k; ++j) {
              double nxt = l1 * cur - prev;
              prev = cur;
              cur = nxt;
            }
            return cplx(cur, 0.0);
          },
          false, ValueClass::real_valued, false};
}

}  // namespace mfcorr
