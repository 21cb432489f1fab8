#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>

#include "k3bm/picard.hpp"

namespace k3bm {

namespace {

constexpr int kDeg = 22;
constexpr long double kTol = 1e-6L;
const RationalField kQ;

Rational qpow(const BigInt& q, int e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(r) : Rational(1) / Rational(r);
}

std::vector<Rational> normalize(const std::vector<Rational>& a, const BigInt& q) {
  std::vector<Rational> b(kDeg + 1);
  for (int i = 0; i <= kDeg; ++i) b[i] = a[i] * qpow(q, i - kDeg);
  return b;
}

long double to_ld(const Rational& r);

Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, 1> monic_roots(const std::vector<Rational>& monic_low_first) {
  const int n = static_cast<int>(monic_low_first.size()) - 1;
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> comp =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -to_ld(monic_low_first[i]);
  Eigen::EigenSolver<decltype(comp)> solver(comp, false);
  return solver.eigenvalues();
}

long double to_ld(const Rational& r) {
  return static_cast<long double>(r.get_num().get_d()) / static_cast<long double>(r.get_den().get_d());
}

// K(u) = sum_{k=1}^{11} b_{11+k} V_k(u) with V_k(t + 1/t) = t^k + t^-k.
std::vector<Rational> palindromic_tail(const std::vector<Rational>& b) {
  std::vector<std::vector<Rational>> V(12);
  V[0] = {2};
  V[1] = {0, 1};
  for (int k = 1; k < 11; ++k) {
    std::vector<Rational> next(k + 2, 0);
    for (int i = 0; i <= k; ++i) next[i + 1] += V[k][i];
    for (std::size_t i = 0; i < V[k - 1].size(); ++i) next[i] -= V[k - 1][i];
    V[k + 1] = next;
  }
  std::vector<Rational> K(12, 0);
  for (int k = 1; k <= 11; ++k)
    for (std::size_t i = 0; i < V[k].size(); ++i) K[i] += b[11 + k] * V[k][i];
  return K;
}

long double eval_ld(const std::vector<Rational>& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_ld(*it);
  return acc;
}

struct Interval {
  bool feasible = false;
  long double lo = 0, hi = 0;
};

// Values c = b_11 for which c + K(u) has all 11 roots in [-2, 2].
Interval middle_interval(const std::vector<Rational>& b) {
  const auto K = palindromic_tail(b);
  const auto dK = poly_derivative(kQ, trim(kQ, UniPoly<Rational>(K)));
  // Repeated critical points are listed with multiplicity; for a real-rooted
  // H they must be multiple roots, which the alternation then enforces.
  const auto sqf = squarefree_decomposition(kQ, dK);
  std::vector<long double> u;
  for (const auto& [factor, mult] : sqf.factors) {
    const auto m = poly_monic(kQ, factor);
    if (m.degree() < 1) continue;
    const auto roots = monic_roots(m.coeffs);
    for (int i = 0; i < roots.size(); ++i) {
      if (std::abs(roots[i].imag()) > kTol) return {};
      if (std::abs(roots[i].real()) > 2 + kTol) return {};
      for (unsigned j = 0; j < mult; ++j) u.push_back(roots[i].real());
    }
  }
  std::sort(u.begin(), u.end());
  Interval iv;
  iv.lo = -eval_ld(K, 2);
  iv.hi = -eval_ld(K, -2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const long double v = -eval_ld(K, u[i]);
    if (i % 2 == 0)
      iv.lo = std::max(iv.lo, v);  // local maximum: c + K >= 0
    else
      iv.hi = std::min(iv.hi, v);  // local minimum: c + K <= 0
  }
  const long double slack = kTol * std::max<long double>(1, std::abs(iv.lo) + std::abs(iv.hi));
  iv.feasible = iv.lo <= iv.hi + slack;
  return iv;
}

bool all_integral(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

std::vector<Rational> assemble(const std::vector<Rational>& upper, int sign, const Rational& middle, const BigInt& q) {
  std::vector<Rational> a(kDeg + 1);
  for (int i = 12; i <= kDeg; ++i) a[i] = upper[i];
  a[11] = middle;
  for (int i = 0; i <= 10; ++i) a[i] = Rational(sign) * qpow(q, kDeg - 2 * i) * a[kDeg - i];
  return a;
}

unsigned phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

std::vector<Rational> lefschetz_power_sums(const std::vector<BigInt>& counts, const BigInt& q) {
  std::vector<Rational> t;
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    BigInt q2n;
    mpz_pow_ui(q2n.get_mpz_t(), q.get_mpz_t(), 2 * n);
    t.emplace_back(counts[n - 1] - 1 - q2n);
  }
  return t;
}

bool weil_conform(const std::vector<Rational>& normalized) {
  UniPoly<Rational> g = trim(kQ, UniPoly<Rational>(normalized));
  if (g.degree() <= 0) return g.degree() == 0;
  const auto s = poly_monic(kQ, squarefree_part(kQ, g));
  if (s.degree() == 0) return true;
  const auto roots = monic_roots(s.coeffs);
  for (int i = 0; i < roots.size(); ++i)
    if (std::abs(std::abs(roots[i]) - 1.0L) > kTol) return false;
  return true;
}

FrobeniusData frobenius_charpoly(const std::vector<Rational>& t, const BigInt& q) {
  const int k = static_cast<int>(t.size());
  if (k < 10) throw DomainError("frobenius_charpoly needs at least N_1..N_10");
  if (q < 2) throw DomainError("frobenius_charpoly: bad q");
  // Newton's identities: m e_m = sum_{i=1}^m (-1)^{i-1} e_{m-i} t_i.
  const int known = std::min(k, kDeg);
  std::vector<Rational> e(known + 1);
  e[0] = 1;
  for (int m = 1; m <= known; ++m) {
    Rational s = 0;
    for (int i = 1; i <= m; ++i) s += ((i % 2) ? 1 : -1) * e[m - i] * t[i - 1];
    e[m] = s / m;
  }
  std::vector<Rational> upper(kDeg + 1, 0);  // a_{22-m} = (-1)^m e_m
  for (int m = 0; m <= known; ++m) upper[kDeg - m] = (m % 2 ? -1 : 1) * e[m];

  struct Candidate {
    int sign;
    std::vector<Rational> a;
  };
  std::vector<Candidate> passing;
  bool middle_open = false;

  auto consistent_with_newton = [&](const std::vector<Rational>& a) {
    for (int m = 11; m <= known; ++m)
      if (a[kDeg - m] != upper[kDeg - m]) return false;
    return true;
  };
  auto consider = [&](int sign, const Rational& middle) {
    auto a = assemble(upper, sign, middle, q);
    if (!consistent_with_newton(a)) return;
    if (weil_conform(normalize(a, q))) passing.push_back({sign, std::move(a)});
  };

  consider(-1, 0);
  if (known >= 11) {
    consider(+1, upper[11]);
  } else {
    // The functional equation leaves a_11 free for the + sign.
    std::vector<Rational> b(kDeg + 1, 0);
    for (int i = 12; i <= kDeg; ++i) b[i] = upper[i] * qpow(q, i - kDeg);
    const Interval iv = middle_interval(b);
    if (iv.feasible) {
      if (!all_integral(t)) {
        middle_open = true;
      } else {
        const long double scale = to_ld(qpow(q, 11));
        const long double slack = 1e-3L;
        BigInt lo(static_cast<double>(std::ceil(iv.lo * scale - slack)));
        BigInt hi(static_cast<double>(std::floor(iv.hi * scale + slack)));
        if (hi - lo >= 4) {
          middle_open = true;
        } else {
          for (BigInt m = lo; m <= hi; ++m) consider(+1, Rational(m));
        }
      }
    }
  }
  const bool minus = std::any_of(passing.begin(), passing.end(), [](const Candidate& c) { return c.sign < 0; });
  const bool plus = middle_open || std::any_of(passing.begin(), passing.end(), [](const Candidate& c) { return c.sign > 0; });
  if (!minus && !plus)
    throw VerificationFailure("charpoly", "count series inconsistent: no sign gives roots of modulus q");
  if (minus && plus) throw Inconclusive("charpoly", "sign ambiguous, need N_11");
  if (passing.size() != 1) throw Inconclusive("charpoly", "middle coefficient undetermined, need N_11");
  FrobeniusData fd;
  fd.q = q;
  fd.power_sums = t;
  fd.sign = passing.front().sign;
  fd.a = std::move(passing.front().a);
  fd.normalized = normalize(fd.a, q);
  return fd;
}

FrobeniusData frobenius_charpoly(const CountSeries& counts) {
  return frobenius_charpoly(lefschetz_power_sums(counts.counts, counts.p), counts.p);
}

std::vector<unsigned> cyclotomic_sieve_range() {
  std::vector<unsigned> out;
  // phi(d) >= sqrt(d / 2), so phi(d) <= 22 forces d <= 968.
  for (unsigned d = 1; d <= 968; ++d)
    if (phi(d) <= static_cast<unsigned>(kDeg)) out.push_back(d);
  return out;
}

std::vector<Rational> cyclotomic(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic: d must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, UniPoly<Rational>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second.coeffs;
  }
  UniPoly<Rational> r = poly_sub(kQ, monomial_poly(kQ, Rational(1), d), constant_poly(kQ, Rational(1)));
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) r = poly_div_exact(kQ, r, UniPoly<Rational>(cyclotomic(e)));
  std::lock_guard lock(mu);
  cache.emplace(d, r);
  return r.coeffs;
}

unsigned unit_root_bound(const std::vector<Rational>& normalized) {
  UniPoly<Rational> g = trim(kQ, UniPoly<Rational>(normalized));
  if (g.is_zero()) throw DomainError("unit_root_bound of the zero polynomial");
  unsigned bound = 0;
  for (unsigned d : cyclotomic_sieve_range()) {
    const UniPoly<Rational> c(cyclotomic(d));
    while (g.degree() >= c.degree()) {
      auto [quo, rem] = poly_divrem(kQ, g, c);
      if (!rem.is_zero()) break;
      g = std::move(quo);
      bound += phi(d);
    }
  }
  return bound;
}

unsigned unit_root_bound(const FrobeniusData& fd) { return unit_root_bound(fd.normalized); }

}  // namespace k3bm
