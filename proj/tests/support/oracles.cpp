#include "oracles.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace k3bm::oracle {

namespace {

const IntegerRing kZ;
const RationalField kQ;

long ipow(long b, unsigned e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(long n) {
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

long totient(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r -= r / p;
  return r;
}

}  // namespace

ExampleFixture example() {
  static const ExampleFixture fx = load_example_fixture();
  return fx;
}

K3Surface example_surface() { return build_k3(example().sextet); }

TernaryForm<BigInt> random_form(std::mt19937_64& rng, unsigned degree, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  TernaryForm<BigInt> f = zero_form(kZ, degree);
  for (auto& x : f.coeffs) x = c(rng);
  return f;
}

BigInt branch_by_determinant(const QuadricSextet& q, const std::array<BigInt, 3>& x) {
  std::array<BigInt, 6> v;
  for (int k = 0; k < 6; ++k) v[k] = evaluate(kZ, q.forms[k], x);
  const BigInt &A = v[0], &B = v[1], &C = v[2], &D = v[3], &E = v[4], &F = v[5];
  // M = [[2A, B, C], [B, 2D, E], [C, E, 2F]], cofactor expansion along row 0
  const BigInt det = 2 * A * (2 * D * 2 * F - E * E) - B * (B * 2 * F - E * C) + C * (B * E - 2 * D * C);
  BigInt half;
  mpz_divexact_ui(half.get_mpz_t(), det.get_mpz_t(), 2);
  return -half;
}

std::uint32_t SmallField::from_int(long v) const { return static_cast<std::uint32_t>(mod(v, p)); }

SmallField small_field(std::uint32_t p, unsigned e) {
  const FqField F(p, e, false);
  SmallField s;
  s.p = p;
  s.q = static_cast<std::uint32_t>(F.order().get_ui());
  std::vector<FqElem> el(s.q);
  for (std::uint32_t i = 0; i < s.q; ++i) el[i] = F.from_index(i);
  s.add.resize(std::size_t(s.q) * s.q);
  s.mul.resize(std::size_t(s.q) * s.q);
  s.neg.resize(s.q);
  s.chi.resize(s.q);
  s.degree.resize(s.q);
  for (std::uint32_t i = 0; i < s.q; ++i) {
    s.neg[i] = static_cast<std::uint32_t>(F.index(F.neg(el[i])));
    for (std::uint32_t j = 0; j < s.q; ++j) {
      s.add[std::size_t(i) * s.q + j] = static_cast<std::uint32_t>(F.index(F.add(el[i], el[j])));
      s.mul[std::size_t(i) * s.q + j] = static_cast<std::uint32_t>(F.index(F.mul(el[i], el[j])));
    }
  }
  const BigInt half = (F.order() - 1) / 2;
  for (std::uint32_t i = 0; i < s.q; ++i) {
    if (i == 0) {
      s.chi[i] = 0;
    } else {
      s.chi[i] = F.pow(el[i], half) == F.one() ? 1 : -1;
    }
    // smallest d | e with a^(p^d) = a
    for (unsigned d = 1; d <= e; ++d) {
      if (e % d) continue;
      if (F.pow(el[i], BigInt(ipow(p, d))) == el[i]) {
        s.degree[i] = d;
        break;
      }
    }
  }
  return s;
}

std::uint32_t eval_form(const SmallField& F, const TernaryForm<BigInt>& f, const std::array<std::uint32_t, 3>& x) {
  std::array<std::vector<std::uint32_t>, 3> pw;
  for (int k = 0; k < 3; ++k) {
    pw[k].push_back(1);
    for (unsigned e = 1; e <= f.degree; ++e) pw[k].push_back(F.mul[std::size_t(pw[k].back()) * F.q + x[k]]);
  }
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const std::uint32_t c = F.from_int(mpz_fdiv_ui(f.coeffs[i].get_mpz_t(), F.p));
    if (c == 0) continue;
    const auto e = TernaryForm<BigInt>::exponents(f.degree, i);
    std::uint32_t m = F.mul[std::size_t(pw[0][e[0]]) * F.q + pw[1][e[1]]];
    m = F.mul[std::size_t(m) * F.q + pw[2][e[2]]];
    m = F.mul[std::size_t(m) * F.q + c];
    acc = F.add[std::size_t(acc) * F.q + m];
  }
  return acc;
}

std::vector<std::array<std::uint32_t, 3>> projective_points(const SmallField& F) {
  std::vector<std::array<std::uint32_t, 3>> out;
  out.push_back({0, 0, 1});
  for (std::uint32_t b = 0; b < F.q; ++b) out.push_back({0, 1, b});
  for (std::uint32_t a = 0; a < F.q; ++a)
    for (std::uint32_t b = 0; b < F.q; ++b) out.push_back({1, a, b});
  return out;
}

std::vector<std::array<std::uint32_t, 3>> brute_singular_points(const SmallField& F, const TernaryForm<BigInt>& f) {
  const std::array<TernaryForm<BigInt>, 3> d{partial(kZ, f, 0), partial(kZ, f, 1), partial(kZ, f, 2)};
  std::vector<std::array<std::uint32_t, 3>> out;
  for (const auto& x : projective_points(F)) {
    if (eval_form(F, f, x) != 0) continue;
    if (eval_form(F, d[0], x) || eval_form(F, d[1], x) || eval_form(F, d[2], x)) continue;
    out.push_back(x);
  }
  return out;
}

BigInt brute_count(const TernaryForm<BigInt>& f, std::uint32_t p, unsigned n) {
  const SmallField F = small_field(p, n);
  long total = 0;
  for (const auto& x : projective_points(F)) total += 1 + F.chi[eval_form(F, f, x)];
  return BigInt(total);
}

Invariant brute_hilbert(long a, long b, long p) {
  const long m = p * p * p;
  std::vector<bool> square(m, false);
  for (long z = 0; z < m; ++z) square[mod(z * z, m)] = true;
  // x a unit (scaled to 1), or x divisible by p and y a unit (scaled to 1);
  // x, y both divisible by p forces z too, which is not primitive.
  for (long y = 0; y < m; ++y)
    if (square[mod(a + b * y * y, m)]) return Invariant::zero();
  for (long x = 0; x < m; x += p)
    if (square[mod(a * x * x + b, m)]) return Invariant::zero();
  return Invariant::one_half();
}

bool brute_padic_square(long a, long p) {
  long v = 0, u = a;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  const long m = ipow(p, static_cast<unsigned>(v + 3));
  for (long x = 0; x < m; ++x) {
    const long x2 = mod(x * x, m);
    if (x2 != mod(a, m)) continue;
    long w = 0, y = x;
    while (y != 0 && y % p == 0) {
      y /= p;
      ++w;
    }
    if (x != 0 && 2 * w == v) return true;
  }
  return false;
}

SyntheticCharpoly synthetic_charpoly(std::mt19937_64& rng, long q) {
  struct Piece {
    std::vector<long> c;  // low first, in t (already scaled by q)
    long d = 0;           // cyclotomic index, 0 for a random pair
    long trace = 0;       // pair t^2 - trace t + q^2
  };
  // Cyclotomic polynomials with phi(d) <= 4, low first.
  const std::map<long, std::vector<long>> phi{{1, {-1, 1}},          {2, {1, 1}},          {3, {1, 1, 1}},
                                              {4, {1, 0, 1}},         {5, {1, 1, 1, 1, 1}}, {6, {1, -1, 1}},
                                              {8, {1, 0, 0, 0, 1}},   {10, {1, -1, 1, -1, 1}},
                                              {12, {1, 0, -1, 0, 1}}};
  const std::vector<long> keys{1, 2, 3, 4, 5, 6, 8, 10, 12};
  std::vector<Piece> pieces;
  unsigned degree = 0;
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<long> tr(-2 * q + 1, 2 * q - 1);
  while (degree < 22) {
    const unsigned left = 22 - degree;
    if (coin(rng) == 0) {
      const long d = keys[pick(rng)];
      const auto& c = phi.at(d);
      const unsigned deg = static_cast<unsigned>(c.size() - 1);
      if (deg > left) continue;
      Piece pc;
      pc.d = d;
      for (unsigned i = 0; i <= deg; ++i) pc.c.push_back(c[i] * ipow(q, deg - i));
      pieces.push_back(pc);
      degree += deg;
    } else {
      if (left < 2) continue;
      long t = tr(rng);
      if (t == 0 || t == q || t == -q) continue;  // those are q times roots of unity
      pieces.push_back({{q * q, -t, 1}, 0, t});
      degree += 2;
    }
  }
  SyntheticCharpoly out;
  out.q = q;
  UniPoly<Rational> acc = constant_poly(kQ, Rational(1));
  int sign = 1;
  for (const auto& pc : pieces) {
    std::vector<Rational> c(pc.c.begin(), pc.c.end());
    acc = poly_mul(kQ, acc, UniPoly<Rational>(c));
    if (pc.d == 1) sign = -sign;
    if (pc.d) out.unit_roots += static_cast<unsigned>(pc.c.size() - 1);
  }
  out.a = acc.coeffs;
  out.sign = sign;
  for (long n = 1; n <= 22; ++n) {
    BigInt qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    BigInt t = 0;
    for (const auto& pc : pieces) {
      if (pc.d) {
        // Ramanujan sum: sum of zeta^n over primitive d-th roots.
        const long g = std::gcd(pc.d, n);
        t += qn * (moebius(pc.d / g) * totient(pc.d) / totient(pc.d / g));
      } else {
        BigInt s0 = 2, s1 = pc.trace;
        for (long k = 1; k < n; ++k) {
          BigInt s2 = pc.trace * s1 - BigInt(q * q) * s0;
          s0 = s1;
          s1 = s2;
        }
        t += s1;
      }
    }
    out.power_sums.emplace_back(t);
  }
  return out;
}

// ---- property suites --------------------------------------------------------

std::string check_hilbert_product_formula(unsigned pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 500);
  for (unsigned i = 0; i < pairs; ++i) {
    long an = 0, bn = 0;
    while (an == 0) an = num(rng);
    while (bn == 0) bn = num(rng);
    const long ad = den(rng), bd = den(rng);
    const Rational a(an, ad), b(bn, bd);
    std::set<long> primes{2};
    for (long x : {an, ad, bn, bd})
      for (long p : prime_divisors(x)) primes.insert(p);
    Invariant sum = hilbert_symbol(a, b, Place::real());
    for (long p : primes) sum = sum + hilbert_symbol(a, b, Place::finite(p));
    if (sum.half) {
      std::ostringstream os;
      os << "product formula fails for (" << to_string(a) << ", " << to_string(b) << ")";
      return os.str();
    }
  }
  return "";
}

std::string check_hilbert_against_brute_force(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-300, 300);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (unsigned i = 0; i < 60; ++i) {
      long a = 0, b = 0;
      while (a == 0 || a % (p * p) == 0) a = val(rng);
      while (b == 0 || b % (p * p) == 0) b = val(rng);
      const Invariant got = hilbert_symbol(Rational(a), Rational(b), Place::finite(p));
      const Invariant want = brute_hilbert(a, b, p);
      if (!(got == want)) {
        std::ostringstream os;
        os << "(" << a << ", " << b << ")_" << p << ": symbol " << got.to_string() << ", brute force "
           << want.to_string();
        return os.str();
      }
    }
  }
  return "";
}

std::string check_naive_vs_orbit(unsigned sextics, unsigned max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < sextics; ++i) {
    const auto f = random_form(rng, 6, 5);
    for (unsigned n = 1; n <= max_n; ++n) {
      const BigInt naive = count_points(f, 3, n, CountStrategy::naive);
      const BigInt orbit = count_points(f, 3, n, CountStrategy::orbit);
      if (naive != orbit) {
        std::ostringstream os;
        os << "sextic " << i << ", n = " << n << ": naive " << naive << ", orbit " << orbit;
        return os.str();
      }
    }
  }
  return "";
}

std::string check_charpoly_round_trip(unsigned cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> qpick(0, 2);
  const long qs[] = {3, 5, 7};
  for (unsigned i = 0; i < cases; ++i) {
    const auto syn = synthetic_charpoly(rng, qs[qpick(rng)]);
    FrobeniusData fd;
    try {
      fd = frobenius_charpoly(syn.power_sums, syn.q);
    } catch (const std::exception& e) {
      return "case " + std::to_string(i) + ": " + e.what();
    }
    if (fd.a != syn.a || fd.sign != syn.sign)
      return "case " + std::to_string(i) + ": reconstructed polynomial differs";
    if (unit_root_bound(fd) != syn.unit_roots)
      return "case " + std::to_string(i) + ": unit-root bound " + std::to_string(unit_root_bound(fd)) +
             ", expected " + std::to_string(syn.unit_roots);
  }
  return "";
}

std::string check_squarefree_reassembly(unsigned cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4), kind(0, 3);
  auto check = [&](const auto& field, const auto& g) -> bool {
    using P = std::decay_t<decltype(g)>;
    const auto dec = squarefree_decomposition(field, g);
    P acc = constant_poly(field, dec.unit);
    std::set<unsigned> mults;
    for (const auto& [fac, m] : dec.factors) {
      if (fac.degree() < 1 || !mults.insert(m).second) return false;
      const P d = poly_derivative(field, fac);
      if (d.is_zero() || poly_gcd(field, fac, d).degree() != 0) return false;
      acc = poly_mul(field, acc, poly_pow(field, fac, m));
    }
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
      for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
        if (poly_gcd(field, dec.factors[i].first, dec.factors[j].first).degree() != 0) return false;
    return trim(field, acc).coeffs == trim(field, g).coeffs;
  };
  for (unsigned i = 0; i < cases; ++i) {
    const int k = kind(rng);
    auto random_poly = [&](auto field) {
      using E = typename decltype(field)::Elem;
      std::vector<E> c;
      const int d = deg(rng) + 1;
      for (int j = 0; j <= d; ++j) c.push_back(field.from_int(coef(rng)));
      c.back() = field.one();
      return trim(field, UniPoly<E>(c));
    };
    if (k < 3) {
      const long p = k == 0 ? 3 : k == 1 ? 5 : 7;
      const PrimeField fp(p);
      auto g = constant_poly(fp, fp.from_int(1 + (i % (p - 1))));
      for (unsigned m = 1; m <= 3; ++m) g = poly_mul(fp, g, poly_pow(fp, random_poly(fp), m));
      if (i % 4 == 0) {
        // a p-th power factor h(x^p)
        const auto h = random_poly(fp);
        std::vector<BigInt> c((h.coeffs.size() - 1) * p + 1, BigInt(0));
        for (std::size_t j = 0; j < h.coeffs.size(); ++j) c[j * p] = h.coeffs[j];
        g = poly_mul(fp, g, UniPoly<BigInt>(c));
      }
      if (!check(fp, g)) return "F_" + std::to_string(p) + " case " + std::to_string(i);
    } else {
      auto g = constant_poly(kQ, Rational(2, 5));
      for (unsigned m = 1; m <= 3; ++m) g = poly_mul(kQ, g, poly_pow(kQ, random_poly(kQ), m));
      if (!check(kQ, g)) return "Q case " + std::to_string(i);
    }
  }
  return "";
}

}  // namespace k3bm::oracle
