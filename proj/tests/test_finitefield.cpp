#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k3bm;

namespace {

bool has_root_mod(const std::vector<long>& c, long p) {
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(FiniteField, SmallestIrreducibleLowDegreeByRootSearch) {
  // Degrees 2 and 3: irreducible iff rootless. Lex order on (c_{n-1}, ..., c_0).
  for (long p : {3L, 5L, 7L, 11L}) {
    for (unsigned n : {2u, 3u}) {
      std::vector<long> want;
      const long total = n == 2 ? p * p : p * p * p;
      for (long k = 0; k < total; ++k) {
        std::vector<long> c(n + 1, 0);
        c[n] = 1;
        long r = k;
        for (int i = 0; i < static_cast<int>(n); ++i) {  // k's digits, most significant is c_{n-1}
          c[i] = r % p;
          r /= p;
        }
        if (!has_root_mod(c, p)) {
          want = c;
          break;
        }
      }
      // The loop above enumerates c_0 fastest, so it follows the same order.
      const auto got = smallest_irreducible(PrimeField(p), n);
      std::vector<long> g;
      for (const auto& x : got) g.push_back(x.get_si());
      EXPECT_EQ(g, want) << "p = " << p << ", n = " << n;
    }
  }
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<BigInt>{1, 0, 1}));
}

TEST(FiniteField, Axioms) {
  std::mt19937_64 rng(1);
  for (auto [p, n] : {std::pair{3, 4}, std::pair{5, 3}, std::pair{7, 2}, std::pair{101, 2}}) {
    const FqField F(p, n);
    for (int i = 0; i < 200; ++i) {
      const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
      ASSERT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
      ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      ASSERT_EQ(F.add(a, F.neg(a)), F.zero());
      if (!F.is_zero(a)) ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
      // x^q = x and the p-th root inverts Frobenius
      ASSERT_EQ(F.pow(a, F.order()), a);
      ASSERT_EQ(F.frobenius(F.pth_root(a)), a);
    }
  }
}

TEST(FiniteField, LogTablesConsistent) {
  const FqField F(3, 5);
  ASSERT_TRUE(F.has_tables());
  const auto& T = F.tables();
  for (std::uint32_t i = 1; i < T.q; ++i) ASSERT_EQ(T.exp_of[T.log_of[i]], i);
  const auto g = F.from_index(T.primitive_index);
  for (std::uint32_t k = 0; k + 1 < T.q; ++k) {
    const auto gk = F.from_index(T.exp_of[k]);
    ASSERT_EQ(gk, F.pow(g, k));
    const auto s = F.add(F.one(), gk);
    const std::uint32_t want = F.is_zero(s) ? T.zero_log() : T.log_of[F.index(s)];
    ASSERT_EQ(T.zech[k], want);
  }
}

TEST(FiniteField, ElementDegreeAndCharacterAgainstBruteForce) {
  for (auto [p, e] : {std::pair{3u, 4u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
    const FqField F(p, e);
    const auto S = oracle::small_field(p, e);
    std::vector<int> square(S.q, -1);
    square[0] = 0;
    for (std::uint32_t x = 1; x < S.q; ++x) square[S.mul[std::size_t(x) * S.q + x]] = 1;
    for (std::uint32_t i = 0; i < S.q; ++i) {
      const auto a = F.from_index(i);
      ASSERT_EQ(F.element_degree(a), S.degree[i]);
      ASSERT_EQ(quadratic_character(F, a), square[i]) << i;
    }
  }
  const PrimeField f5(5);
  EXPECT_EQ(quadratic_character(f5, BigInt(2)), -1);
  EXPECT_EQ(quadratic_character(f5, BigInt(4)), 1);
}

TEST(FiniteField, RootsInFieldMatchEnumeration) {
  std::mt19937_64 rng(4);
  const FqField F(5, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FqElem> c;
    for (int i = 0; i < 5; ++i) c.push_back(F.random(rng));
    c.push_back(F.one());
    const UniPoly<FqElem> g(c);
    std::vector<FqElem> want;
    for (std::uint64_t i = 0; i < 25; ++i)
      if (F.is_zero(poly_eval(F, g, F.from_index(i)))) want.push_back(F.from_index(i));
    std::sort(want.begin(), want.end());
    ASSERT_EQ(roots_in_field(F, g), want);
  }
}

TEST(FiniteField, RootsInExtensions) {
  const PrimeField f3(3);
  // (x^2 + 1)^2 (x - 2) (x^3 - x + 1): degrees 2 (twice), 1, 3
  auto g = poly_mul(f3, poly_pow(f3, make_poly(f3, {1, 0, 1}), 2), make_poly(f3, {-2, 1}));
  g = poly_mul(f3, g, make_poly(f3, {1, -1, 0, 1}));
  const auto r = roots_in_extensions(f3, g, 2);
  EXPECT_EQ(r.unresolved_degree, 3u);
  std::map<unsigned, unsigned> by_degree;
  for (const auto& root : r.roots) {
    ++by_degree[root.degree];
    EXPECT_TRUE(root.field->is_zero(poly_eval(*root.field, lift_poly(*root.field, g), root.value)));
    EXPECT_EQ(root.multiplicity, root.degree == 2 ? 2u : 1u);
  }
  EXPECT_EQ(by_degree[1], 1u);
  EXPECT_EQ(by_degree[2], 2u);
  const auto all = roots_in_extensions(f3, g, 3);
  EXPECT_EQ(all.unresolved_degree, 0u);
  EXPECT_EQ(all.roots.size(), 6u);
}

TEST(FiniteField, ExampleModulus) {
  const FqField F(3, 10);
  EXPECT_TRUE(F.has_tables());
  EXPECT_TRUE(is_irreducible(PrimeField(3), UniPoly<BigInt>(F.modulus())));
  EXPECT_FALSE(is_irreducible(PrimeField(3), make_poly(PrimeField(3), {1, 0, 0, 0, 1})));
}
