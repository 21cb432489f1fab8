#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k3bm;

namespace {

const IntegerRing Z;

QuadricSextet random_sextet(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::array<std::array<BigInt, 6>, 6> rows;
  for (auto& r : rows)
    for (auto& x : r) x = c(rng);
  return QuadricSextet::from_coefficients(rows);
}

// W(x, y) = sum_k q_k(x) m_k(y), m = (y0^2, y0y1, y0y2, y1^2, y1y2, y2^2).
BigInt bidegree_value(const QuadricSextet& q, const std::array<BigInt, 3>& x, const std::array<BigInt, 3>& y) {
  const std::array<BigInt, 6> m{y[0] * y[0], y[0] * y[1], y[0] * y[2], y[1] * y[1], y[1] * y[2], y[2] * y[2]};
  BigInt w = 0;
  for (int k = 0; k < 6; ++k) w += evaluate(Z, q.forms[k], x) * m[k];
  return w;
}

}  // namespace

TEST(Surface, BranchSexticMatchesDeterminant) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> pt(-7, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = random_sextet(rng, 20);
    const auto f = branch_sextic(q);
    ASSERT_EQ(f.degree, 6u);
    for (int i = 0; i < 10; ++i) {
      const std::array<BigInt, 3> x{pt(rng), pt(rng), pt(rng)};
      ASSERT_EQ(evaluate(Z, f, x), oracle::branch_by_determinant(q, x));
    }
  }
}

TEST(Surface, ExampleValues) {
  const auto X = oracle::example_surface();
  EXPECT_EQ(evaluate(Z, X.branch, {0, 0, -1}), BigInt(57872));
  EXPECT_EQ(evaluate(Z, X.branch, {-1, -1, 1}), BigInt(1622952));
  EXPECT_EQ(evaluate(Z, X.branch, {-1, -1, -1}), BigInt(736256));
  EXPECT_EQ(evaluate(Z, X.branch, {-1, -1, 0}), BigInt(256575));
  EXPECT_EQ(evaluate(Z, X.branch, {-1, 0, -1}), BigInt(80019));
}

TEST(Surface, ExampleMod3Shape) {
  // f = 2 x1^2 (x0^2 + 2 x0 x1 + 2 x1^2)^2 + (2 x0 + x2) g  mod 3
  const auto X = oracle::example_surface();
  const PrimeField f3(3);
  const auto f = reduce_form(f3, X.branch);
  const auto line = normalize_line(f3, {2, 0, 1});
  const auto r = restrict_to_line(f3, f, line);
  // On 2 x0 + x2 = 0 only the square term survives.
  const auto q = form_from_ints(f3, 2, {1, 2, 0, 2, 0, 0});
  const auto sq = form_mul(f3, form_monomial(f3, BigInt(2), {0, 2, 0}), form_mul(f3, q, q));
  EXPECT_EQ(r.affine.coeffs, restrict_to_line(f3, sq, line).affine.coeffs);
}

TEST(Surface, ExampleHypotheses) {
  const auto q = oracle::example().sextet;
  EXPECT_TRUE(check_real_conditions(q));
  EXPECT_TRUE(check_2adic_conditions(q));
  EXPECT_TRUE(is_smooth_curve(branch_sextic(q)));
  EXPECT_TRUE(is_smooth_mod(branch_sextic(q), 3));
  EXPECT_FALSE(is_smooth_mod(branch_sextic(q), 5));
}

TEST(Surface, ConditionsBreakUnderPerturbation) {
  auto rows = oracle::example().sextet.coefficients();
  auto flipped = rows;
  for (auto& c : flipped[0]) c = -c;  // A positive definite now
  EXPECT_FALSE(check_real_conditions(QuadricSextet::from_coefficients(flipped)));
  auto odd = rows;
  odd[0][1] += 1;  // x0x1 coefficient of A no longer divisible by 8
  EXPECT_FALSE(check_2adic_conditions(QuadricSextet::from_coefficients(odd)));
  auto even = rows;
  even[1][0] += 1;  // B's x0^2 coefficient even
  EXPECT_FALSE(check_2adic_conditions(QuadricSextet::from_coefficients(even)));
}

TEST(Surface, DefinitenessOnDiagonalForms) {
  EXPECT_TRUE(is_positive_definite(form_from_ints(Z, 2, {1, 0, 0, 1, 0, 1})));
  EXPECT_FALSE(is_positive_definite(form_from_ints(Z, 2, {1, 0, 0, -1, 0, 1})));
  EXPECT_FALSE(is_positive_definite(form_from_ints(Z, 2, {1, 2, 0, 1, 0, 1})));  // (x0 + x1)^2 + x2^2
  EXPECT_TRUE(is_negative_definite(form_from_ints(Z, 2, {-2, 1, 0, -2, 1, -2})));
}

TEST(Surface, SwapProjectionExchangesFactors) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> pt(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_sextet(rng, 9);
    const auto s = swap_projection(q);
    EXPECT_EQ(swap_projection(s), q);
    for (int i = 0; i < 5; ++i) {
      const std::array<BigInt, 3> x{pt(rng), pt(rng), pt(rng)}, y{pt(rng), pt(rng), pt(rng)};
      ASSERT_EQ(bidegree_value(s, x, y), bidegree_value(q, y, x));
    }
  }
}

TEST(Surface, SmoothnessOverQ) {
  // Fermat sextic is smooth; a product of two cubics is not.
  EXPECT_TRUE(is_smooth_curve(form_from_ints(Z, 6, [] {
    std::vector<BigInt> c(28, 0);
    c[TernaryForm<BigInt>::index(6, {6, 0, 0})] = 1;
    c[TernaryForm<BigInt>::index(6, {0, 6, 0})] = 1;
    c[TernaryForm<BigInt>::index(6, {0, 0, 6})] = 1;
    return c;
  }())));
  std::mt19937_64 rng(2);
  const auto a = oracle::random_form(rng, 3, 5), b = oracle::random_form(rng, 3, 5);
  EXPECT_FALSE(is_smooth_curve(form_mul(Z, a, b)));
}
