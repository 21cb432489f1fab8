#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k3bm;

TEST(LocalField, PlaceOrderingAndValidation) {
  EXPECT_LT(Place::real(), Place::finite(2));
  EXPECT_LT(Place::finite(3), Place::finite(5));
  EXPECT_THROW(Place::finite(9), DomainError);
  EXPECT_EQ(Place::real().name(), "R");
}

TEST(LocalField, PadicSquareAgainstBruteForce) {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long a = -150; a <= 150; ++a) {
      if (a == 0) continue;
      ASSERT_EQ(padic_square(Rational(a), BigInt(p)), oracle::brute_padic_square(a, p)) << a << " at " << p;
    }
  }
  EXPECT_THROW(padic_square(Rational(0), BigInt(3)), DomainError);
}

TEST(LocalField, PadicSquareOfRationals) {
  // n/d is a square iff n d is.
  for (long n : {17L, -7L, 9L, 12L, 50L})
    for (long d : {1L, 2L, 8L, 3L, 49L})
      for (long p : {2L, 3L, 7L}) ASSERT_EQ(padic_square(Rational(n, d), p), padic_square(Rational(n * d), p));
}

TEST(LocalField, ExampleLocalPointValuesAreSquares) {
  EXPECT_TRUE(padic_square(Rational(57872), 2));  // 2^4 * 3617, 3617 = 1 mod 8
  EXPECT_TRUE(is_local_square(Rational(736256), Place::real()));
  EXPECT_FALSE(is_local_square(Rational(-1), Place::real()));
}

TEST(LocalField, KnownSymbols) {
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::real()), Invariant::one_half());
  EXPECT_EQ(hilbert_symbol(-1, 1, Place::real()), Invariant::zero());
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::finite(2)), Invariant::one_half());
  EXPECT_EQ(hilbert_symbol(2, 3, Place::finite(3)), Invariant::one_half());
  EXPECT_EQ(hilbert_symbol(2, 3, Place::finite(2)), Invariant::one_half());
  EXPECT_EQ(hilbert_symbol(2, 7, Place::finite(2)), Invariant::zero());
  EXPECT_EQ(hilbert_symbol(5, 5, Place::finite(5)), Invariant::zero());  // (5, -1) with -1 = 4^2 mod 5
  EXPECT_EQ(hilbert_symbol(3, 3, Place::finite(3)), Invariant::one_half());
}

TEST(LocalField, SteinbergAndBilinearity) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> v(-60, 60);
  for (int i = 0; i < 300; ++i) {
    long a = 0, b = 0, c = 0;
    while (a == 0 || a == 1) a = v(rng);
    while (b == 0) b = v(rng);
    while (c == 0) c = v(rng);
    for (long p : {2L, 3L, 5L, 7L}) {
      const Place pl = Place::finite(p);
      ASSERT_EQ(hilbert_symbol(a, 1 - a, pl), Invariant::zero());
      ASSERT_EQ(hilbert_symbol(a, -a, pl), Invariant::zero());
      ASSERT_EQ(hilbert_symbol(a, b, pl), hilbert_symbol(b, a, pl));
      ASSERT_EQ(hilbert_symbol(a, b * c, pl), hilbert_symbol(a, b, pl) + hilbert_symbol(a, c, pl));
    }
  }
}

TEST(LocalField, ProductFormula200Pairs) { EXPECT_EQ(oracle::check_hilbert_product_formula(200, 0x11b), ""); }

TEST(LocalField, SymbolMatchesBruteForceOddPrimes) { EXPECT_EQ(oracle::check_hilbert_against_brute_force(0x2c), ""); }
