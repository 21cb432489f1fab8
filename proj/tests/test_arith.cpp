#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k3bm;

namespace {

bool trial_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Arith, ParseIgnoresWhitespace) {
  EXPECT_EQ(parse_bigint("12 34\n56"), BigInt(123456));
  EXPECT_EQ(parse_bigint("-0017"), BigInt(-17));
  EXPECT_THROW(parse_bigint("12a"), DomainError);
  EXPECT_THROW(parse_bigint(""), DomainError);
  EXPECT_EQ(to_decimal(BigInt(-42)), "-42");
}

TEST(Arith, Rationals) {
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(Rational(-7, 3)), "-7/3");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
}

TEST(Arith, Valuations) {
  EXPECT_EQ(valuation(BigInt(57872), BigInt(2)), 4u);
  EXPECT_EQ(valuation(Rational(9, 250), BigInt(5)), -3);
  EXPECT_EQ(valuation(Rational(9, 250), BigInt(3)), 2);
  EXPECT_THROW(valuation(BigInt(0), BigInt(3)), DomainError);
}

TEST(Arith, SieveMatchesTrialDivision) {
  const auto ps = primes_up_to(5000);
  std::vector<std::uint32_t> want;
  for (unsigned long n = 0; n <= 5000; ++n)
    if (trial_prime(n)) want.push_back(static_cast<std::uint32_t>(n));
  EXPECT_EQ(ps, want);
}

TEST(Arith, ProbablePrimeMatchesTrialDivisionBelow20000) {
  EXPECT_THROW(probable_prime(BigInt(1)), DomainError);
  for (unsigned long n = 2; n < 20000; ++n) ASSERT_EQ(probable_prime(BigInt(n)), trial_prime(n)) << n;
}

TEST(Arith, ProbablePrimeRejectsPseudoprimes) {
  // Carmichael numbers and strong pseudoprimes to small bases.
  for (const char* n : {"561", "41041", "825265", "2047", "3215031751", "3825123056546413051",
                        "318665857834031151167461"})
    EXPECT_FALSE(probable_prime(parse_bigint(n))) << n;
  BigInt m127 = 1;
  m127 <<= 127;
  EXPECT_TRUE(probable_prime(m127 - 1));
  EXPECT_FALSE(probable_prime(m127 + 1));
}

TEST(Arith, ProbablePrimeOnExamplePrimes) {
  const auto fx = oracle::example();
  EXPECT_TRUE(probable_prime(fx.large_prime));
  EXPECT_TRUE(probable_prime(fx.gcd));
  EXPECT_FALSE(probable_prime(fx.large_prime * fx.gcd));
  EXPECT_EQ(to_decimal(fx.large_prime).size(), 66u);
}

TEST(Arith, StripSmallFactorsReproducesExample) {
  const auto fx = oracle::example();
  const auto sm = strip_small_factors(fx.m, 1000000);
  const auto sn = strip_small_factors(fx.n, 1000000);
  EXPECT_EQ(sm.factors, fx.m_small);
  EXPECT_EQ(sn.factors, fx.n_small);
  EXPECT_EQ(to_decimal(sm.cofactor).size(), 318u);
  EXPECT_EQ(to_decimal(sn.cofactor).size(), 290u);
  EXPECT_EQ(product(sm.factors) * sm.cofactor, fx.m);
  // cofactor has no prime factor below the bound
  for (std::uint32_t p : primes_up_to(1000000)) ASSERT_EQ(mpz_divisible_ui_p(sm.cofactor.get_mpz_t(), p), 0) << p;
}

TEST(Arith, CofactorGcdAgreesWithGmp) {
  gmp_randclass r(gmp_randinit_default);
  r.seed(11);
  for (int i = 0; i < 200; ++i) {
    const BigInt g = r.get_z_bits(64) + 1;
    const BigInt a = g * r.get_z_bits(200), b = g * r.get_z_bits(150);
    BigInt want;
    mpz_gcd(want.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    ASSERT_EQ(cofactor_gcd(a, b), want);
  }
  EXPECT_THROW(cofactor_gcd(BigInt(-4), BigInt(6)), DomainError);
  const auto fx = oracle::example();
  const auto sm = strip_small_factors(fx.m, 1000000);
  const auto sn = strip_small_factors(fx.n, 1000000);
  EXPECT_EQ(cofactor_gcd(sm.cofactor, sn.cofactor), fx.gcd);
  EXPECT_EQ(sm.cofactor, fx.large_prime * fx.large_prime * fx.gcd);
}
