#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace k3bm {

using BigInt = mpz_class;
using Rational = mpq_class;

// Decimal strings; embedded whitespace and line breaks are ignored so the
// multi-line printed form of large integers can be pasted verbatim.
BigInt parse_bigint(std::string_view decimal);
std::string to_decimal(const BigInt& n);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// p-adic valuation of a nonzero integer.
unsigned valuation(const BigInt& n, const BigInt& p);
int valuation(const Rational& r, const BigInt& p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);
bool is_small_prime(std::uint64_t n);

// One Miller-Rabin round with the given witness (1 < witness < n-1 assumed
// reduced internally). Returns false iff the witness proves n composite.
bool miller_rabin_round(const BigInt& n, const BigInt& witness);

// Miller-Rabin. For n < 3.3e24 the first 13 prime witnesses make the answer
// exact. Above that, `rounds` witnesses are used: the 13 fixed primes first,
// then pseudo-random ones from a fixed seed, so results are reproducible.
// Error probability for a composite reported as prime is <= 4^-rounds.
bool probable_prime(const BigInt& n, unsigned rounds = 64);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SmallFactorization {
  std::vector<PrimePower> factors;
  BigInt cofactor;
};

// Trial division by all primes <= bound.
SmallFactorization strip_small_factors(const BigInt& n, std::uint32_t bound);

// Plain Euclidean gcd.
BigInt cofactor_gcd(const BigInt& a, const BigInt& b);

BigInt product(const std::vector<PrimePower>& factors);

}  // namespace k3bm
