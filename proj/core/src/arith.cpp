#include "k3bm/arith.hpp"

#include <algorithm>
#include <cctype>

#include "k3bm/error.hpp"

namespace k3bm {

BigInt parse_bigint(std::string_view decimal) {
  std::string digits;
  digits.reserve(decimal.size());
  for (char c : decimal) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '\\') continue;  // LaTeX line continuations in pasted values
    digits.push_back(c);
  }
  if (digits.empty()) throw DomainError("empty integer literal");
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size() ||
      !std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw DomainError("not a decimal integer: " + std::string(decimal));
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator");
  Rational r(parse_bigint(text.substr(0, slash)), den);
  r.canonicalize();
  return r;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero");
  BigInt m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& r, const BigInt& p) {
  return static_cast<int>(valuation(r.get_num(), p)) - static_cast<int>(valuation(r.get_den(), p));
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool miller_rabin_round(const BigInt& n, const BigInt& witness) {
  BigInt a = witness % n;
  if (a < 0) a += n;
  if (a <= 1 || a == n - 1) return true;
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

namespace {
constexpr unsigned kFixedWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
}

bool probable_prime(const BigInt& n, unsigned rounds) {
  if (n <= 1) throw DomainError("probable_prime: n must exceed 1");
  if (rounds == 0) throw DomainError("probable_prime: rounds must be positive");
  for (unsigned p : kFixedWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const BigInt kDeterministicBound("3317044064679887385961981", 10);
  if (n < kDeterministicBound) {
    for (unsigned w : kFixedWitnesses)
      if (!miller_rabin_round(n, w)) return false;
    return true;
  }
  unsigned done = 0;
  for (unsigned w : kFixedWitnesses) {
    if (done == rounds) return true;
    if (!miller_rabin_round(n, w)) return false;
    ++done;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x6b33626dUL);
  const BigInt span = n - 3;
  for (; done < rounds; ++done) {
    BigInt w = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, w)) return false;
  }
  return true;
}

SmallFactorization strip_small_factors(const BigInt& n, std::uint32_t bound) {
  if (n <= 0) throw DomainError("strip_small_factors: n must be positive");
  if (bound < 2) throw DomainError("strip_small_factors: bound must be at least 2");
  SmallFactorization out;
  out.cofactor = n;
  for (std::uint32_t p : primes_up_to(bound)) {
    if (out.cofactor == 1) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.factors.push_back({BigInt(p), e});
  }
  return out;
}

BigInt cofactor_gcd(const BigInt& a, const BigInt& b) {
  if (a <= 0 || b <= 0) throw DomainError("cofactor_gcd: inputs must be positive");
  BigInt x = a, y = b;
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt product(const std::vector<PrimePower>& factors) {
  BigInt acc = 1;
  for (const auto& f : factors) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    acc *= pw;
  }
  return acc;
}

}  // namespace k3bm
