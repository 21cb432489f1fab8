#include "k3bm/localfield.hpp"

#include "k3bm/error.hpp"

namespace k3bm {

namespace {

// a = p^v * u with u a p-adic unit; returns v and an integer congruent to u
// modulo any power of p we look at (numerator times denominator of u).
struct Split {
  int v;
  BigInt unit;
};

Split split(const Rational& a, const BigInt& p) {
  if (a == 0) throw DomainError("local computation on zero");
  BigInt num = a.get_num(), den = a.get_den();
  int v = 0;
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    --v;
  }
  // u = num/den and u * den^2 = num * den differ by a unit square, which
  // does not change any symbol or square class.
  return {v, num * den};
}

int legendre(const BigInt& u, const BigInt& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

unsigned mod8(const BigInt& u) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<unsigned>(r.get_ui());
}

bool eps2(const BigInt& u) { return ((mod8(u) - 1) / 2) % 2 == 1; }
bool omega2(const BigInt& u) {
  const unsigned r = mod8(u);
  return r == 3 || r == 5;
}

}  // namespace

Place Place::finite(const BigInt& p) {
  if (p < 2 || !probable_prime(p)) throw DomainError("place: " + to_decimal(p) + " is not prime");
  Place pl;
  pl.kind = Kind::finite;
  pl.p = p;
  return pl;
}

bool padic_square(const Rational& a, const BigInt& p) {
  const Split s = split(a, p);
  if (s.v % 2 != 0) return false;
  if (p == 2) return mod8(s.unit) == 1;
  return legendre(s.unit, p) == 1;
}

bool is_local_square(const Rational& a, const Place& place) {
  if (a == 0) throw DomainError("local square test on zero");
  return place.is_real() ? a > 0 : padic_square(a, place.p);
}

Invariant hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  if (place.is_real()) return {a < 0 && b < 0};
  const BigInt& p = place.p;
  const Split sa = split(a, p), sb = split(b, p);
  const bool alpha = sa.v % 2 != 0, beta = sb.v % 2 != 0;
  if (p == 2) {
    const bool e = (eps2(sa.unit) && eps2(sb.unit)) != ((alpha && omega2(sb.unit)) != (beta && omega2(sa.unit)));
    return {e};
  }
  bool odd = false;
  if (alpha && beta && mod8(p) % 4 == 3) odd = !odd;
  if (beta && legendre(sa.unit, p) == -1) odd = !odd;
  if (alpha && legendre(sb.unit, p) == -1) odd = !odd;
  return {odd};
}

}  // namespace k3bm
