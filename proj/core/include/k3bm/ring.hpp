#pragma once

#include <concepts>
#include <random>

#include "k3bm/arith.hpp"
#include "k3bm/error.hpp"

namespace k3bm {

// Coefficient rings are passed explicitly as context objects; elements are
// plain values. This keeps runtime moduli (F_p, F_{p^n}) out of the element
// type.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Elem& a,
                                   const typename R::Elem& b, const BigInt& n) {
  typename R::Elem;
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.from_int(n) } -> std::convertible_to<typename R::Elem>;
  { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
  { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
  { r.neg(a) } -> std::convertible_to<typename R::Elem>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, b) } -> std::same_as<bool>;
};

// Rings where exact division (b | a known) is available; used by Bareiss.
template <class R>
concept ExactDivisionRing = CommutativeRing<R> && requires(const R& r, const typename R::Elem& a) {
  { r.exact_div(a, a) } -> std::convertible_to<typename R::Elem>;
};

template <class R>
concept Field = ExactDivisionRing<R> && requires(const R& r, const typename R::Elem& a) {
  { r.inv(a) } -> std::convertible_to<typename R::Elem>;
  { r.characteristic() } -> std::convertible_to<BigInt>;
};

template <class R>
concept FiniteField = Field<R> && requires(const R& r, const typename R::Elem& a, std::mt19937_64& g) {
  { r.order() } -> std::convertible_to<BigInt>;
  { r.pth_root(a) } -> std::convertible_to<typename R::Elem>;
  { r.random(g) } -> std::convertible_to<typename R::Elem>;
};

class IntegerRing {
 public:
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& n) const { return n; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem exact_div(const Elem& a, const Elem& b) const {
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

class RationalField {
 public:
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& n) const { return Rational(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem exact_div(const Elem& a, const Elem& b) const { return a / b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return 1 / a;
  }
  BigInt characteristic() const { return 0; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

// Z/pZ for a prime p of any size. Elements are reduced representatives in [0, p).
class PrimeField {
 public:
  using Elem = BigInt;

  // Throws DomainError unless p is an odd or even probable prime.
  explicit PrimeField(BigInt p);

  const BigInt& modulus() const { return p_; }
  BigInt characteristic() const { return p_; }
  BigInt order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& n) const { return reduce(n); }
  Elem reduce(const BigInt& n) const {
    Elem r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a + b;
    if (r >= p_) r -= p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a - b;
    if (r < 0) r += p_;
    return r;
  }
  Elem neg(const Elem& a) const { return a == 0 ? a : Elem(p_ - a); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem inv(const Elem& a) const {
    Elem r;
    if (a == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
      throw DomainError("inverse of zero in F_p");
    return r;
  }
  Elem exact_div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const BigInt& e) const {
    Elem r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  Elem pth_root(const Elem& a) const { return a; }
  Elem random(std::mt19937_64& g) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  BigInt p_;
};

inline PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
  if (p_ < 2 || !probable_prime(p_)) throw DomainError("PrimeField: modulus " + to_decimal(p_) + " is not prime");
}

inline PrimeField::Elem PrimeField::random(std::mt19937_64& g) const {
  // Enough random bits to make the modular bias negligible.
  BigInt acc = 0;
  std::size_t limbs = mpz_sizeinbase(p_.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < limbs; ++i) {
    acc <<= 64;
    acc += BigInt(std::to_string(g()));
  }
  return reduce(acc);
}

template <CommutativeRing R>
typename R::Elem ring_pow(const R& ring, typename R::Elem base, unsigned long e) {
  typename R::Elem acc = ring.one();
  while (e) {
    if (e & 1) acc = ring.mul(acc, base);
    e >>= 1;
    if (e) base = ring.mul(base, base);
  }
  return acc;
}

}  // namespace k3bm
