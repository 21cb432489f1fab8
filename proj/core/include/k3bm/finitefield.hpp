#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "k3bm/poly.hpp"

namespace k3bm {

// Element of F_{p^n}: residue of a polynomial in t modulo the field's
// modulus, coefficients in [0, p), exactly n of them (low first).
struct FqElem {
  std::vector<BigInt> c;
  friend bool operator==(const FqElem&, const FqElem&) = default;
  friend bool operator<(const FqElem& a, const FqElem& b) {
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
  }
};

// Discrete-log tables over a fixed primitive element g. Elements are named
// by their index sum c_i p^i. The logarithm of zero is the sentinel q - 1.
struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t primitive_index = 0;
  std::vector<std::uint32_t> log_of;  // by element index
  std::vector<std::uint32_t> exp_of;  // exponent k -> index of g^k, k < q - 1
  std::vector<std::uint32_t> zech;    // k -> log(1 + g^k)
  std::uint32_t zero_log() const { return q - 1; }
};

class FqField {
 public:
  using Elem = FqElem;

  // Tables are built when q <= 2^20 unless disabled.
  FqField(const BigInt& p, unsigned n, bool build_tables = true);

  const BigInt& p() const { return p_; }
  unsigned degree() const { return n_; }
  // Monic modulus, low first, n + 1 coefficients.
  const std::vector<BigInt>& modulus() const { return modulus_; }
  const BigInt& order() const { return q_; }
  BigInt characteristic() const { return p_; }

  Elem zero() const { return Elem{std::vector<BigInt>(n_, BigInt(0))}; }
  Elem one() const { return from_int(1); }
  Elem from_int(const BigInt& v) const;
  Elem from_coeffs(std::vector<BigInt> c) const;
  Elem generator() const;  // the class of t
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem exact_div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const BigInt& e) const;
  Elem frobenius(const Elem& a) const { return pow(a, p_); }
  Elem pth_root(const Elem& a) const;
  Elem random(std::mt19937_64& g) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  // Smallest d | n with a in F_{p^d}.
  unsigned element_degree(const Elem& a) const;

  // Index encoding; requires q < 2^64.
  bool indexable() const { return q_.fits_ulong_p() && sizeof(unsigned long) >= 8; }
  std::uint64_t index(const Elem& a) const;
  Elem from_index(std::uint64_t idx) const;

  bool has_tables() const { return static_cast<bool>(tables_); }
  const FieldTables& tables() const;

  friend bool operator==(const FqField& a, const FqField& b) { return a.p_ == b.p_ && a.modulus_ == b.modulus_; }

 private:
  BigInt p_;
  unsigned n_;
  BigInt q_;
  std::vector<BigInt> modulus_;
  PrimeField fp_;
  std::shared_ptr<const FieldTables> tables_;
};

FqField make_field(const BigInt& p, unsigned n);

// Lexicographically smallest monic irreducible polynomial of degree n over
// F_p under the order on (c_{n-1}, ..., c_0). For p > 2^16 the search runs
// over coefficients below 64, which is the same order restricted to small
// entries.
std::vector<BigInt> smallest_irreducible(const PrimeField& fp, unsigned n);

// Rabin's test.
bool is_irreducible(const PrimeField& fp, const UniPoly<BigInt>& g);

// Legendre-style character: 0, +1 or -1. Odd characteristic only.
template <FiniteField F>
int quadratic_character(const F& field, const typename F::Elem& a) {
  if (field.characteristic() == 2) throw DomainError("quadratic character in characteristic 2");
  if (field.is_zero(a)) return 0;
  if constexpr (std::same_as<F, FqField>) {
    if (field.has_tables()) return field.tables().log_of[field.index(a)] % 2 == 0 ? 1 : -1;
    return field.equal(field.pow(a, (field.order() - 1) / 2), field.one()) ? 1 : -1;
  } else {
    return field.equal(field.pow(a, (field.order() - 1) / 2), field.one()) ? 1 : -1;
  }
}

template <FiniteField F>
typename F::Elem field_pow(const F& field, const typename F::Elem& a, const BigInt& e) {
  return field.pow(a, e);
}

// Distinct roots of g lying in F itself, sorted. Cantor-Zassenhaus with a
// fixed seed, so output is reproducible.
template <FiniteField F>
std::vector<typename F::Elem> roots_in_field(const F& field, const UniPoly<typename F::Elem>& g) {
  using E = typename F::Elem;
  using P = UniPoly<E>;
  if (g.is_zero()) throw DomainError("roots_in_field: zero polynomial");
  if (field.characteristic() == 2) throw DomainError("roots_in_field: characteristic 2");
  std::vector<E> roots;
  if (g.degree() <= 0) return roots;
  const P monic = poly_monic(field, g);
  const P x = poly_x(field);
  P r = poly_gcd(field, monic, poly_sub(field, poly_powmod(field, x, field.order(), monic), x));
  std::mt19937_64 rng(0x6b33626d5eedULL);
  const BigInt half = (field.order() - 1) / 2;
  std::vector<P> work{r};
  while (!work.empty()) {
    P h = std::move(work.back());
    work.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      roots.push_back(field.neg(h.coeffs[0]));
      continue;
    }
    for (;;) {
      P shift({field.random(rng), field.one()});
      P s = poly_sub(field, poly_powmod(field, shift, half, h), constant_poly(field, field.one()));
      P d = poly_gcd(field, h, s);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        work.push_back(poly_div_exact(field, h, d));
        work.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

template <class E>
struct DistinctDegreeParts {
  std::vector<std::pair<unsigned, UniPoly<E>>> parts;  // (i, product of the degree-i irreducible factors)
  UniPoly<E> remainder;                               // factors of degree > max_degree
};

// g squarefree. Parts come out in increasing degree.
template <FiniteField F>
DistinctDegreeParts<typename F::Elem> distinct_degree_factorization(const F& field, const UniPoly<typename F::Elem>& g,
                                                                    unsigned max_degree) {
  using P = UniPoly<typename F::Elem>;
  DistinctDegreeParts<typename F::Elem> out;
  P rest = poly_monic(field, g);
  const P x = poly_x(field);
  P xq = x;
  for (unsigned i = 1; rest.degree() > 0; ++i) {
    if (static_cast<int>(2 * i) > rest.degree()) {
      // Every remaining factor has degree >= i, so rest is irreducible.
      if (static_cast<unsigned>(rest.degree()) <= max_degree) {
        out.parts.emplace_back(static_cast<unsigned>(rest.degree()), std::move(rest));
        rest = constant_poly(field, field.one());
      }
      break;
    }
    if (i > max_degree) break;
    xq = poly_powmod(field, xq, field.order(), rest);
    P d = poly_gcd(field, rest, poly_sub(field, xq, x));
    if (d.degree() > 0) {
      rest = poly_div_exact(field, rest, d);
      xq = poly_rem(field, xq, rest);
      out.parts.emplace_back(i, std::move(d));
    }
  }
  if (rest.degree() > 0) out.remainder = std::move(rest);
  return out;
}

struct ExtensionRoot {
  std::shared_ptr<const FqField> field;  // F_{p^degree}
  FqElem value;
  unsigned degree = 0;  // exact degree of the minimal field of the root
  unsigned multiplicity = 0;
};

struct ExtensionRoots {
  std::vector<ExtensionRoot> roots;
  unsigned unresolved_degree = 0;  // degree of the part of g with no roots in F_{p^e}, e <= max_degree
};

// Canonical field cache shared across callers; make_field(p, e) per key.
std::shared_ptr<const FqField> shared_field(const BigInt& p, unsigned e);

FqElem lift_to(const FqField& field, const BigInt& v);
UniPoly<FqElem> lift_poly(const FqField& field, const UniPoly<BigInt>& g);

ExtensionRoots roots_in_extensions(const PrimeField& fp, const UniPoly<BigInt>& g, unsigned max_degree);

}  // namespace k3bm
