#pragma once

#include <compare>
#include <string>

#include "k3bm/arith.hpp"

namespace k3bm {

struct Place {
  enum class Kind { real, finite };
  Kind kind = Kind::real;
  BigInt p = 0;  // prime when finite

  static Place real() { return {}; }
  // Throws DomainError unless p is prime.
  static Place finite(const BigInt& p);

  bool is_real() const { return kind == Kind::real; }
  std::string name() const { return is_real() ? "R" : to_decimal(p); }

  friend bool operator==(const Place& a, const Place& b) { return a.kind == b.kind && a.p == b.p; }
  // Real place first, then primes in increasing order.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.kind != b.kind) return a.is_real();
    return a.p < b.p;
  }
};

// Element of (1/2)Z/Z.
struct Invariant {
  bool half = false;

  static Invariant zero() { return {false}; }
  static Invariant one_half() { return {true}; }
  std::string to_string() const { return half ? "1/2" : "0"; }

  friend Invariant operator+(Invariant a, Invariant b) { return {a.half != b.half}; }
  friend bool operator==(const Invariant&, const Invariant&) = default;
};

// a in (Q_p^*)^2. Throws DomainError for a = 0.
bool padic_square(const Rational& a, const BigInt& p);

// Square in the completion; at R this means a > 0.
bool is_local_square(const Rational& a, const Place& place);

// Hilbert symbol (a, b)_v written additively: 0 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion.
Invariant hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

}  // namespace k3bm
