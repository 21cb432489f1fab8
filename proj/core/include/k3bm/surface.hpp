#pragma once

#include <array>
#include <string>

#include "k3bm/ternary.hpp"

namespace k3bm {

// Six integral ternary quadratic forms A..F. Coefficients are serialized as
// [x0^2, x0x1, x0x2, x1^2, x1x2, x2^2], which is the graded-lex storage
// order of a degree-2 TernaryForm.
struct QuadricSextet {
  std::array<TernaryForm<BigInt>, 6> forms;

  static QuadricSextet from_coefficients(const std::array<std::array<BigInt, 6>, 6>& rows);
  static QuadricSextet zero();
  std::array<std::array<BigInt, 6>, 6> coefficients() const;

  const TernaryForm<BigInt>& A() const { return forms[0]; }
  const TernaryForm<BigInt>& B() const { return forms[1]; }
  const TernaryForm<BigInt>& C() const { return forms[2]; }
  const TernaryForm<BigInt>& D() const { return forms[3]; }
  const TernaryForm<BigInt>& E() const { return forms[4]; }
  const TernaryForm<BigInt>& F() const { return forms[5]; }

  // Some form is identically zero.
  bool degenerate() const;

  friend bool operator==(const QuadricSextet&, const QuadricSextet&) = default;
};

inline constexpr std::array<const char*, 6> kQuadricNames{"A", "B", "C", "D", "E", "F"};

// w^2 = f with f = -det(M)/2, M = [[2A, B, C], [B, 2D, E], [C, E, 2F]].
struct K3Surface {
  TernaryForm<BigInt> branch;
  QuadricSextet source;
};

// -det(M)/2 = -4ADF + AE^2 + B^2F - BCE + C^2D.
TernaryForm<BigInt> branch_sextic(const QuadricSextet& q);
K3Surface build_k3(const QuadricSextet& q);

// The (2,2) form sum_{i,j} K[i][j] ymon_i xmon_j, rows indexed by A..F.
std::array<std::array<BigInt, 6>, 6> bidegree_matrix(const QuadricSextet& q);

// Reads the (2,2) form with the roles of x and y exchanged.
QuadricSextet swap_projection(const QuadricSextet& q);

// Exact definiteness on the doubled Gram matrix.
bool is_positive_definite(const TernaryForm<BigInt>& quadric);
bool is_negative_definite(const TernaryForm<BigInt>& quadric);

// A, D, F negative definite and B, C, E positive definite.
bool check_real_conditions(const QuadricSextet& q);

// The six 2-adic congruence/valuation conditions on the coefficients.
bool check_2adic_conditions(const QuadricSextet& q);

// Smoothness of f = 0 over the algebraic closure of Q. Decided by finding a
// prime of smooth reduction (which implies smoothness in characteristic 0);
// falls back to the exact elimination over Q.
bool is_smooth_curve(const TernaryForm<BigInt>& f);

// Smoothness of f mod p over the algebraic closure of F_p.
bool is_smooth_mod(const TernaryForm<BigInt>& f, const BigInt& p);

}  // namespace k3bm
