#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "k3bm/fixtures.hpp"
#include "k3bm/pipeline.hpp"

namespace k3bm::oracle {

// Independent reference computations used by the unit tests and by the
// acceptance binary. Everything here is brute force or a closed formula.

ExampleFixture example();
K3Surface example_surface();

TernaryForm<BigInt> random_form(std::mt19937_64& rng, unsigned degree, long range);

// -det(M)/2 evaluated numerically from the 3x3 matrix of quadric values.
BigInt branch_by_determinant(const QuadricSextet& q, const std::array<BigInt, 3>& x);

// Full addition/multiplication tables of F_{p^e}, indexed as in FqField.
struct SmallField {
  std::uint32_t p = 0, q = 0;
  std::vector<std::uint32_t> add, mul, neg;
  std::vector<int> chi;            // quadratic character by Euler's criterion
  std::vector<unsigned> degree;    // minimal subfield degree of each element
  std::uint32_t from_int(long v) const;
};
SmallField small_field(std::uint32_t p, unsigned e);

// Value of an integral form at a point of F_{p^e}.
std::uint32_t eval_form(const SmallField& F, const TernaryForm<BigInt>& f, const std::array<std::uint32_t, 3>& x);

// Normalized points of P^2(F_{p^e}).
std::vector<std::array<std::uint32_t, 3>> projective_points(const SmallField& F);

// Points of P^2(F_{p^e}) where f and all three partials vanish.
std::vector<std::array<std::uint32_t, 3>> brute_singular_points(const SmallField& F, const TernaryForm<BigInt>& f);

// sum over P^2(F_{p^n}) of 1 + chi(f(P)).
BigInt brute_count(const TernaryForm<BigInt>& f, std::uint32_t p, unsigned n);

// (a, b)_p for odd p and integers with valuations <= 1, by searching for a
// primitive solution of z^2 = a x^2 + b y^2 mod p^3.
Invariant brute_hilbert(long a, long b, long p);

// a nonzero integer; searches x with x^2 = a mod p^(v+3) and v(x^2) = v(a).
bool brute_padic_square(long a, long p);

// Conjugate-pair and cyclotomic building blocks of a synthetic Frobenius
// polynomial; power sums computed from the eigenvalues, not the coefficients.
struct SyntheticCharpoly {
  BigInt q;
  std::vector<Rational> a;          // degree 22, low first
  std::vector<Rational> power_sums; // t_1 .. t_22
  int sign = 0;
  unsigned unit_roots = 0;
};
SyntheticCharpoly synthetic_charpoly(std::mt19937_64& rng, long q);

// ---- property suites (criterion 8); each returns "" on success -------------

std::string check_hilbert_product_formula(unsigned pairs, std::uint64_t seed);
std::string check_hilbert_against_brute_force(std::uint64_t seed);
std::string check_naive_vs_orbit(unsigned sextics, unsigned max_n, std::uint64_t seed);
std::string check_charpoly_round_trip(unsigned cases, std::uint64_t seed);
std::string check_squarefree_reassembly(unsigned cases, std::uint64_t seed);

}  // namespace k3bm::oracle
