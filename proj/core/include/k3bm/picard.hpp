#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3bm/surface.hpp"

namespace k3bm {

// ---- point counting -------------------------------------------------------

enum class CountStrategy { naive, orbit };

// Per exact degree d: number of points of P^2 with minimal field F_{p^d},
// how many of them lie on f = 0, and the sum of chi_d(f(P)) over them.
struct DegreeSums {
  unsigned d = 0;
  std::uint64_t points = 0;
  std::uint64_t zeros = 0;
  std::int64_t chi_sum = 0;
};

struct CountSeries {
  BigInt p;
  unsigned max_n = 0;
  std::vector<BigInt> counts;        // N_1 .. N_max_n
  std::vector<DegreeSums> degrees;   // d = 1 .. max_n; empty when counts were supplied directly
};

// N = sum over P in P^2(F_{p^n}) of 1 + chi(f(P)), the number of points of
// w^2 = f in P(1,1,1,3). p odd; needs p^n <= 2^20 (discrete-log tables).
BigInt count_points(const TernaryForm<BigInt>& f, const BigInt& p, unsigned n,
                    CountStrategy strategy = CountStrategy::orbit, unsigned threads = 1);

// Computes the per-degree sums once and assembles N_1..N_max_n from them.
// Throws VerificationFailure if a count violates the Weil bound.
CountSeries count_series(const TernaryForm<BigInt>& f, const BigInt& p, unsigned max_n, unsigned threads = 1);

DegreeSums degree_sums(const TernaryForm<BigInt>& f, const BigInt& p, unsigned d, unsigned threads = 1);

// N_n from per-degree sums: sum over d | n of A_d + (n/d odd ? S_d : A_d - Z_d).
BigInt assemble_count(const std::vector<DegreeSums>& sums, unsigned n);

// |N_n - 1 - q^{2n}| <= 22 q^n.
bool within_weil_bound(const BigInt& count, const BigInt& q, unsigned n);

// ---- Frobenius characteristic polynomial -----------------------------------

struct FrobeniusData {
  BigInt q;
  std::vector<Rational> power_sums;  // t_1 .. t_k
  std::vector<Rational> a;           // a_0 .. a_22, a_22 = 1
  int sign = 0;                      // functional-equation sign
  std::vector<Rational> normalized;  // b_i = a_i q^{i-22}: g(t) = f(q t) / q^22
};

// From N_1..N_k (k >= 10): t_n = N_n - 1 - q^{2n}.
std::vector<Rational> lefschetz_power_sums(const std::vector<BigInt>& counts, const BigInt& q);

// Throws VerificationFailure("charpoly", "count series inconsistent") when no
// sign gives roots of modulus q, and Inconclusive("charpoly", ...) when the
// data leave the sign or the middle coefficient open.
FrobeniusData frobenius_charpoly(const std::vector<Rational>& power_sums, const BigInt& q);
FrobeniusData frobenius_charpoly(const CountSeries& counts);

// All roots of the normalized polynomial on the unit circle (relative
// tolerance 1e-6), using companion-matrix eigenvalues of its squarefree part.
bool weil_conform(const std::vector<Rational>& normalized);

// Sum over d with phi(d) <= 22 of phi(d) times the multiplicity of Phi_d in g.
unsigned unit_root_bound(const FrobeniusData& fd);
unsigned unit_root_bound(const std::vector<Rational>& normalized);

// Phi_d over Q, low first.
std::vector<Rational> cyclotomic(unsigned d);
std::vector<unsigned> cyclotomic_sieve_range();  // all d with phi(d) <= 22

// ---- tritangent lines -------------------------------------------------------

struct TritangentScan {
  BigInt p;
  std::optional<ProjLine<BigInt>> line;
  std::uint64_t lines_scanned = 0;
  std::vector<ProjLine<BigInt>> contained_lines;  // f vanishes on them; skipped
};

// Lines in increasing lex order of normalized dual coordinates.
std::vector<ProjLine<BigInt>> enumerate_lines(const PrimeField& fp);

// The restriction of f to the line is nonzero and a constant times a square
// (root multiplicities even, including the point at infinity).
bool is_tritangent(const PrimeField& fp, const TernaryForm<BigInt>& f_mod_p, const ProjLine<BigInt>& line);

TritangentScan find_tritangent(const TernaryForm<BigInt>& f, const BigInt& p);

// ---- rank-one certificate ---------------------------------------------------

struct RankCertificate {
  BigInt p;
  ProjLine<BigInt> line;
  FrobeniusData frobenius;
  unsigned unit_root_bound = 0;
  BigInt p_prime;
  std::uint64_t lines_scanned_at_p_prime = 0;
  unsigned rho = 1;
};

// Preconditions: p != p', both odd primes of good reduction (DomainError).
// `counts` supplies N_1..N_10 at p; when empty they are computed.
// Throws Inconclusive with leg "tritangent-p", "unit-root-bound" or
// "tritangent-p-prime".
RankCertificate certify_rank_one(const K3Surface& X, const BigInt& p, const BigInt& p_prime,
                                 const std::optional<CountSeries>& counts = std::nullopt, unsigned threads = 1);

}  // namespace k3bm
