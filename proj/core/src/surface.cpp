#include "k3bm/surface.hpp"

#include "k3bm/badred.hpp"

namespace k3bm {

namespace {

const IntegerRing kZ;

TernaryForm<BigInt> quadric_from(const std::array<BigInt, 6>& c) {
  return form_from_ints(kZ, 2, std::vector<BigInt>(c.begin(), c.end()));
}

BigInt det3(const std::array<std::array<BigInt, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<BigInt, 3>, 3> doubled_gram(const TernaryForm<BigInt>& q) {
  const auto& c = q.coeffs;
  return {{{2 * c[0], c[1], c[2]}, {c[1], 2 * c[3], c[4]}, {c[2], c[4], 2 * c[5]}}};
}

bool congruent_one_mod8(const BigInt& v) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), 8);
  return r == 1;
}

// v_2(v) >= k, with v_2(0) = infinity.
bool two_adic_at_least(const BigInt& v, unsigned k) {
  return v == 0 || mpz_scan1(v.get_mpz_t(), 0) >= k;
}

bool odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()); }

// Condition of type "c_special == 1 mod 8, others divisible by 8".
bool unit_square_pattern(const TernaryForm<BigInt>& q, int special) {
  for (int i = 0; i < 6; ++i) {
    if (i == special ? !congruent_one_mod8(q.coeffs[i]) : !two_adic_at_least(q.coeffs[i], 3)) return false;
  }
  return true;
}

// Condition of type "c_special odd, others even".
bool unit_pattern(const TernaryForm<BigInt>& q, int special) {
  for (int i = 0; i < 6; ++i) {
    if (i == special ? !odd(q.coeffs[i]) : !two_adic_at_least(q.coeffs[i], 1)) return false;
  }
  return true;
}

}  // namespace

QuadricSextet QuadricSextet::from_coefficients(const std::array<std::array<BigInt, 6>, 6>& rows) {
  QuadricSextet q;
  for (int i = 0; i < 6; ++i) q.forms[i] = quadric_from(rows[i]);
  return q;
}

QuadricSextet QuadricSextet::zero() {
  QuadricSextet q;
  for (auto& f : q.forms) f = zero_form(kZ, 2);
  return q;
}

std::array<std::array<BigInt, 6>, 6> QuadricSextet::coefficients() const {
  std::array<std::array<BigInt, 6>, 6> rows;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rows[i][j] = forms[i].coeffs[j];
  return rows;
}

bool QuadricSextet::degenerate() const {
  for (const auto& f : forms)
    if (is_zero_form(kZ, f)) return true;
  return false;
}

TernaryForm<BigInt> branch_sextic(const QuadricSextet& q) {
  auto mul = [](const TernaryForm<BigInt>& a, const TernaryForm<BigInt>& b) { return form_mul(kZ, a, b); };
  const auto &A = q.A(), &B = q.B(), &C = q.C(), &D = q.D(), &E = q.E(), &F = q.F();
  auto f = form_scale(kZ, mul(mul(A, D), F), BigInt(-4));
  f = form_add(kZ, f, mul(A, mul(E, E)));
  f = form_add(kZ, f, mul(mul(B, B), F));
  f = form_sub(kZ, f, mul(mul(B, C), E));
  f = form_add(kZ, f, mul(mul(C, C), D));
  return f;
}

K3Surface build_k3(const QuadricSextet& q) { return {branch_sextic(q), q}; }

std::array<std::array<BigInt, 6>, 6> bidegree_matrix(const QuadricSextet& q) { return q.coefficients(); }

QuadricSextet swap_projection(const QuadricSextet& q) {
  const auto k = bidegree_matrix(q);
  std::array<std::array<BigInt, 6>, 6> t;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = k[j][i];
  return QuadricSextet::from_coefficients(t);
}

bool is_positive_definite(const TernaryForm<BigInt>& quadric) {
  if (quadric.degree != 2) throw DomainError("definiteness test needs a quadric");
  const auto g = doubled_gram(quadric);
  const BigInt m1 = g[0][0];
  const BigInt m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  return m1 > 0 && m2 > 0 && det3(g) > 0;
}

bool is_negative_definite(const TernaryForm<BigInt>& quadric) {
  return is_positive_definite(form_scale(kZ, quadric, BigInt(-1)));
}

bool check_real_conditions(const QuadricSextet& q) {
  return is_negative_definite(q.A()) && is_negative_definite(q.D()) && is_negative_definite(q.F()) &&
         is_positive_definite(q.B()) && is_positive_definite(q.C()) && is_positive_definite(q.E());
}

bool check_2adic_conditions(const QuadricSextet& q) {
  // Serialization positions: x0^2 -> 0, x1^2 -> 3, x2^2 -> 5.
  return unit_square_pattern(q.A(), 0) && unit_pattern(q.B(), 0) && unit_pattern(q.C(), 5) &&
         unit_square_pattern(q.D(), 3) && unit_pattern(q.E(), 3) && unit_square_pattern(q.F(), 5);
}

bool is_smooth_mod(const TernaryForm<BigInt>& f, const BigInt& p) { return !is_bad_prime(f, p); }

bool is_smooth_curve(const TernaryForm<BigInt>& f) {
  if (is_zero_form(kZ, f)) throw DomainError("smoothness test on the zero form");
  // A singular point over Qbar reduces to a singular point mod every prime
  // where f stays nonzero, so one smooth reduction settles the question.
  for (std::uint32_t p : primes_up_to(100)) {
    if (p < 3) continue;
    const PrimeField fp{BigInt(p)};
    if (is_zero_form(fp, reduce_form(fp, f))) continue;
    if (!is_bad_prime(f, BigInt(p))) return true;
  }
  const RationalField qq;
  const auto fq = map_form(qq, f, [](const BigInt& c) { return Rational(c); });
  return !is_singular_curve(qq, fq);
}

}  // namespace k3bm
