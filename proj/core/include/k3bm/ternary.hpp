#pragma once

#include <array>
#include <functional>
#include <vector>

#include "k3bm/poly.hpp"

namespace k3bm {

using Exponents = std::array<unsigned, 3>;

// Homogeneous ternary form stored densely in graded-lex order with
// x0 > x1 > x2. For degree d the monomial x0^e0 x1^e1 x2^e2 sits at index
// s(s+1)/2 + e2 where s = d - e0.
template <class E>
struct TernaryForm {
  unsigned degree = 0;
  std::vector<E> coeffs;

  static std::size_t size_for(unsigned d) { return static_cast<std::size_t>(d + 1) * (d + 2) / 2; }
  static std::size_t index(unsigned d, const Exponents& e) {
    const std::size_t s = d - e[0];
    return s * (s + 1) / 2 + e[2];
  }
  static Exponents exponents(unsigned d, std::size_t idx) {
    unsigned s = 0;
    while (static_cast<std::size_t>(s + 1) * (s + 2) / 2 <= idx) ++s;
    const unsigned e2 = static_cast<unsigned>(idx - static_cast<std::size_t>(s) * (s + 1) / 2);
    return {d - s, s - e2, e2};
  }

  const E& at(const Exponents& e) const { return coeffs[index(degree, e)]; }
  E& at(const Exponents& e) { return coeffs[index(degree, e)]; }

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

template <CommutativeRing R>
TernaryForm<typename R::Elem> zero_form(const R& ring, unsigned degree) {
  return {degree, std::vector<typename R::Elem>(TernaryForm<typename R::Elem>::size_for(degree), ring.zero())};
}

template <CommutativeRing R>
bool is_zero_form(const R& ring, const TernaryForm<typename R::Elem>& f) {
  for (const auto& c : f.coeffs)
    if (!ring.is_zero(c)) return false;
  return true;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_from_ints(const R& ring, unsigned degree, const std::vector<BigInt>& coeffs) {
  if (coeffs.size() != TernaryForm<typename R::Elem>::size_for(degree))
    throw DomainError("form_from_ints: wrong coefficient count");
  auto f = zero_form(ring, degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.coeffs[i] = ring.from_int(coeffs[i]);
  return f;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_monomial(const R& ring, const typename R::Elem& c, const Exponents& e) {
  auto f = zero_form(ring, e[0] + e[1] + e[2]);
  f.at(e) = c;
  return f;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_add(const R& ring, TernaryForm<typename R::Elem> a,
                                       const TernaryForm<typename R::Elem>& b) {
  if (a.degree != b.degree) throw DomainError("form_add: degree mismatch");
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] = ring.add(a.coeffs[i], b.coeffs[i]);
  return a;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_scale(const R& ring, TernaryForm<typename R::Elem> a, const typename R::Elem& s) {
  for (auto& c : a.coeffs) c = ring.mul(c, s);
  return a;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_sub(const R& ring, const TernaryForm<typename R::Elem>& a,
                                       const TernaryForm<typename R::Elem>& b) {
  return form_add(ring, a, form_scale(ring, b, ring.neg(ring.one())));
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> form_mul(const R& ring, const TernaryForm<typename R::Elem>& a,
                                       const TernaryForm<typename R::Elem>& b) {
  using TF = TernaryForm<typename R::Elem>;
  auto r = zero_form(ring, a.degree + b.degree);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (ring.is_zero(a.coeffs[i])) continue;
    const Exponents ea = TF::exponents(a.degree, i);
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (ring.is_zero(b.coeffs[j])) continue;
      const Exponents eb = TF::exponents(b.degree, j);
      auto& slot = r.at({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
      slot = ring.add(slot, ring.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

template <CommutativeRing R>
typename R::Elem evaluate(const R& ring, const TernaryForm<typename R::Elem>& f,
                          const std::array<typename R::Elem, 3>& x) {
  using E = typename R::Elem;
  std::array<std::vector<E>, 3> pw;
  for (int k = 0; k < 3; ++k) {
    pw[k].assign(f.degree + 1, ring.one());
    for (unsigned e = 1; e <= f.degree; ++e) pw[k][e] = ring.mul(pw[k][e - 1], x[k]);
  }
  E acc = ring.zero();
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (ring.is_zero(f.coeffs[i])) continue;
    const Exponents e = TernaryForm<E>::exponents(f.degree, i);
    acc = ring.add(acc, ring.mul(f.coeffs[i], ring.mul(pw[0][e[0]], ring.mul(pw[1][e[1]], pw[2][e[2]]))));
  }
  return acc;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> partial(const R& ring, const TernaryForm<typename R::Elem>& f, int var) {
  using TF = TernaryForm<typename R::Elem>;
  if (f.degree == 0) return zero_form(ring, 0);
  auto r = zero_form(ring, f.degree - 1);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    Exponents e = TF::exponents(f.degree, i);
    if (e[var] == 0 || ring.is_zero(f.coeffs[i])) continue;
    const auto factor = ring.from_int(BigInt(e[var]));
    --e[var];
    r.at(e) = ring.mul(f.coeffs[i], factor);
  }
  return r;
}

// Coefficient-wise ring change, e.g. reduction of an integral form mod p.
template <class ToRing, class From, class Map>
TernaryForm<typename ToRing::Elem> map_form(const ToRing&, const TernaryForm<From>& f, Map&& map) {
  TernaryForm<typename ToRing::Elem> r{f.degree, {}};
  r.coeffs.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) r.coeffs.push_back(map(c));
  return r;
}

template <CommutativeRing R>
TernaryForm<typename R::Elem> reduce_form(const R& ring, const TernaryForm<BigInt>& f) {
  return map_form(ring, f, [&](const BigInt& c) { return ring.from_int(c); });
}

// f(L x) with (L x)_i = sum_j L[i][j] x_j.
template <CommutativeRing R>
TernaryForm<typename R::Elem> linear_substitute(const R& ring, const TernaryForm<typename R::Elem>& f,
                                                const std::array<std::array<typename R::Elem, 3>, 3>& L) {
  using E = typename R::Elem;
  std::array<std::vector<TernaryForm<E>>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    auto lin = zero_form(ring, 1);
    lin.at({1, 0, 0}) = L[i][0];
    lin.at({0, 1, 0}) = L[i][1];
    lin.at({0, 0, 1}) = L[i][2];
    pw[i].push_back(form_monomial(ring, ring.one(), {0, 0, 0}));
    for (unsigned e = 1; e <= f.degree; ++e) pw[i].push_back(form_mul(ring, pw[i].back(), lin));
  }
  auto r = zero_form(ring, f.degree);
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (ring.is_zero(f.coeffs[k])) continue;
    const Exponents e = TernaryForm<E>::exponents(f.degree, k);
    auto term = form_mul(ring, form_mul(ring, pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]);
    r = form_add(ring, r, form_scale(ring, term, f.coeffs[k]));
  }
  return r;
}

// f(1, t, x2) as a polynomial in x2 whose coefficients are polynomials in t.
template <Field F>
UniPoly<UniPoly<typename F::Elem>> dehomogenize_x0(const F& field, const TernaryForm<typename F::Elem>& f) {
  using E = typename F::Elem;
  std::vector<UniPoly<E>> cols(f.degree + 1);
  for (unsigned e2 = 0; e2 <= f.degree; ++e2) {
    std::vector<E> c(f.degree - e2 + 1, field.zero());
    for (unsigned e1 = 0; e1 + e2 <= f.degree; ++e1) c[e1] = f.at({f.degree - e1 - e2, e1, e2});
    cols[e2] = trim(field, UniPoly<E>(std::move(c)));
  }
  UniPoly<UniPoly<E>> r(std::move(cols));
  while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();
  return r;
}

// f(0, 1, s) as a polynomial in s.
template <Field F>
UniPoly<typename F::Elem> restrict_x0_zero(const F& field, const TernaryForm<typename F::Elem>& f) {
  std::vector<typename F::Elem> c(f.degree + 1, field.zero());
  for (unsigned e2 = 0; e2 <= f.degree; ++e2) c[e2] = f.at({0, f.degree - e2, e2});
  return trim(field, UniPoly<typename F::Elem>(std::move(c)));
}

// Line l0 x0 + l1 x1 + l2 x2 = 0 in dual coordinates, first nonzero entry 1.
template <class E>
struct ProjLine {
  std::array<E, 3> l;
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

template <Field F>
ProjLine<typename F::Elem> normalize_line(const F& field, std::array<typename F::Elem, 3> l) {
  int first = 0;
  while (first < 3 && field.is_zero(l[first])) ++first;
  if (first == 3) throw DomainError("line with all-zero coordinates");
  const auto s = field.inv(l[first]);
  for (auto& c : l) c = field.mul(c, s);
  return {l};
}

// Binary form F(s, t) = f(param(s, t)) stored as u(t) = F(1, t). The value at
// the parametrization's point at infinity is F(0, 1), the coefficient of t^d
// in u; the root multiplicity there is d - deg u.
template <class E>
struct LineRestriction {
  UniPoly<E> affine;
  E at_infinity;
  unsigned form_degree = 0;
  bool identically_zero() const { return affine.is_zero(); }
};

// Parametrization: l0 != 0 gives [-(l1 s + l2 t)/l0 : s : t]; else l1 != 0
// gives [s : -l2 t/l1 : t]; else [s : t : 0].
template <Field F>
std::array<UniPoly<typename F::Elem>, 3> line_parametrization(const F& field, const ProjLine<typename F::Elem>& line) {
  using P = UniPoly<typename F::Elem>;
  const auto& l = line.l;
  const P one = constant_poly(field, field.one());
  const P t = monomial_poly(field, field.one(), 1);
  if (!field.is_zero(l[0])) {
    const auto m = field.neg(field.inv(l[0]));
    P x0 = trim(field, P({field.mul(m, l[1]), field.mul(m, l[2])}));
    return {x0, one, t};
  }
  if (!field.is_zero(l[1])) {
    P x1 = monomial_poly(field, field.neg(field.mul(l[2], field.inv(l[1]))), 1);
    return {one, x1, t};
  }
  return {one, t, P{}};
}

template <Field F>
LineRestriction<typename F::Elem> restrict_to_line(const F& field, const TernaryForm<typename F::Elem>& f,
                                                   const ProjLine<typename F::Elem>& line) {
  using E = typename F::Elem;
  using P = UniPoly<E>;
  const auto x = line_parametrization(field, line);
  std::array<std::vector<P>, 3> pw;
  for (int k = 0; k < 3; ++k) {
    pw[k].push_back(constant_poly(field, field.one()));
    for (unsigned e = 1; e <= f.degree; ++e) pw[k].push_back(poly_mul(field, pw[k].back(), x[k]));
  }
  P u;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (field.is_zero(f.coeffs[i])) continue;
    const Exponents e = TernaryForm<E>::exponents(f.degree, i);
    P term = poly_mul(field, poly_mul(field, pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]);
    u = poly_add(field, u, poly_scale(field, term, f.coeffs[i]));
  }
  E inf = u.degree() == static_cast<int>(f.degree) ? u.lead() : field.zero();
  return {std::move(u), std::move(inf), f.degree};
}

// Point on the line for parameter (s, t) = (1, t).
template <Field F>
std::array<typename F::Elem, 3> line_point(const F& field, const ProjLine<typename F::Elem>& line,
                                           const typename F::Elem& t) {
  const auto x = line_parametrization(field, line);
  return {poly_eval(field, x[0], t), poly_eval(field, x[1], t), poly_eval(field, x[2], t)};
}

}  // namespace k3bm
