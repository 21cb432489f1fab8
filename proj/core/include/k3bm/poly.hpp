#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "k3bm/ring.hpp"

namespace k3bm {

// Dense univariate polynomial, lowest degree first. The zero polynomial has
// no coefficients; otherwise the last coefficient is nonzero. Operations
// that can create trailing zeros take the ring and re-trim.
template <class E>
struct UniPoly {
  std::vector<E> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<E> c) : coeffs(std::move(c)) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const E& lead() const { return coeffs.back(); }
  const E& operator[](std::size_t i) const { return coeffs[i]; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

template <CommutativeRing R>
UniPoly<typename R::Elem> trim(const R& ring, UniPoly<typename R::Elem> p) {
  while (!p.coeffs.empty() && ring.is_zero(p.coeffs.back())) p.coeffs.pop_back();
  return p;
}

template <CommutativeRing R>
UniPoly<typename R::Elem> make_poly(const R& ring, std::initializer_list<long> low_to_high) {
  UniPoly<typename R::Elem> p;
  for (long c : low_to_high) p.coeffs.push_back(ring.from_int(BigInt(c)));
  return trim(ring, std::move(p));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> constant_poly(const R& ring, const typename R::Elem& c) {
  return trim(ring, UniPoly<typename R::Elem>({c}));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> monomial_poly(const R& ring, const typename R::Elem& c, std::size_t degree) {
  if (ring.is_zero(c)) return {};
  std::vector<typename R::Elem> v(degree + 1, ring.zero());
  v[degree] = c;
  return UniPoly<typename R::Elem>(std::move(v));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_add(const R& ring, const UniPoly<typename R::Elem>& a,
                                   const UniPoly<typename R::Elem>& b) {
  const auto& big = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const auto& small = a.coeffs.size() >= b.coeffs.size() ? b : a;
  UniPoly<typename R::Elem> r = big;
  for (std::size_t i = 0; i < small.coeffs.size(); ++i) r.coeffs[i] = ring.add(r.coeffs[i], small.coeffs[i]);
  return trim(ring, std::move(r));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_neg(const R& ring, UniPoly<typename R::Elem> a) {
  for (auto& c : a.coeffs) c = ring.neg(c);
  return a;
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_sub(const R& ring, const UniPoly<typename R::Elem>& a,
                                   const UniPoly<typename R::Elem>& b) {
  return poly_add(ring, a, poly_neg(ring, b));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_scale(const R& ring, UniPoly<typename R::Elem> a, const typename R::Elem& s) {
  for (auto& c : a.coeffs) c = ring.mul(c, s);
  return trim(ring, std::move(a));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_mul(const R& ring, const UniPoly<typename R::Elem>& a,
                                   const UniPoly<typename R::Elem>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename R::Elem> r(a.coeffs.size() + b.coeffs.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (ring.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r[i + j] = ring.add(r[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
  }
  return trim(ring, UniPoly<typename R::Elem>(std::move(r)));
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_pow(const R& ring, UniPoly<typename R::Elem> base, unsigned e) {
  UniPoly<typename R::Elem> acc = constant_poly(ring, ring.one());
  while (e) {
    if (e & 1) acc = poly_mul(ring, acc, base);
    e >>= 1;
    if (e) base = poly_mul(ring, base, base);
  }
  return acc;
}

template <CommutativeRing R>
typename R::Elem poly_eval(const R& ring, const UniPoly<typename R::Elem>& a, const typename R::Elem& x) {
  typename R::Elem acc = ring.zero();
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
  return acc;
}

template <CommutativeRing R>
UniPoly<typename R::Elem> poly_derivative(const R& ring, const UniPoly<typename R::Elem>& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<typename R::Elem> r;
  r.reserve(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) r.push_back(ring.mul(ring.from_int(BigInt(static_cast<unsigned long>(i))), a.coeffs[i]));
  return trim(ring, UniPoly<typename R::Elem>(std::move(r)));
}

template <Field F>
std::pair<UniPoly<typename F::Elem>, UniPoly<typename F::Elem>> poly_divrem(const F& field,
                                                                           const UniPoly<typename F::Elem>& a,
                                                                           const UniPoly<typename F::Elem>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  using E = typename F::Elem;
  if (a.degree() < b.degree()) return {UniPoly<E>{}, a};
  std::vector<E> rem = a.coeffs;
  std::vector<E> quo(a.coeffs.size() - b.coeffs.size() + 1, field.zero());
  const E lead_inv = field.inv(b.lead());
  const std::size_t db = b.coeffs.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const E& top = rem[k + db];
    if (field.is_zero(top)) continue;
    E c = field.mul(top, lead_inv);
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = field.sub(rem[k + j], field.mul(c, b.coeffs[j]));
    quo[k] = std::move(c);
  }
  rem.resize(db);
  return {trim(field, UniPoly<E>(std::move(quo))), trim(field, UniPoly<E>(std::move(rem)))};
}

template <Field F>
UniPoly<typename F::Elem> poly_rem(const F& field, const UniPoly<typename F::Elem>& a,
                                   const UniPoly<typename F::Elem>& b) {
  return poly_divrem(field, a, b).second;
}

template <Field F>
UniPoly<typename F::Elem> poly_div_exact(const F& field, const UniPoly<typename F::Elem>& a,
                                         const UniPoly<typename F::Elem>& b) {
  auto [q, r] = poly_divrem(field, a, b);
  if (!r.is_zero()) throw DomainError("poly_div_exact: nonzero remainder");
  return q;
}

template <Field F>
UniPoly<typename F::Elem> poly_monic(const F& field, UniPoly<typename F::Elem> a) {
  if (a.is_zero()) return a;
  return poly_scale(field, std::move(a), field.inv(a.lead()));
}

// Monic gcd; gcd(0, 0) = 0.
template <Field F>
UniPoly<typename F::Elem> poly_gcd(const F& field, UniPoly<typename F::Elem> a, UniPoly<typename F::Elem> b) {
  while (!b.is_zero()) {
    auto r = poly_rem(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(field, std::move(a));
}

// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
template <Field F>
UniPoly<typename F::Elem> poly_inverse_mod(const F& field, const UniPoly<typename F::Elem>& a,
                                           const UniPoly<typename F::Elem>& m) {
  using P = UniPoly<typename F::Elem>;
  P r0 = m, r1 = poly_rem(field, a, m);
  P s0, s1 = constant_poly(field, field.one());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(field, r0, r1);
    P s = poly_sub(field, s0, poly_mul(field, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("poly_inverse_mod: not invertible");
  return poly_rem(field, poly_scale(field, s0, field.inv(r0.lead())), m);
}

template <Field F>
UniPoly<typename F::Elem> poly_mulmod(const F& field, const UniPoly<typename F::Elem>& a,
                                      const UniPoly<typename F::Elem>& b, const UniPoly<typename F::Elem>& m) {
  return poly_rem(field, poly_mul(field, a, b), m);
}

template <Field F>
UniPoly<typename F::Elem> poly_powmod(const F& field, UniPoly<typename F::Elem> base, const BigInt& e,
                                      const UniPoly<typename F::Elem>& m) {
  if (e < 0) throw DomainError("negative exponent");
  base = poly_rem(field, base, m);
  UniPoly<typename F::Elem> acc = poly_rem(field, constant_poly(field, field.one()), m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = poly_mulmod(field, acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = poly_mulmod(field, acc, base, m);
  }
  return acc;
}

template <Field F>
UniPoly<typename F::Elem> poly_x(const F& field) {
  return UniPoly<typename F::Elem>({field.zero(), field.one()});
}

// Bareiss fraction-free elimination. The matrix is consumed.
template <ExactDivisionRing R>
typename R::Elem determinant(const R& ring, std::vector<std::vector<typename R::Elem>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  typename R::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t swap = k + 1;
      while (swap < n && ring.is_zero(m[swap][k])) ++swap;
      if (swap == n) return ring.zero();
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return negate ? ring.neg(d) : d;
}

// Sylvester-determinant resultant with formal degrees (deg f <= n, deg g <= m).
// Res(f, g) = lc(f)^m * prod g(roots of f) when deg f = n.
template <ExactDivisionRing R>
typename R::Elem resultant_formal(const R& ring, const UniPoly<typename R::Elem>& f, std::size_t n,
                                  const UniPoly<typename R::Elem>& g, std::size_t m) {
  using E = typename R::Elem;
  const std::size_t size = n + m;
  std::vector<std::vector<E>> s(size, std::vector<E>(size, ring.zero()));
  auto coeff = [&](const UniPoly<E>& p, std::size_t i) { return i < p.coeffs.size() ? p.coeffs[i] : ring.zero(); };
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[r][r + j] = coeff(f, n - j);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[m + r][r + j] = coeff(g, m - j);
  return determinant(ring, std::move(s));
}

template <ExactDivisionRing R>
typename R::Elem resultant(const R& ring, const UniPoly<typename R::Elem>& f, const UniPoly<typename R::Elem>& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  return resultant_formal(ring, f, static_cast<std::size_t>(f.degree()), g, static_cast<std::size_t>(g.degree()));
}

// Polynomials over a field, viewed as a ring with exact division. Lets
// Bareiss compute resultants with polynomial entries.
template <Field F>
class PolyRing {
 public:
  using Elem = UniPoly<typename F::Elem>;
  explicit PolyRing(const F& base) : base_(&base) {}
  const F& base() const { return *base_; }
  Elem zero() const { return {}; }
  Elem one() const { return constant_poly(*base_, base_->one()); }
  Elem from_int(const BigInt& n) const { return constant_poly(*base_, base_->from_int(n)); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(*base_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(*base_, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(*base_, a); }
  Elem mul(const Elem& a, const Elem& b) const { return poly_mul(*base_, a, b); }
  Elem exact_div(const Elem& a, const Elem& b) const { return poly_div_exact(*base_, a, b); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

 private:
  const F* base_;
};

template <class E>
struct SquarefreeDecomposition {
  E unit;                                          // leading coefficient of the input
  std::vector<std::pair<UniPoly<E>, unsigned>> factors;  // monic, pairwise coprime, squarefree
};

namespace detail {

// Replace g(x) = h(x^p) by h with coefficients replaced by their p-th roots.
template <Field F>
UniPoly<typename F::Elem> pth_root_poly(const F& field, const UniPoly<typename F::Elem>& g, unsigned long p) {
  using E = typename F::Elem;
  std::vector<E> out;
  for (std::size_t i = 0; i < g.coeffs.size(); i += p) out.push_back(field.pth_root(g.coeffs[i]));
  for (std::size_t i = 0; i < g.coeffs.size(); ++i)
    if (i % p != 0 && !field.is_zero(g.coeffs[i])) throw DomainError("pth_root_poly: not a p-th power");
  return trim(field, UniPoly<E>(std::move(out)));
}

template <Field F>
void squarefree_monic(const F& field, const UniPoly<typename F::Elem>& f, unsigned scale,
                      std::vector<std::pair<UniPoly<typename F::Elem>, unsigned>>& out) {
  using E = typename F::Elem;
  if (f.degree() <= 0) return;
  UniPoly<E> c = poly_gcd(field, f, poly_derivative(field, f));
  UniPoly<E> w = poly_div_exact(field, f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly<E> y = poly_gcd(field, w, c);
    UniPoly<E> fac = poly_div_exact(field, w, y);
    if (fac.degree() > 0) out.emplace_back(poly_monic(field, fac), i * scale);
    w = std::move(y);
    c = poly_div_exact(field, c, w);
    ++i;
  }
  if (c.degree() > 0) {
    const BigInt ch = field.characteristic();
    if (ch == 0) throw DomainError("squarefree decomposition: inconsistent remainder in characteristic 0");
    if (!ch.fits_ulong_p()) throw DomainError("squarefree decomposition: p-th root descent with huge p");
    unsigned long p = ch.get_ui();
    if constexpr (requires(const F& fld, const E& a) { fld.pth_root(a); }) {
      squarefree_monic(field, poly_monic(field, pth_root_poly(field, c, p)), scale * static_cast<unsigned>(p), out);
    } else {
      throw DomainError("squarefree decomposition: coefficient field lacks p-th roots");
    }
  }
}

}  // namespace detail

// g = unit * prod factor^mult. Handles characteristic-p inputs with g' = 0
// by p-th root descent.
template <Field F>
SquarefreeDecomposition<typename F::Elem> squarefree_decomposition(const F& field, const UniPoly<typename F::Elem>& g) {
  if (g.is_zero()) throw DomainError("squarefree decomposition of zero");
  SquarefreeDecomposition<typename F::Elem> out{g.lead(), {}};
  std::vector<std::pair<UniPoly<typename F::Elem>, unsigned>> raw;
  detail::squarefree_monic(field, poly_monic(field, g), 1, raw);
  // Merge factors that ended up with the same multiplicity.
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (auto& [fac, mult] : raw) {
    if (!out.factors.empty() && out.factors.back().second == mult)
      out.factors.back().first = poly_mul(field, out.factors.back().first, fac);
    else
      out.factors.emplace_back(std::move(fac), mult);
  }
  return out;
}

// Product of the distinct monic irreducible factors of g.
template <Field F>
UniPoly<typename F::Elem> squarefree_part(const F& field, const UniPoly<typename F::Elem>& g) {
  auto dec = squarefree_decomposition(field, g);
  UniPoly<typename F::Elem> acc = constant_poly(field, field.one());
  for (const auto& [fac, mult] : dec.factors) acc = poly_mul(field, acc, fac);
  return acc;
}

}  // namespace k3bm
