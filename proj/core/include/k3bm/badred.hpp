#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3bm/finitefield.hpp"
#include "k3bm/ternary.hpp"

namespace k3bm {

// Singular-locus elimination for a plane curve f = 0 over a field F.
//
// A point P with f(P) != 0 is moved to (0:0:1), so that f'(1, t, x2) has
// constant leading coefficient in x2. Singular points off x0 = 0 project to
// common roots of R_j(t) = Res_x2(f', d_j f') and G = gcd_j R_j; singular
// points on x0 = 0 are roots of H = gcd_k g_k(0, 1, s) over the generators.
template <class E>
struct Elimination {
  std::array<std::array<E, 3>, 3> frame;  // x = frame * x'
  TernaryForm<E> transformed;             // f'(x') = f(frame * x')
  std::array<TernaryForm<E>, 4> generators;  // f', d0 f', d1 f', d2 f'
  UniPoly<E> G;                           // monic; zero never occurs when decided is false
  UniPoly<E> H;                           // monic gcd on x0 = 0
  bool decided_singular = false;          // singular for a structural reason (reason set)
  std::string reason;
};

namespace detail {

template <Field F>
std::vector<typename F::Elem> candidate_elements(const F& field, std::size_t count) {
  std::vector<typename F::Elem> out;
  if constexpr (std::same_as<F, FqField>) {
    const std::uint64_t limit = field.order().fits_ulong_p() ? std::min<std::uint64_t>(field.order().get_ui(), count) : count;
    for (std::uint64_t i = 0; i < limit; ++i) out.push_back(field.from_index(i));
  } else if constexpr (std::same_as<F, PrimeField>) {
    const BigInt limit = field.order() < BigInt(static_cast<unsigned long>(count)) ? field.order() : BigInt(static_cast<unsigned long>(count));
    for (BigInt i = 0; i < limit; ++i) out.push_back(field.from_int(i));
  } else {
    out.push_back(field.zero());
    for (long i = 1; out.size() < count; ++i) {
      out.push_back(field.from_int(BigInt(i)));
      out.push_back(field.from_int(BigInt(-i)));
    }
  }
  return out;
}

// Points (1,a,b), then (0,1,b), then (0,0,1) over the candidate elements,
// skipping `skip` hits with f != 0.
template <Field F>
std::optional<std::array<typename F::Elem, 3>> nonvanishing_point(const F& field, const TernaryForm<typename F::Elem>& f,
                                                                  unsigned skip) {
  const auto cand = candidate_elements(field, 64);
  auto try_point = [&](std::array<typename F::Elem, 3> pt) -> bool {
    if (field.is_zero(evaluate(field, f, pt))) return false;
    if (skip == 0) return true;
    --skip;
    return false;
  };
  for (const auto& a : cand)
    for (const auto& b : cand)
      if (std::array<typename F::Elem, 3> pt{field.one(), a, b}; try_point(pt)) return pt;
  for (const auto& b : cand)
    if (std::array<typename F::Elem, 3> pt{field.zero(), field.one(), b}; try_point(pt)) return pt;
  if (std::array<typename F::Elem, 3> pt{field.zero(), field.zero(), field.one()}; try_point(pt)) return pt;
  return std::nullopt;
}

template <Field F>
using BivariatePoly = UniPoly<UniPoly<typename F::Elem>>;

// Reduce every t-coefficient modulo m and drop vanishing leading terms.
template <Field F>
BivariatePoly<F> reduce_mod(const F& field, BivariatePoly<F> a, const UniPoly<typename F::Elem>& m) {
  for (auto& c : a.coeffs) c = poly_rem(field, c, m);
  while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
  return a;
}

// gcd in x2 over A = F[t]/(m), m squarefree. Either returns the gcd or a
// proper factor of m at which a leading coefficient became a zero divisor.
template <Field F>
struct ModGcd {
  std::optional<UniPoly<typename F::Elem>> split;
  BivariatePoly<F> gcd;
};

template <Field F>
ModGcd<F> gcd_over_quotient(const F& field, BivariatePoly<F> a, BivariatePoly<F> b, const UniPoly<typename F::Elem>& m) {
  using P = UniPoly<typename F::Elem>;
  a = reduce_mod(field, std::move(a), m);
  b = reduce_mod(field, std::move(b), m);
  auto make_monic = [&](BivariatePoly<F>& x) -> std::optional<P> {
    const P lc = x.lead();
    const P d = poly_gcd(field, lc, m);
    if (d.degree() > 0) return d;
    const P inv = poly_inverse_mod(field, lc, m);
    for (auto& c : x.coeffs) c = poly_mulmod(field, c, inv, m);
    return std::nullopt;
  };
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (auto d = make_monic(b)) return {d, {}};
    // a mod b with b monic in x2.
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const P c = a.lead();
      const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        a.coeffs[shift + j] = poly_rem(field, poly_sub(field, a.coeffs[shift + j], poly_mul(field, c, b.coeffs[j])), m);
      a = reduce_mod(field, std::move(a), m);
    }
    std::swap(a, b);
  }
  if (!a.is_zero())
    if (auto d = make_monic(a)) return {d, {}};
  return {std::nullopt, std::move(a)};
}

// True iff for some root t0 of m the polynomials share a root in x2.
template <Field F>
bool common_root_over(const F& field, const std::vector<BivariatePoly<F>>& polys, const UniPoly<typename F::Elem>& m) {
  if (m.degree() <= 0) return false;
  BivariatePoly<F> g = reduce_mod(field, polys.front(), m);
  for (std::size_t k = 1; k < polys.size(); ++k) {
    auto r = gcd_over_quotient(field, g, polys[k], m);
    if (r.split) {
      const auto m1 = poly_monic(field, *r.split);
      const auto m2 = poly_div_exact(field, m, m1);
      return common_root_over(field, polys, m1) || common_root_over(field, polys, poly_monic(field, m2));
    }
    g = std::move(r.gcd);
  }
  // g is monic in x2 over this component; zero cannot occur since the first
  // generator has constant leading coefficient.
  return g.degree() >= 1;
}

}  // namespace detail

// Throws Inconclusive("frame", ...) when F has no usable point with f != 0
// among its first elements.
template <Field F>
Elimination<typename F::Elem> eliminate(const F& field, const TernaryForm<typename F::Elem>& f, unsigned frame_variant = 0) {
  using E = typename F::Elem;
  using P = UniPoly<E>;
  if (is_zero_form(field, f)) throw DomainError("singularity test on the zero form");
  Elimination<E> out;
  std::array<TernaryForm<E>, 3> d{partial(field, f, 0), partial(field, f, 1), partial(field, f, 2)};
  if (is_zero_form(field, d[0]) && is_zero_form(field, d[1]) && is_zero_form(field, d[2])) {
    out.decided_singular = true;
    out.reason = "all partial derivatives vanish identically";
    return out;
  }
  const auto pt = detail::nonvanishing_point(field, f, frame_variant);
  if (!pt) throw Inconclusive("frame", "no point with f != 0 among candidate points");
  const auto& P0 = *pt;
  // Columns: two basis vectors completing P0, then P0.
  std::array<std::array<E, 3>, 3> T;
  int a = 0, b = 1;
  if (!field.is_zero(P0[2])) {
    a = 0, b = 1;
  } else if (!field.is_zero(P0[1])) {
    a = 0, b = 2;
  } else {
    a = 1, b = 2;
  }
  const E shear = field.from_int(BigInt(frame_variant));
  for (int i = 0; i < 3; ++i) {
    const E ea = i == a ? field.one() : field.zero();
    const E eb = i == b ? field.one() : field.zero();
    T[i][0] = field.add(ea, field.mul(shear, eb));
    T[i][1] = eb;
    T[i][2] = P0[i];
  }
  out.frame = T;
  out.transformed = linear_substitute(field, f, T);
  out.generators = {out.transformed, partial(field, out.transformed, 0), partial(field, out.transformed, 1),
                    partial(field, out.transformed, 2)};

  // Line x0 = 0.
  P h;
  bool all_zero = true;
  for (const auto& g : out.generators) {
    const P r = restrict_x0_zero(field, g);
    if (r.is_zero()) continue;
    all_zero = false;
    h = h.is_zero() ? poly_monic(field, r) : poly_gcd(field, h, r);
  }
  if (all_zero) {
    out.decided_singular = true;
    out.reason = "curve contains x0 = 0 as a multiple component";
    return out;
  }
  out.H = h;

  // Chart x0 = 1.
  PolyRing<F> ring(field);
  const auto f0 = dehomogenize_x0(field, out.transformed);
  P g;
  for (int j = 1; j <= 3; ++j) {
    const auto q = dehomogenize_x0(field, out.generators[j]);
    if (q.is_zero()) continue;
    P r = resultant_formal(ring, f0, static_cast<std::size_t>(f0.degree()), q, static_cast<std::size_t>(q.degree()));
    if (r.is_zero()) {
      out.decided_singular = true;
      out.reason = "f shares a component with a partial derivative";
      return out;
    }
    g = g.is_zero() ? poly_monic(field, r) : poly_gcd(field, g, r);
  }
  out.G = g.is_zero() ? constant_poly(field, field.one()) : g;
  return out;
}

// Decision only; needs no root finding, so it works for any prime size.
template <Field F>
bool is_singular_curve(const F& field, const TernaryForm<typename F::Elem>& f) {
  const auto el = eliminate(field, f);
  if (el.decided_singular) return true;
  if (el.H.degree() > 0) return true;
  if (el.G.degree() <= 0) return false;
  std::vector<detail::BivariatePoly<F>> polys;
  for (const auto& g : el.generators) {
    auto b = dehomogenize_x0(field, g);
    if (!b.is_zero()) polys.push_back(std::move(b));
  }
  return detail::common_root_over(field, polys, squarefree_part(field, el.G));
}

// f over F_p for an odd prime p. p = 2 is reported bad without computation:
// in characteristic 2 the partials satisfy x0 f_0 + x1 f_1 + x2 f_2 = 0, so
// w^2 = f always has singular points.
// Throws DomainError when f vanishes identically mod p.
bool is_bad_prime(const TernaryForm<BigInt>& f, const BigInt& p);

struct SingularPoint {
  std::shared_ptr<const FqField> field;  // F_{p^degree}
  std::array<FqElem, 3> coords;          // original coordinates, first nonzero entry 1
  unsigned degree = 0;                   // exact residue degree
  enum class Kind { node, non_node } kind = Kind::node;
};

struct SingularReport {
  BigInt p;
  unsigned degree_bound = 0;
  std::vector<SingularPoint> points;  // every geometric point found, conjugates listed separately
  unsigned unresolved = 0;            // geometric points (or elimination roots) beyond the bound
  std::string note;                   // set for structural singularity with no point list
  std::size_t r() const { return points.size(); }
  bool all_nodes_and_r_lt_8() const;
};

// Precondition: p odd prime; f mod p singular (throws DomainError otherwise).
SingularReport singular_points(const TernaryForm<BigInt>& f, const BigInt& p, unsigned degree_bound = 6,
                               unsigned frame_variant = 0);

struct BadPrimeAttestation {
  std::vector<BigInt> bad_confirmed;
  std::vector<BigInt> good_confirmed;
  std::string completeness_note;
};

// Throws VerificationFailure naming the first prime that disagrees.
BadPrimeAttestation verify_bad_prime_list(const TernaryForm<BigInt>& f, const std::vector<BigInt>& bad_primes,
                                          const std::vector<BigInt>& good_spot_checks);

}  // namespace k3bm
