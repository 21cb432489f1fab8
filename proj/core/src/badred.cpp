#include "k3bm/badred.hpp"

#include <numeric>

namespace k3bm {

namespace {

TernaryForm<FqElem> lift_form(const FqField& field, const TernaryForm<BigInt>& f) {
  return map_form(field, f, [&](const BigInt& c) { return field.from_int(c); });
}

template <Field F>
bool singular_with_fallback(const F& field, const TernaryForm<typename F::Elem>& f, const BigInt& p,
                            const TernaryForm<BigInt>& reduced) {
  try {
    return is_singular_curve(field, f);
  } catch (const Inconclusive&) {
    // Too few points over the base field; singularity is geometric, so any
    // extension decides it.
    for (unsigned e = 2; e <= 4; ++e) {
      auto ext = shared_field(p, e);
      try {
        return is_singular_curve(*ext, lift_form(*ext, reduced));
      } catch (const Inconclusive&) {
      }
    }
    throw;
  }
}

}  // namespace

bool is_bad_prime(const TernaryForm<BigInt>& f, const BigInt& p) {
  if (p < 2 || !probable_prime(p)) throw DomainError("is_bad_prime: " + to_decimal(p) + " is not prime");
  if (p == 2) return true;
  const PrimeField fp(p);
  const auto fr = reduce_form(fp, f);
  if (is_zero_form(fp, fr)) throw DomainError("entire reduction degenerate mod " + to_decimal(p));
  return singular_with_fallback(fp, fr, p, fr);
}

bool SingularReport::all_nodes_and_r_lt_8() const {
  if (unresolved != 0 || !note.empty() || points.size() >= 8) return false;
  for (const auto& pt : points)
    if (pt.kind != SingularPoint::Kind::node) return false;
  return true;
}

SingularReport singular_points(const TernaryForm<BigInt>& f, const BigInt& p, unsigned degree_bound,
                               unsigned frame_variant) {
  if (p == 2) throw DomainError("singular_points: p = 2 is not analysed");
  if (!is_bad_prime(f, p)) throw DomainError("singular_points: " + to_decimal(p) + " is a prime of good reduction");
  const PrimeField fp(p);
  const auto fr = reduce_form(fp, f);
  SingularReport report;
  report.p = p;
  report.degree_bound = degree_bound;
  const auto el = eliminate(fp, fr, frame_variant);
  if (el.decided_singular) {
    report.note = el.reason;
    report.unresolved = 1;
    return report;
  }
  using P = UniPoly<BigInt>;
  const P gs = el.G.degree() > 0 ? squarefree_part(fp, el.G) : P{};
  const P hs = el.H.degree() > 0 ? squarefree_part(fp, el.H) : P{};
  std::vector<UniPoly<P>> chart;
  for (const auto& g : el.generators) chart.push_back(dehomogenize_x0(fp, g));
  std::array<std::array<TernaryForm<BigInt>, 3>, 3> hess;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hess[i][j] = partial(fp, partial(fp, el.transformed, i), j);

  unsigned t_roots_found = 0, s_roots_found = 0, expected_chart = 0, found_chart = 0;

  for (unsigned k = 1; k <= degree_bound; ++k) {
    const auto L = shared_field(p, k);
    const FqField& K = *L;
    std::array<TernaryForm<FqElem>, 4> gens;
    for (int i = 0; i < 4; ++i) gens[i] = lift_form(K, el.generators[i]);
    std::array<std::array<TernaryForm<FqElem>, 3>, 3> hk;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) hk[i][j] = lift_form(K, hess[i][j]);

    auto record = [&](const std::array<FqElem, 3>& xp, int chart_index, unsigned degree) {
      for (const auto& g : gens)
        if (!K.is_zero(evaluate(K, g, xp)))
          throw VerificationFailure("singular-points", "eliminated point is not singular");
      const int i = chart_index == 0 ? 1 : 0, j = 2;
      const FqElem hii = evaluate(K, hk[i][i], xp), hjj = evaluate(K, hk[j][j], xp), hij = evaluate(K, hk[i][j], xp);
      const FqElem det = K.sub(K.mul(hii, hjj), K.mul(hij, hij));
      SingularPoint sp;
      sp.field = L;
      sp.degree = degree;
      sp.kind = K.is_zero(det) ? SingularPoint::Kind::non_node : SingularPoint::Kind::node;
      std::array<FqElem, 3> x;
      for (int r = 0; r < 3; ++r) {
        x[r] = K.zero();
        for (int c = 0; c < 3; ++c) x[r] = K.add(x[r], K.mul(K.from_int(el.frame[r][c]), xp[c]));
      }
      int first = 0;
      while (K.is_zero(x[first])) ++first;
      const FqElem s = K.inv(x[first]);
      for (auto& c : x) c = K.mul(c, s);
      sp.coords = x;
      report.points.push_back(std::move(sp));
    };

    if (gs.degree() > 0) {
      for (const auto& t0 : roots_in_field(K, lift_poly(K, gs))) {
        const unsigned dt = K.element_degree(t0);
        UniPoly<FqElem> d;
        for (const auto& g : chart) {
          UniPoly<FqElem> spec;
          for (const auto& c : g.coeffs) spec.coeffs.push_back(poly_eval(K, lift_poly(K, c), t0));
          spec = trim(K, std::move(spec));
          if (spec.is_zero()) continue;
          d = d.is_zero() ? poly_monic(K, spec) : poly_gcd(K, d, spec);
        }
        if (d.degree() <= 0) {
          if (dt == k) ++t_roots_found;
          continue;
        }
        if (dt == k) {
          ++t_roots_found;
          expected_chart += static_cast<unsigned>(squarefree_part(K, d).degree());
        }
        for (const auto& x2 : roots_in_field(K, d)) {
          const unsigned deg = std::lcm(dt, K.element_degree(x2));
          if (deg != k) continue;
          ++found_chart;
          record({K.one(), t0, x2}, 0, deg);
        }
      }
    }
    if (hs.degree() > 0) {
      for (const auto& s0 : roots_in_field(K, lift_poly(K, hs))) {
        const unsigned deg = K.element_degree(s0);
        if (deg != k) continue;
        ++s_roots_found;
        record({K.zero(), K.one(), s0}, 1, deg);
      }
    }
  }
  if (gs.degree() > 0) report.unresolved += static_cast<unsigned>(gs.degree()) - t_roots_found;
  report.unresolved += expected_chart - found_chart;
  if (hs.degree() > 0) report.unresolved += static_cast<unsigned>(hs.degree()) - s_roots_found;
  return report;
}

BadPrimeAttestation verify_bad_prime_list(const TernaryForm<BigInt>& f, const std::vector<BigInt>& bad_primes,
                                          const std::vector<BigInt>& good_spot_checks) {
  BadPrimeAttestation att;
  for (const auto& p : bad_primes) {
    if (!is_bad_prime(f, p)) throw VerificationFailure("bad-primes", "listed prime " + to_decimal(p) + " has good reduction");
    att.bad_confirmed.push_back(p);
  }
  for (const auto& p : good_spot_checks) {
    if (p == 2) throw VerificationFailure("bad-primes", "2 is never attested as good");
    if (is_bad_prime(f, p)) throw VerificationFailure("bad-primes", "spot-check prime " + to_decimal(p) + " has bad reduction");
    att.good_confirmed.push_back(p);
  }
  att.completeness_note =
      "completeness of the bad-prime list rests on the supplied discriminant fixture; it is not recomputed";
  return att;
}

}  // namespace k3bm
