#include "k3bm/brauer.hpp"

#include <random>
#include <set>

namespace k3bm {

namespace {

const IntegerRing kZ;

TernaryForm<BigInt> minor(const TernaryForm<BigInt>& a, const TernaryForm<BigInt>& b, const TernaryForm<BigInt>& c) {
  return form_sub(kZ, form_scale(kZ, form_mul(kZ, a, b), BigInt(4)), form_mul(kZ, c, c));
}

TernaryForm<BigInt> negated(const TernaryForm<BigInt>& f) { return form_scale(kZ, f, BigInt(-1)); }

bool locally_on_surface(const BigInt& fv, const Place& place) {
  return fv != 0 && is_local_square(Rational(fv), place);
}

}  // namespace

MinorTriple minors(const QuadricSextet& q) {
  return {minor(q.D(), q.F(), q.E()), minor(q.A(), q.F(), q.C()), minor(q.A(), q.D(), q.B())};
}

std::string to_string(RepTag tag) {
  switch (tag) {
    case RepTag::MF_A: return "(-M_F, A)";
    case RepTag::MA_D: return "(-M_A, D)";
    case RepTag::MD_F: return "(-M_D, F)";
    case RepTag::MD_A: return "(-M_D, A)";
    case RepTag::MF_D: return "(-M_F, D)";
    case RepTag::MA_F: return "(-M_A, F)";
  }
  return "?";
}

std::array<QuaternionRep, 6> representatives(const QuadricSextet& q) {
  const auto m = minors(q);
  return {{{negated(m.MF), q.A(), RepTag::MF_A},
           {negated(m.MA), q.D(), RepTag::MA_D},
           {negated(m.MD), q.F(), RepTag::MD_F},
           {negated(m.MD), q.A(), RepTag::MD_A},
           {negated(m.MF), q.D(), RepTag::MF_D},
           {negated(m.MA), q.F(), RepTag::MA_F}}};
}

InvariantValue evaluate_invariant_at(const QuadricSextet& q, const std::array<BigInt, 3>& x, const Place& place) {
  const BigInt fv = evaluate(kZ, branch_sextic(q), x);
  if (fv != 0 && !is_local_square(Rational(fv), place))
    throw DomainError("point is not local at " + place.name());
  for (const auto& rep : representatives(q)) {
    const BigInt a = evaluate(kZ, rep.left, x), b = evaluate(kZ, rep.right, x);
    if (a == 0 || b == 0) continue;
    return {hilbert_symbol(Rational(a), Rational(b), place), rep.tag};
  }
  throw Inconclusive("indeterminate at point", "all six representatives have a vanishing entry");
}

std::optional<SurfacePoint> find_local_point(const K3Surface& X, const Place& place, unsigned box) {
  if (box == 0) throw DomainError("find_local_point: box must be >= 1");
  const long b = static_cast<long>(box);
  for (long i = -b; i <= b; ++i)
    for (long j = -b; j <= b; ++j)
      for (long k = -b; k <= b; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        // Skip x when -x precedes it; f(-x) = f(x).
        const std::array<long, 3> neg{-i, -j, -k}, pos{i, j, k};
        if (neg < pos) continue;
        std::array<BigInt, 3> x{BigInt(i), BigInt(j), BigInt(k)};
        BigInt fv = evaluate(kZ, X.branch, x);
        if (locally_on_surface(fv, place)) return SurfacePoint{x, fv, place};
      }
  return std::nullopt;
}

LocalSolubilityAttestation certify_everywhere_local(const K3Surface& X, const std::vector<BigInt>& bad_primes,
                                                    unsigned box) {
  std::set<Place> places{Place::real()};
  for (std::uint32_t p : primes_up_to(19)) places.insert(Place::finite(BigInt(p)));
  for (const auto& p : bad_primes) places.insert(Place::finite(p));
  LocalSolubilityAttestation att;
  for (const auto& pl : places) {
    auto pt = find_local_point(X, pl, box);
    if (!pt) throw Inconclusive("local-solubility", "local solubility undecided at place " + pl.name());
    att.witnesses.push_back(*pt);
  }
  att.rules.push_back(
      "primes p > 19 of good reduction: the smooth reduction has a smooth F_p-point by the Weil bound (p > 22 "
      "suffices and no prime lies in 20..22), which lifts by Hensel's lemma");
  att.rules.push_back("bad primes checked: " + std::to_string(bad_primes.size()) +
                      " (the list is taken as complete; its completeness is the caller's responsibility)");
  return att;
}

std::string to_string(ConstancyBasis b) {
  switch (b) {
    case ConstancyBasis::good_reduction: return "good-reduction";
    case ConstancyBasis::real_lemma: return "theorem-backed: A, D, F negative definite and B, C, E positive definite";
    case ConstancyBasis::two_adic_lemma: return "theorem-backed: 2-adic coefficient conditions";
    case ConstancyBasis::nodal_bad_reduction: return "theorem-backed: singular locus is r < 8 ordinary double points";
    case ConstancyBasis::empirical: return "empirically constant";
  }
  return "?";
}

std::vector<SurfacePoint> sample_local_points(const K3Surface& X, const Place& place, unsigned count,
                                              std::uint64_t seed, unsigned range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-static_cast<long>(range), static_cast<long>(range));
  std::vector<SurfacePoint> out;
  const unsigned max_draws = 400 * count + 400;
  for (unsigned draw = 0; draw < max_draws && out.size() < count; ++draw) {
    std::array<BigInt, 3> x{BigInt(coord(rng)), BigInt(coord(rng)), BigInt(coord(rng))};
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
    BigInt fv = evaluate(kZ, X.branch, x);
    if (locally_on_surface(fv, place)) out.push_back({x, fv, place});
  }
  if (out.size() < count)
    throw Inconclusive("sampling", "found only " + std::to_string(out.size()) + " local points at " + place.name());
  return out;
}

InvariantProfile invariant_profile(const K3Surface& X, const std::vector<BigInt>& bad_primes,
                                   const ProfileOptions& options) {
  InvariantProfile profile;
  profile.seed = options.seed;
  std::set<Place> places{Place::real(), Place::finite(BigInt(2))};
  for (const auto& p : bad_primes) places.insert(Place::finite(p));
  std::uint64_t salt = 0;
  for (const auto& pl : places) {
    PlaceProfile pp;
    auto witness = find_local_point(X, pl, options.box);
    if (!witness) throw Inconclusive("local-solubility", "no local point found at " + pl.name());
    pp.evaluated.push_back(*witness);
    for (auto& s : sample_local_points(X, pl, options.samples, options.seed + 0x9e3779b97f4a7c15ULL * ++salt))
      pp.evaluated.push_back(std::move(s));
    for (const auto& pt : pp.evaluated) pp.values.push_back(evaluate_invariant(X.source, pt, pl));
    pp.value = pp.values.front();
    for (const auto& v : pp.values) pp.constant = pp.constant && v == pp.value;
    if (pl.is_real()) {
      pp.basis = check_real_conditions(X.source) ? ConstancyBasis::real_lemma : ConstancyBasis::empirical;
    } else if (pl.p == 2) {
      pp.basis = check_2adic_conditions(X.source) ? ConstancyBasis::two_adic_lemma : ConstancyBasis::empirical;
    } else {
      auto it = options.singular_reports.find(pl.p);
      SingularReport rep = it != options.singular_reports.end() ? it->second
                                                                : singular_points(X.branch, pl.p, options.degree_bound);
      pp.basis = rep.all_nodes_and_r_lt_8() ? ConstancyBasis::nodal_bad_reduction : ConstancyBasis::empirical;
      pp.singular = std::move(rep);
    }
    profile.places.emplace(pl, std::move(pp));
  }
  profile.attestation.push_back(
      "good-reduction rule: at every odd prime not listed as bad the class does not ramify, so the invariant is 0");
  profile.attestation.push_back("bad-prime list completeness is taken from the caller (fixture-backed)");
  return profile;
}

std::string to_string(Verdict v) {
  return v == Verdict::obstruction ? "obstruction" : "no-obstruction-from-class";
}

Verdict bm_verdict(const InvariantProfile& profile) {
  Invariant sum;
  for (const auto& [pl, pp] : profile.places) {
    if (!pp.constant) throw Inconclusive("bm-verdict", "invariant not constant at place " + pl.name());
    sum = sum + pp.value;
  }
  return sum.half ? Verdict::obstruction : Verdict::no_obstruction_from_class;
}

}  // namespace k3bm
