#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k3bm;

namespace {

const IntegerRing Z;

BigInt at(const TernaryForm<BigInt>& f, const std::array<BigInt, 3>& x) { return evaluate(Z, f, x); }

// Hilbert symbols of every representative with nonzero entries at x.
std::vector<Invariant> all_representative_symbols(const QuadricSextet& q, const std::array<BigInt, 3>& x,
                                                  const Place& pl) {
  std::vector<Invariant> out;
  for (const auto& rep : representatives(q)) {
    const BigInt a = at(rep.left, x), b = at(rep.right, x);
    if (a == 0 || b == 0) continue;
    out.push_back(hilbert_symbol(Rational(a), Rational(b), pl));
  }
  return out;
}

}  // namespace

TEST(Brauer, MinorsMatchProducts) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    QuadricSextet q;
    for (auto& f : q.forms) f = oracle::random_form(rng, 2, 9);
    const auto mn = minors(q);
    auto four = [](const TernaryForm<BigInt>& f) { return form_scale(Z, f, BigInt(4)); };
    EXPECT_EQ(mn.MA, form_sub(Z, four(form_mul(Z, q.D(), q.F())), form_mul(Z, q.E(), q.E())));
    EXPECT_EQ(mn.MD, form_sub(Z, four(form_mul(Z, q.A(), q.F())), form_mul(Z, q.C(), q.C())));
    EXPECT_EQ(mn.MF, form_sub(Z, four(form_mul(Z, q.A(), q.D())), form_mul(Z, q.B(), q.B())));
  }
}

TEST(Brauer, RepresentativeOrder) {
  const auto q = oracle::example().sextet;
  const auto mn = minors(q);
  const auto reps = representatives(q);
  const auto neg = [](const TernaryForm<BigInt>& f) { return form_scale(Z, f, BigInt(-1)); };
  EXPECT_EQ(reps[0].tag, RepTag::MF_A);
  EXPECT_EQ(reps[0].left, neg(mn.MF));
  EXPECT_EQ(reps[0].right, q.A());
  EXPECT_EQ(reps[1].left, neg(mn.MA));
  EXPECT_EQ(reps[1].right, q.D());
  EXPECT_EQ(reps[2].left, neg(mn.MD));
  EXPECT_EQ(reps[2].right, q.F());
  EXPECT_EQ(reps[3].right, q.A());
  EXPECT_EQ(reps[4].right, q.D());
  EXPECT_EQ(reps[5].tag, RepTag::MA_F);
}

TEST(Brauer, LocalPointFixtureRows) {
  const auto fx = oracle::example();
  const auto X = oracle::example_surface();
  ASSERT_EQ(fx.local_points.size(), 15u);
  for (const auto& row : fx.local_points) {
    const auto pt = find_local_point(X, Place::finite(row.p), 1);
    ASSERT_TRUE(pt) << row.p;
    EXPECT_EQ(pt->x, row.x) << row.p;
    EXPECT_EQ(pt->f_value, row.f_value) << row.p;
    EXPECT_EQ(at(X.branch, row.x), row.f_value);
    EXPECT_TRUE(is_local_square(Rational(row.f_value), Place::finite(row.p)));
  }
  const auto real = find_local_point(X, Place::real(), 1);
  ASSERT_TRUE(real);
  EXPECT_GT(real->f_value, 0);
}

TEST(Brauer, EverywhereLocalAttestation) {
  const auto fx = oracle::example();
  const auto att = certify_everywhere_local(oracle::example_surface(), fx.bad_primes);
  EXPECT_FALSE(att.witnesses.empty());
  EXPECT_FALSE(att.rules.empty());
  EXPECT_TRUE(att.witnesses.front().place.is_real());
}

TEST(Brauer, RealInvariantIsHalf) {
  const auto X = oracle::example_surface();
  const auto pts = sample_local_points(X, Place::real(), 25, 11);
  ASSERT_EQ(pts.size(), 25u);
  for (const auto& pt : pts) {
    EXPECT_EQ(evaluate_invariant(X.source, pt, Place::real()), Invariant::one_half());
    // At R the symbol is 1/2 exactly when both entries are negative.
    const auto reps = representatives(X.source);
    for (const auto& rep : reps) {
      const BigInt a = at(rep.left, pt.x), b = at(rep.right, pt.x);
      if (a != 0 && b != 0) {
        EXPECT_TRUE(a < 0 && b < 0);
      }
    }
  }
}

TEST(Brauer, TwoAdicInvariantIsZero) {
  const auto X = oracle::example_surface();
  const auto pts = sample_local_points(X, Place::finite(BigInt(2)), 25, 12);
  ASSERT_EQ(pts.size(), 25u);
  for (const auto& pt : pts) EXPECT_EQ(evaluate_invariant(X.source, pt, Place::finite(BigInt(2))), Invariant::zero());
}

TEST(Brauer, WitnessInvariantsVanishAtFinitePlaces) {
  const auto fx = oracle::example();
  const auto X = oracle::example_surface();
  for (const auto& row : fx.local_points) {
    const auto pl = Place::finite(row.p);
    EXPECT_EQ(evaluate_invariant_at(X.source, row.x, pl).value, fx.finite_invariant) << row.p;
  }
}

TEST(Brauer, RepresentativesAgreeOnLocalPoints) {
  const auto X = oracle::example_surface();
  for (const Place& pl : {Place::real(), Place::finite(BigInt(2)), Place::finite(BigInt(5)), Place::finite(BigInt(7))}) {
    for (const auto& pt : sample_local_points(X, pl, 15, 21)) {
      const auto syms = all_representative_symbols(X.source, pt.x, pl);
      ASSERT_FALSE(syms.empty());
      for (const auto& s : syms) EXPECT_EQ(s, syms.front()) << pl.name();
    }
  }
}

TEST(Brauer, NonLocalPointIsRejected) {
  const auto X = oracle::example_surface();
  // Any point with f < 0 is not real.
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const std::array<BigInt, 3> x{BigInt(1), BigInt(a), BigInt(b)};
      if (at(X.branch, x) < 0) {
        EXPECT_THROW(evaluate_invariant_at(X.source, x, Place::real()), DomainError);
        return;
      }
    }
}

TEST(Brauer, ProfileAndVerdict) {
  const auto fx = oracle::example();
  const auto X = oracle::example_surface();
  ProfileOptions opt;
  opt.samples = 8;
  const auto prof = invariant_profile(X, fx.bad_primes, opt);
  EXPECT_EQ(prof.places.size(), 11u);  // R and the ten bad primes
  for (const auto& [pl, pp] : prof.places) {
    EXPECT_TRUE(pp.constant) << pl.name();
    EXPECT_EQ(pp.value, pl.is_real() ? fx.real_invariant : fx.finite_invariant) << pl.name();
    EXPECT_NE(pp.basis, ConstancyBasis::empirical) << pl.name();
  }
  EXPECT_EQ(bm_verdict(prof), Verdict::obstruction);
  EXPECT_EQ(to_string(bm_verdict(prof)), fx.verdict);

  auto broken = prof;
  broken.places.begin()->second.constant = false;
  EXPECT_THROW(bm_verdict(broken), Inconclusive);
  auto flipped = prof;
  flipped.places.at(Place::finite(BigInt(2))).value = Invariant::one_half();
  EXPECT_EQ(bm_verdict(flipped), Verdict::no_obstruction_from_class);
}
