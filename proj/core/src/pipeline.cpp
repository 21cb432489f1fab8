#include "k3bm/pipeline.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace k3bm {

namespace {

struct CoefficientClass {
  int modulus;  // 2 or 8
  int residue;
  int sign;  // -1, 0 (any), +1
};

// Per form: the distinguished diagonal index, and whether the form is one of
// A, D, F (negative definite, 8-adic conditions) or B, C, E.
constexpr std::array<int, 6> kLeadIndex{0, 0, 5, 3, 3, 5};
constexpr std::array<bool, 6> kNegative{true, false, false, true, false, true};

CoefficientClass coefficient_class(int form, int index) {
  const bool diagonal = index == 0 || index == 3 || index == 5;
  const int sign = diagonal ? (kNegative[form] ? -1 : 1) : 0;
  const bool lead = index == kLeadIndex[form];
  if (kNegative[form]) return {8, lead ? 1 : 0, sign};
  return {2, lead ? 1 : 0, sign};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::optional<std::int64_t> draw_in_class(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                                          const CoefficientClass& c) {
  if (c.sign > 0) lo = std::max<std::int64_t>(lo, 1);
  if (c.sign < 0) hi = std::min<std::int64_t>(hi, -1);
  if (lo > hi) return std::nullopt;
  // v = residue + modulus * k
  const std::int64_t kmin = -floor_div(-(lo - c.residue), c.modulus);
  const std::int64_t kmax = floor_div(hi - c.residue, c.modulus);
  if (kmin > kmax) return std::nullopt;
  std::uniform_int_distribution<std::int64_t> dist(kmin, kmax);
  return c.residue + c.modulus * dist(rng);
}

const char* kStepNames[8] = {"",
                             "seed polynomials",
                             "smoothness",
                             "tritangent lines",
                             "local points",
                             "point counting",
                             "primes of bad reduction",
                             "bad-reduction places"};

struct Reject {
  unsigned step;
  std::string reason;
};

std::string step4_note() {
  return "local points checked at R and p <= 19; the threshold p <= 22 names the same primes since none lie in 20..22";
}

std::vector<BigInt> scan_bad_primes(const TernaryForm<BigInt>& f, std::uint32_t bound) {
  std::vector<BigInt> out{BigInt(2)};
  for (std::uint32_t p : primes_up_to(bound)) {
    if (p == 2) continue;
    if (is_bad_prime(f, BigInt(p))) out.push_back(BigInt(p));
  }
  return out;
}

ObstructionReport run_candidate(const SearchConfig& config, const QuadricSextet& sextet, unsigned draw,
                                const std::vector<BigInt>& supplied_bad) {
  const auto& on = config.steps;
  ObstructionReport rep;
  rep.sextet = sextet;
  rep.seed = config.seed;
  rep.draw = draw;
  unsigned step = 1;
  auto pass = [&](const std::string& detail) {
    rep.legs.push_back({std::to_string(step) + ": " + kStepNames[step], true, detail});
  };
  try {
    if (on[1]) {
      if (sextet.degenerate()) throw Reject{1, "a quadric is identically zero"};
      if (!check_real_conditions(sextet)) throw Reject{1, "definiteness pattern fails"};
      if (!check_2adic_conditions(sextet)) throw Reject{1, "2-adic coefficient conditions fail"};
      pass("real and 2-adic conditions hold");
    }
    const K3Surface X = build_k3(sextet);
    if (is_zero_form(IntegerRing{}, X.branch)) throw Reject{1, "branch sextic vanishes identically"};

    step = 2;
    if (on[2]) {
      rep.smooth_over_q = is_smooth_curve(X.branch);
      if (!rep.smooth_over_q) throw Reject{2, "branch curve singular over Q"};
      rep.smooth_at_3 = is_smooth_mod(X.branch, 3);
      if (!rep.smooth_at_3) throw Reject{2, "branch curve singular mod 3"};
      pass("smooth over Q and F_3");
    }

    step = 3;
    std::optional<BigInt> p_prime;
    if (on[3]) {
      if (!find_tritangent(X.branch, 3).line) throw Reject{3, "no tritangent line mod 3"};
      for (std::uint32_t p : primes_up_to(config.tritangent_hi)) {
        if (p < config.tritangent_lo || p == 3 || p == 2) continue;
        if (is_bad_prime(X.branch, BigInt(p))) continue;
        if (!find_tritangent(X.branch, BigInt(p)).line) {
          p_prime = BigInt(p);
          break;
        }
      }
      if (!p_prime) throw Reject{3, "every good prime in the window has a tritangent line"};
      pass("tritangent mod 3; none mod " + to_decimal(*p_prime));
    }

    step = 4;
    if (on[4]) {
      try {
        rep.local = certify_everywhere_local(X, {}, config.box);
      } catch (const Inconclusive& e) {
        throw Reject{4, e.what()};
      }
      rep.notes.push_back(step4_note());
      pass("local points at R and p <= 19");
    }

    step = 5;
    if (on[5]) {
      try {
        rep.counts = count_series(X.branch, 3, config.depth, config.threads);
        rep.counts_recomputed_to = config.depth;
        const auto fd = frobenius_charpoly(*rep.counts);
        const unsigned bound = unit_root_bound(fd);
        if (bound > 2) throw Reject{5, "unit-root bound " + std::to_string(bound)};
        if (p_prime) rep.rank = certify_rank_one(X, 3, *p_prime, rep.counts, config.threads);
      } catch (const Inconclusive& e) {
        throw Reject{5, e.leg() + ": " + e.what()};
      } catch (const VerificationFailure& e) {
        throw Reject{5, e.what()};
      }
      pass(rep.rank ? "rho = 1 certified" : "unit-root bound <= 2");
    }

    step = 6;
    std::vector<BigInt> bad;
    if (on[6]) {
      if (!supplied_bad.empty()) {
        std::vector<BigInt> spot{BigInt(3)};
        if (p_prime) spot.push_back(*p_prime);
        try {
          rep.bad_primes = verify_bad_prime_list(X.branch, supplied_bad, spot);
        } catch (const VerificationFailure& e) {
          throw Reject{6, e.what()};
        }
        bad = supplied_bad;
      } else {
        bad = scan_bad_primes(X.branch, config.bad_prime_scan);
        BadPrimeAttestation att;
        att.bad_confirmed = bad;
        att.completeness_note = "bounded scan: every prime <= " + std::to_string(config.bad_prime_scan) +
                                " tested; larger bad primes would need the discriminant integer, not computed here";
        rep.bad_primes = att;
      }
      pass(std::to_string(bad.size()) + " bad primes");
    }

    step = 7;
    if (on[7]) {
      ProfileOptions opts;
      opts.samples = config.samples;
      opts.box = config.box;
      opts.seed = config.seed ^ (0x9e3779b97f4a7c15ULL * (draw + 1));
      for (const auto& p : bad) {
        if (p == 2) continue;
        auto sr = singular_points(X.branch, p);
        if (!sr.all_nodes_and_r_lt_8())
          throw Reject{7, "singular locus mod " + to_decimal(p) + " is not r < 8 nodes"};
        opts.singular_reports.emplace(p, std::move(sr));
      }
      try {
        rep.local = certify_everywhere_local(X, bad, config.box);
        rep.profile = invariant_profile(X, bad, opts);
        if (bm_verdict(*rep.profile) != Verdict::obstruction) throw Reject{7, "invariants sum to 0"};
      } catch (const Inconclusive& e) {
        throw Reject{7, e.what()};
      }
      pass("invariants sum to 1/2");
    }
  } catch (const DomainError& e) {
    throw Reject{step, e.what()};
  } catch (const Inconclusive& e) {
    throw Reject{step, e.leg() + ": " + e.what()};
  } catch (const VerificationFailure& e) {
    throw Reject{step, e.what()};
  }

  bool complete = std::all_of(on.begin() + 1, on.end(), [](bool b) { return b; }) && !supplied_bad.empty() &&
                  rep.rank.has_value();
  if (complete && rep.profile)
    for (const auto& [pl, pp] : rep.profile->places) complete = complete && pp.basis != ConstancyBasis::empirical;
  if (complete) {
    rep.verdict = kCertified;
  } else if (!supplied_bad.empty() || !on[6]) {
    rep.verdict = "candidate (steps skipped or constancy empirical)";
  } else {
    rep.verdict = "candidate (bad-prime list from bounded scan)";
  }
  return rep;
}

[[noreturn]] void fail(const std::string& leg, const std::string& what) { throw VerificationFailure(leg, what); }

}  // namespace

bool ObstructionReport::all_legs_ok() const {
  return std::all_of(legs.begin(), legs.end(), [](const Leg& l) { return l.ok; });
}

void validate(const SearchConfig& config) {
  if (config.coeff_min > config.coeff_max) throw DomainError("empty coefficient range");
  if (config.tritangent_lo > config.tritangent_hi) throw DomainError("empty tritangent window");
  if (config.offdiag_bound < 0) throw DomainError("off-diagonal bound must be nonnegative");
  if (config.box == 0) throw DomainError("box must be positive");
  if (config.steps[5] && config.depth < 10) throw DomainError("step 5 needs counting depth >= 10");
  if (config.depth > 10) throw DomainError("counting depth above 10 is not supported");
}

std::optional<QuadricSextet> draw_sextet(const SearchConfig& config, unsigned draw) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(draw)};
  std::mt19937_64 rng(seq);
  std::array<std::array<BigInt, 6>, 6> rows;
  for (int k = 0; k < 6; ++k)
    for (int i = 0; i < 6; ++i) {
      const bool diagonal = i == 0 || i == 3 || i == 5;
      const std::int64_t lo = diagonal ? config.coeff_min : std::max(config.coeff_min, -config.offdiag_bound);
      const std::int64_t hi = diagonal ? config.coeff_max : std::min(config.coeff_max, config.offdiag_bound);
      const auto v = draw_in_class(rng, lo, hi, coefficient_class(k, i));
      if (!v) return std::nullopt;
      rows[k][i] = BigInt(std::to_string(*v));
    }
  return QuadricSextet::from_coefficients(rows);
}

SearchResult search(const SearchConfig& config, const std::function<void(const ObstructionReport&)>& on_report,
                    const std::function<void(const Rejection&)>& on_reject) {
  validate(config);
  SearchResult result;
  auto reject = [&](unsigned draw, unsigned step, std::string reason) {
    result.log.push_back({draw, step, std::move(reason)});
    if (on_reject) on_reject(result.log.back());
  };
  const unsigned total = static_cast<unsigned>(config.replay.size()) + config.draws;
  for (unsigned draw = 0; draw < total; ++draw) {
    QuadricSextet q;
    std::vector<BigInt> bad;
    if (draw < config.replay.size()) {
      q = config.replay[draw].sextet;
      bad = config.replay[draw].bad_primes;
    } else {
      auto drawn = draw_sextet(config, draw);
      if (!drawn) {
        reject(draw, 1, "coefficient range misses a forced congruence or sign class");
        continue;
      }
      q = *drawn;
    }
    try {
      result.reports.push_back(run_candidate(config, q, draw, bad));
      if (on_report) on_report(result.reports.back());
    } catch (const Reject& r) {
      reject(draw, r.step, r.reason);
    }
  }
  return result;
}

ObstructionReport verify_example(const ExampleFixture& fx, const VerifyOptions& options) {
  ObstructionReport rep;
  rep.sextet = fx.sextet;
  auto pass = [&](const std::string& leg, const std::string& detail) { rep.legs.push_back({leg, true, detail}); };

  const K3Surface X = build_k3(fx.sextet);
  const auto& f = X.branch;

  // Sextet hypotheses.
  if (!check_real_conditions(fx.sextet)) fail("sextet", "definiteness pattern fails");
  if (!check_2adic_conditions(fx.sextet)) fail("sextet", "2-adic coefficient conditions fail");
  rep.smooth_over_q = is_smooth_curve(f);
  if (!rep.smooth_over_q) fail("sextet", "branch curve singular over Q");
  rep.smooth_at_3 = is_smooth_mod(f, 3);
  if (!rep.smooth_at_3) fail("sextet", "branch curve singular mod 3");
  pass("sextet", "real and 2-adic conditions hold; smooth over Q and mod 3");

  // Factorization chain.
  {
    const auto sm = strip_small_factors(fx.m, options.trial_bound);
    const auto sn = strip_small_factors(fx.n, options.trial_bound);
    if (sm.factors != fx.m_small) fail("factorization", "small factors of m differ from the fixture");
    if (sn.factors != fx.n_small) fail("factorization", "small factors of n differ from the fixture");
    if (to_decimal(sm.cofactor).size() != fx.m_cofactor_digits)
      fail("factorization", "m' has " + std::to_string(to_decimal(sm.cofactor).size()) + " digits");
    if (to_decimal(sn.cofactor).size() != fx.n_cofactor_digits)
      fail("factorization", "n' has " + std::to_string(to_decimal(sn.cofactor).size()) + " digits");
    const BigInt g = cofactor_gcd(sm.cofactor, sn.cofactor);
    if (g != fx.gcd) fail("factorization", "gcd(m', n') differs from the fixture");
    if (!probable_prime(g)) fail("factorization", "gcd(m', n') is composite");
    if (!probable_prime(fx.large_prime)) fail("factorization", "the large prime factor is composite");
    for (const auto& pp : fx.m_cofactor)
      if (!probable_prime(pp.prime)) fail("factorization", "cofactor entry " + to_decimal(pp.prime) + " is composite");
    if (product(fx.m_cofactor) != sm.cofactor) fail("factorization", "m' is not the product of its listed factors");
    if (product(sm.factors) * product(fx.m_cofactor) != fx.m) fail("factorization", "factors do not multiply to m");
    std::set<BigInt> from_m;
    for (const auto& pp : sm.factors) from_m.insert(pp.prime);
    for (const auto& pp : fx.m_cofactor) from_m.insert(pp.prime);
    if (from_m != std::set<BigInt>(fx.bad_primes.begin(), fx.bad_primes.end()))
      fail("factorization", "bad-prime list is not the prime support of m");
    pass("factorization", "m = small factors * (large prime)^2 * gcd(m', n'), all prime");
  }

  // Bad primes and their singular loci.
  rep.bad_primes = verify_bad_prime_list(f, fx.bad_primes, fx.good_spot_checks);
  pass("bad-primes", std::to_string(fx.bad_primes.size()) + " bad, " + std::to_string(fx.good_spot_checks.size()) +
                         " spot-checked good");
  std::map<BigInt, SingularReport> singular;
  for (const auto& p : fx.bad_primes) {
    if (p == 2) continue;
    auto sr = singular_points(f, p);
    if (!sr.all_nodes_and_r_lt_8()) fail("singular", "mod " + to_decimal(p) + " the singular locus is not r < 8 nodes");
    singular.emplace(p, std::move(sr));
  }
  pass("singular", "every odd bad prime: r < 8 ordinary double points");

  // Local points.
  for (const auto& row : fx.local_points) {
    const auto pt = find_local_point(X, Place::finite(row.p), 1);
    if (!pt) fail("local-points", "no local point at " + to_decimal(row.p));
    if (pt->x != row.x || pt->f_value != row.f_value)
      fail("local-points", "witness at " + to_decimal(row.p) + " differs from the fixture");
  }
  try {
    rep.local = certify_everywhere_local(X, fx.bad_primes, 1);
  } catch (const Inconclusive& e) {
    fail("local-points", e.what());
  }
  rep.notes.push_back(step4_note());
  pass("local-points", std::to_string(fx.local_points.size()) + " witnesses reproduced");

  // Tritangent lines.
  for (const auto& t : fx.tritangents) {
    const auto scan = find_tritangent(f, t.p);
    if (t.line) {
      const PrimeField fp(t.p);
      const auto want = normalize_line(fp, {fp.reduce((*t.line)[0]), fp.reduce((*t.line)[1]), fp.reduce((*t.line)[2])});
      if (!scan.line || !(*scan.line == want)) fail("tritangent", "tritangent line mod " + to_decimal(t.p) + " differs");
    } else if (scan.line) {
      fail("tritangent", "unexpected tritangent line mod " + to_decimal(t.p));
    }
  }
  pass("tritangent", "lines match at every fixture prime");

  // Point counts.
  {
    const unsigned total = static_cast<unsigned>(fx.counts.size());
    const unsigned depth = options.full_count ? total : std::min(options.depth, total);
    CountSeries cs = depth > 0 ? count_series(f, fx.count_prime, depth, options.threads) : CountSeries{fx.count_prime, 0, {}, {}};
    for (unsigned n = 1; n <= depth; ++n)
      if (cs.counts[n - 1] != fx.counts[n - 1])
        fail("counts", "N_" + std::to_string(n) + " = " + to_decimal(cs.counts[n - 1]) + ", fixture says " +
                           to_decimal(fx.counts[n - 1]));
    for (unsigned n = depth + 1; n <= total; ++n) {
      if (!within_weil_bound(fx.counts[n - 1], fx.count_prime, n))
        fail("counts", "fixture N_" + std::to_string(n) + " violates the Weil bound");
      cs.counts.push_back(fx.counts[n - 1]);
    }
    cs.max_n = total;
    rep.counts = cs;
    rep.counts_recomputed_to = depth;
    pass("counts", "N_1..N_" + std::to_string(depth) + " recomputed" +
                       (depth < total ? ", N_" + std::to_string(depth + 1) + ".." + "N_" + std::to_string(total) +
                                            " fixture-checked"
                                      : ""));
  }

  // Characteristic polynomial.
  FrobeniusData fd;
  try {
    fd = frobenius_charpoly(*rep.counts);
  } catch (const Inconclusive& e) {
    fail("charpoly", e.what());
  }
  if (fd.sign != fx.charpoly_sign) fail("charpoly", "sign " + std::to_string(fd.sign));
  if (fd.normalized != fx.normalized_charpoly) fail("charpoly", "normalized polynomial differs from the fixture");
  const unsigned urb = unit_root_bound(fd);
  if (urb != fx.unit_root_bound) fail("charpoly", "unit-root bound " + std::to_string(urb));
  pass("charpoly", "sign " + std::to_string(fd.sign) + ", unit-root bound " + std::to_string(urb));

  try {
    rep.rank = certify_rank_one(X, fx.rank_p, fx.rank_p_prime, rep.counts, options.threads);
  } catch (const Inconclusive& e) {
    fail("rank", e.leg() + ": " + e.what());
  }
  pass("rank", "rho = 1");

  // Invariants.
  ProfileOptions popts;
  popts.samples = options.samples;
  popts.singular_reports = singular;
  try {
    rep.profile = invariant_profile(X, fx.bad_primes, popts);
  } catch (const Inconclusive& e) {
    fail("invariants", e.what());
  }
  for (const auto& [pl, pp] : rep.profile->places) {
    if (!pp.constant) fail("invariants", "not constant at " + pl.name());
    if (pp.basis == ConstancyBasis::empirical) fail("invariants", "constancy at " + pl.name() + " only empirical");
    const Invariant want = pl.is_real() ? fx.real_invariant : fx.finite_invariant;
    if (pp.value != want) fail("invariants", "value " + pp.value.to_string() + " at " + pl.name());
  }
  pass("invariants", "R -> " + fx.real_invariant.to_string() + ", finite places -> " + fx.finite_invariant.to_string());

  Verdict v;
  try {
    v = bm_verdict(*rep.profile);
  } catch (const Inconclusive& e) {
    fail("verdict", e.what());
  }
  if (to_string(v) != fx.verdict) fail("verdict", to_string(v));
  pass("verdict", to_string(v));
  rep.verdict = kCertified;
  return rep;
}

json to_json(const Rejection& r) {
  return {{"draw", r.draw}, {"step", r.step}, {"step_name", kStepNames[r.step]}, {"reason", r.reason}};
}

json to_json(const ObstructionReport& r) {
  json j;
  j["sextet"] = to_json(r.sextet);
  if (r.seed) j["seed"] = *r.seed;
  if (r.draw) j["draw"] = *r.draw;
  j["smooth_over_q"] = r.smooth_over_q;
  j["smooth_at_3"] = r.smooth_at_3;
  if (r.counts) {
    j["counts"] = to_json(*r.counts);
    j["counts_recomputed_to"] = r.counts_recomputed_to;
  }
  if (r.rank) j["rank"] = to_json(*r.rank);
  if (r.local) j["local_solubility"] = to_json(*r.local);
  if (r.bad_primes) j["bad_primes"] = to_json(*r.bad_primes);
  if (r.profile) j["invariant_profile"] = to_json(*r.profile);
  json legs = json::array();
  for (const auto& l : r.legs) legs.push_back({{"leg", l.name}, {"ok", l.ok}, {"detail", l.detail}});
  j["legs"] = legs;
  j["notes"] = r.notes;
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace k3bm
