#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3bm/badred.hpp"
#include "k3bm/localfield.hpp"
#include "k3bm/surface.hpp"

namespace k3bm {

struct MinorTriple {
  TernaryForm<BigInt> MA;  // 4DF - E^2
  TernaryForm<BigInt> MD;  // 4AF - C^2
  TernaryForm<BigInt> MF;  // 4AD - B^2
};

MinorTriple minors(const QuadricSextet& q);

// Selection order: (-MF, A), (-MA, D), (-MD, F), (-MD, A), (-MF, D), (-MA, F).
enum class RepTag { MF_A, MA_D, MD_F, MD_A, MF_D, MA_F };
std::string to_string(RepTag tag);

struct QuaternionRep {
  TernaryForm<BigInt> left;
  TernaryForm<BigInt> right;
  RepTag tag;
};

std::array<QuaternionRep, 6> representatives(const QuadricSextet& q);

// Integer triple on w^2 = f, certified local at `place`: f(x) is a nonzero
// square in the completion (f(x) > 0 at R).
struct SurfacePoint {
  std::array<BigInt, 3> x;
  BigInt f_value;
  Place place;
};

struct InvariantValue {
  Invariant value;
  RepTag used;
};

// Throws DomainError when f(x) is not a local square at `place`, and
// Inconclusive("indeterminate at point") when all six representatives have
// a vanishing entry.
InvariantValue evaluate_invariant_at(const QuadricSextet& q, const std::array<BigInt, 3>& x, const Place& place);
inline Invariant evaluate_invariant(const QuadricSextet& q, const SurfacePoint& P, const Place& place) {
  return evaluate_invariant_at(q, P.x, place).value;
}

// Lexicographic scan of [-box, box]^3 without the zero triple; of each pair
// {x, -x} only the lexicographically smaller one is visited.
std::optional<SurfacePoint> find_local_point(const K3Surface& X, const Place& place, unsigned box);

struct LocalSolubilityAttestation {
  std::vector<SurfacePoint> witnesses;  // one per checked place, in place order
  std::vector<std::string> rules;       // how unchecked places are covered
};

// Checks R, every prime <= 19 and every listed bad prime. Throws
// Inconclusive("local-solubility", ...) naming the first place that fails.
LocalSolubilityAttestation certify_everywhere_local(const K3Surface& X, const std::vector<BigInt>& bad_primes,
                                                    unsigned box = 1);

enum class ConstancyBasis {
  good_reduction,      // invariant vanishes identically at good odd primes
  real_lemma,          // definiteness conditions hold at R
  two_adic_lemma,      // coefficient conditions hold at 2
  nodal_bad_reduction, // singular locus is r < 8 nodes
  empirical            // sampled only
};
std::string to_string(ConstancyBasis b);

struct PlaceProfile {
  Invariant value;
  ConstancyBasis basis = ConstancyBasis::empirical;
  bool constant = true;                  // all evaluations agreed
  std::vector<SurfacePoint> evaluated;   // witness first, then samples
  std::vector<Invariant> values;         // parallel to `evaluated`
  std::optional<SingularReport> singular;  // odd bad primes
};

struct InvariantProfile {
  std::map<Place, PlaceProfile> places;
  std::vector<std::string> attestation;  // rules covering places absent from the map
  std::uint64_t seed = 0;
};

struct ProfileOptions {
  unsigned samples = 25;
  unsigned box = 1;
  unsigned degree_bound = 6;
  std::uint64_t seed = 0x6b33626d;
  // Reuse singular reports computed elsewhere, keyed by prime.
  std::map<BigInt, SingularReport> singular_reports;
};

// Evaluates the invariant at R, at 2 and at each odd bad prime on a witness
// point plus sampled points; all other places are covered by the
// good-reduction rule. Throws Inconclusive when a place has no local point.
InvariantProfile invariant_profile(const K3Surface& X, const std::vector<BigInt>& bad_primes,
                                   const ProfileOptions& options = {});

// Sampled local points: random integer triples from [-range, range]^3.
std::vector<SurfacePoint> sample_local_points(const K3Surface& X, const Place& place, unsigned count,
                                              std::uint64_t seed, unsigned range = 50);

enum class Verdict { obstruction, no_obstruction_from_class };
std::string to_string(Verdict v);

// Throws Inconclusive("invariant not constant at place ...").
Verdict bm_verdict(const InvariantProfile& profile);

}  // namespace k3bm
