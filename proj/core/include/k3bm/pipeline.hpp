#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3bm/fixtures.hpp"

namespace k3bm {

inline constexpr const char* kCertified = "obstruction certified";

struct ReplayEntry {
  QuadricSextet sextet;
  std::vector<BigInt> bad_primes;  // empty: use the bounded scan of step 6
};

struct SearchConfig {
  std::uint64_t seed = 1;
  std::int64_t coeff_min = -40;
  std::int64_t coeff_max = 40;
  std::int64_t offdiag_bound = 16;  // |x_i x_j coefficient| for i != j, further clipped to the range
  unsigned draws = 20;
  unsigned tritangent_lo = 5;  // window for p'
  unsigned tritangent_hi = 100;
  unsigned box = 1;
  unsigned depth = 10;           // point counts over F_{3^n}, n <= depth
  std::uint32_t bad_prime_scan = 1000;
  unsigned samples = 25;
  unsigned threads = 1;
  std::array<bool, 8> steps{true, true, true, true, true, true, true, true};  // index 1..7
  std::vector<ReplayEntry> replay;  // examined before the random draws
};

// Throws DomainError for an unusable config.
void validate(const SearchConfig& config);

struct Leg {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ObstructionReport {
  QuadricSextet sextet;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> draw;
  bool smooth_over_q = false;
  bool smooth_at_3 = false;
  std::optional<CountSeries> counts;
  unsigned counts_recomputed_to = 0;  // n above this were taken from fixtures
  std::optional<RankCertificate> rank;
  std::optional<LocalSolubilityAttestation> local;
  std::optional<BadPrimeAttestation> bad_primes;
  std::optional<InvariantProfile> profile;
  std::vector<Leg> legs;
  std::vector<std::string> notes;
  std::string verdict;

  bool all_legs_ok() const;
};

json to_json(const ObstructionReport& report);

struct Rejection {
  unsigned draw = 0;
  unsigned step = 0;
  std::string reason;
};

json to_json(const Rejection& r);

struct SearchResult {
  std::vector<ObstructionReport> reports;
  std::vector<Rejection> log;
};

// Draws sextets honoring the 2-adic congruences and the definiteness sign
// pattern, then filters them through steps 1-7. Deterministic given the
// config. Callbacks, when set, see every report and rejection as it happens.
SearchResult search(const SearchConfig& config,
                    const std::function<void(const ObstructionReport&)>& on_report = {},
                    const std::function<void(const Rejection&)>& on_reject = {});

// Step 1 draw for index `draw`; nullopt when the coefficient range has no
// value in some forced congruence class.
std::optional<QuadricSextet> draw_sextet(const SearchConfig& config, unsigned draw);

struct VerifyOptions {
  unsigned depth = 7;  // counts above depth are fixture-checked
  bool full_count = false;
  unsigned threads = 1;
  unsigned samples = 25;
  std::uint32_t trial_bound = 1000000;
};

// Re-derives every leg of the worked example from the fixture. Throws
// VerificationFailure naming the first leg that disagrees.
ObstructionReport verify_example(const ExampleFixture& fixture, const VerifyOptions& options = {});

}  // namespace k3bm
