#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "k3bm/json_io.hpp"

namespace k3bm {

struct LocalPointRow {
  BigInt p;
  std::array<BigInt, 3> x;
  BigInt f_value;
};

struct TritangentExpectation {
  BigInt p;
  std::optional<std::array<BigInt, 3>> line;  // unnormalized, as printed
};

struct ExampleFixture {
  std::filesystem::path source;
  int format_version = 0;
  QuadricSextet sextet;

  BigInt m, n;
  std::vector<PrimePower> m_small, n_small;
  unsigned m_cofactor_digits = 0, n_cofactor_digits = 0;
  BigInt gcd, large_prime;
  std::vector<PrimePower> m_cofactor;

  std::vector<BigInt> bad_primes;
  std::vector<BigInt> good_spot_checks;

  BigInt count_prime;
  std::vector<BigInt> counts;  // N_1..N_10

  int charpoly_sign = 0;
  unsigned unit_root_bound = 0;
  std::vector<Rational> normalized_charpoly;  // low first, degree 22

  std::vector<TritangentExpectation> tritangents;
  BigInt rank_p, rank_p_prime;
  std::vector<LocalPointRow> local_points;
  Invariant real_invariant, finite_invariant;
  std::string verdict;
};

// $K3BM_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path default_data_dir();
std::filesystem::path example_fixture_path(const std::filesystem::path& data_dir = default_data_dir());

// Throws DomainError on missing or malformed fields.
ExampleFixture parse_example_fixture(const json& j);
ExampleFixture load_example_fixture(const std::filesystem::path& path = example_fixture_path());

json read_json_file(const std::filesystem::path& path);
// One decimal integer per line; blank lines and lines starting with '#' skipped.
std::vector<BigInt> read_prime_list(const std::filesystem::path& path);

}  // namespace k3bm
