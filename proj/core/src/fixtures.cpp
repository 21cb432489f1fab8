#include "k3bm/fixtures.hpp"

#include <cstdlib>
#include <fstream>

namespace k3bm {

namespace {

std::vector<PrimePower> prime_powers(const json& j) {
  std::vector<PrimePower> out;
  for (const auto& e : j) out.push_back({bigint_from_json(e.at(0)), e.at(1).get<unsigned>()});
  return out;
}

Invariant invariant_from(const std::string& s) {
  if (s == "0") return Invariant::zero();
  if (s == "1/2") return Invariant::one_half();
  throw DomainError("invariant must be \"0\" or \"1/2\", got " + s);
}

std::array<BigInt, 3> triple(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("expected a triple, got " + j.dump());
  return {bigint_from_json(j[0]), bigint_from_json(j[1]), bigint_from_json(j[2])};
}

std::vector<Rational> charpoly_from_factors(const json& j) {
  const RationalField Q;
  UniPoly<Rational> acc = constant_poly(Q, rational_from_json(j.at("scale")));
  for (const auto& lin : j.at("linear")) {
    UniPoly<Rational> l({rational_from_json(lin.at(0)), rational_from_json(lin.at(1))});
    acc = poly_mul(Q, acc, l);
  }
  std::vector<Rational> high_first;
  for (const auto& c : j.at("degree20_high_first")) high_first.push_back(rational_from_json(c));
  UniPoly<Rational> big(std::vector<Rational>(high_first.rbegin(), high_first.rend()));
  acc = poly_mul(Q, acc, trim(Q, big));
  return acc.coeffs;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("K3BM_DATA_DIR"); env && *env) return env;
#ifdef K3BM_DEFAULT_DATA_DIR
  return K3BM_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::filesystem::path example_fixture_path(const std::filesystem::path& data_dir) {
  return data_dir / "v1" / "example.json";
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

std::vector<BigInt> read_prime_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  std::vector<BigInt> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_bigint(line));
  }
  return out;
}

ExampleFixture parse_example_fixture(const json& j) {
  ExampleFixture fx;
  try {
    fx.format_version = j.at("format_version").get<int>();
    if (fx.format_version != 1) throw DomainError("unsupported fixture format " + std::to_string(fx.format_version));
    fx.sextet = sextet_from_json(j.at("sextet"));

    const auto& fac = j.at("factorization");
    fx.m = bigint_from_json(fac.at("m"));
    fx.n = bigint_from_json(fac.at("n"));
    fx.m_small = prime_powers(fac.at("m_small"));
    fx.n_small = prime_powers(fac.at("n_small"));
    fx.m_cofactor_digits = fac.at("m_cofactor_digits").get<unsigned>();
    fx.n_cofactor_digits = fac.at("n_cofactor_digits").get<unsigned>();
    fx.gcd = bigint_from_json(fac.at("gcd"));
    fx.large_prime = bigint_from_json(fac.at("large_prime"));
    fx.m_cofactor = prime_powers(fac.at("m_cofactor"));

    for (const auto& p : j.at("bad_primes")) fx.bad_primes.push_back(bigint_from_json(p));
    for (const auto& p : j.at("good_spot_checks")) fx.good_spot_checks.push_back(bigint_from_json(p));

    fx.count_prime = bigint_from_json(j.at("counts").at("p"));
    for (const auto& c : j.at("counts").at("N")) fx.counts.push_back(bigint_from_json(c));

    const auto& cp = j.at("charpoly");
    fx.charpoly_sign = cp.at("sign").get<int>();
    fx.unit_root_bound = cp.at("unit_root_bound").get<unsigned>();
    fx.normalized_charpoly = charpoly_from_factors(cp.at("normalized_factors"));

    for (const auto& t : j.at("tritangent")) {
      TritangentExpectation e{bigint_from_json(t.at("p")), std::nullopt};
      if (!t.at("line").is_null()) e.line = triple(t.at("line"));
      fx.tritangents.push_back(e);
    }
    fx.rank_p = bigint_from_json(j.at("rank_primes").at("p"));
    fx.rank_p_prime = bigint_from_json(j.at("rank_primes").at("p_prime"));

    for (const auto& row : j.at("local_points"))
      fx.local_points.push_back({bigint_from_json(row.at("place")), triple(row.at("x")), bigint_from_json(row.at("f"))});

    fx.real_invariant = invariant_from(j.at("invariants").at("R").get<std::string>());
    fx.finite_invariant = invariant_from(j.at("invariants").at("finite").get<std::string>());
    fx.verdict = j.at("verdict").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed fixture: ") + e.what());
  }
  return fx;
}

ExampleFixture load_example_fixture(const std::filesystem::path& path) {
  ExampleFixture fx = parse_example_fixture(read_json_file(path));
  fx.source = path;
  return fx;
}

}  // namespace k3bm
