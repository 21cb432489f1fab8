#pragma once

#include <nlohmann/json.hpp>

#include "k3bm/brauer.hpp"
#include "k3bm/picard.hpp"

namespace k3bm {

using json = nlohmann::ordered_json;

// Big integers are written as decimal strings; readers also accept JSON
// integers.
BigInt bigint_from_json(const json& j);
json to_json(const BigInt& n);
Rational rational_from_json(const json& j);  // "a/b", "a" or an integer
json to_json(const Rational& r);

// {"A": [6 coefficients], ..., "F": [...]} in the order x0^2, x0x1, x0x2,
// x1^2, x1x2, x2^2.
QuadricSextet sextet_from_json(const json& j);
json to_json(const QuadricSextet& q);

json to_json(const TernaryForm<BigInt>& f);  // {"degree", "coeffs"} in graded-lex order
json to_json(const ProjLine<BigInt>& line);
json to_json(const Place& place);
json to_json(const SurfacePoint& pt);

json to_json(const CountSeries& cs);
// {"p": ..., "N": [N_1, ...]}; `degrees` stays empty.
CountSeries count_series_from_json(const json& j);

json to_json(const FrobeniusData& fd);
json to_json(const TritangentScan& scan);
json to_json(const RankCertificate& cert);
json to_json(const SingularReport& rep);
json to_json(const BadPrimeAttestation& att);
json to_json(const LocalSolubilityAttestation& att);
json to_json(const InvariantProfile& profile);

}  // namespace k3bm
