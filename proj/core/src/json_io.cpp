#include "k3bm/json_io.hpp"

namespace k3bm {

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  throw DomainError("expected an integer or a decimal string, got " + j.dump());
}

json to_json(const BigInt& n) { return to_decimal(n); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(bigint_from_json(j));
}

json to_json(const Rational& r) { return to_string(r); }

QuadricSextet sextet_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("sextet must be a JSON object");
  std::array<std::array<BigInt, 6>, 6> rows;
  for (std::size_t k = 0; k < 6; ++k) {
    const char* name = kQuadricNames[k];
    if (!j.contains(name)) throw DomainError(std::string("sextet is missing ") + name);
    const auto& c = j.at(name);
    if (!c.is_array() || c.size() != 6)
      throw DomainError(std::string("sextet entry ") + name + " needs 6 coefficients");
    for (std::size_t i = 0; i < 6; ++i) rows[k][i] = bigint_from_json(c[i]);
  }
  return QuadricSextet::from_coefficients(rows);
}

json to_json(const QuadricSextet& q) {
  json j = json::object();
  const auto rows = q.coefficients();
  for (std::size_t k = 0; k < 6; ++k) {
    json c = json::array();
    for (const auto& x : rows[k]) {
      if (x.fits_slong_p())
        c.push_back(x.get_si());
      else
        c.push_back(to_decimal(x));
    }
    j[kQuadricNames[k]] = c;
  }
  return j;
}

json to_json(const TernaryForm<BigInt>& f) {
  json c = json::array();
  for (const auto& x : f.coeffs) c.push_back(to_decimal(x));
  return {{"degree", f.degree}, {"coeffs", c}};
}

json to_json(const ProjLine<BigInt>& line) {
  return json::array({to_decimal(line.l[0]), to_decimal(line.l[1]), to_decimal(line.l[2])});
}

json to_json(const Place& place) { return place.name(); }

json to_json(const SurfacePoint& pt) {
  return {{"place", pt.place.name()},
          {"x", json::array({to_decimal(pt.x[0]), to_decimal(pt.x[1]), to_decimal(pt.x[2])})},
          {"f", to_decimal(pt.f_value)}};
}

json to_json(const CountSeries& cs) {
  json N = json::array();
  for (const auto& c : cs.counts) N.push_back(to_decimal(c));
  json j = {{"p", to_decimal(cs.p)}, {"max_n", cs.max_n}, {"N", N}};
  if (!cs.degrees.empty()) {
    json d = json::array();
    for (const auto& s : cs.degrees)
      d.push_back({{"d", s.d}, {"points", s.points}, {"zeros", s.zeros}, {"chi_sum", s.chi_sum}});
    j["degree_sums"] = d;
  }
  return j;
}

CountSeries count_series_from_json(const json& j) {
  CountSeries cs;
  cs.p = bigint_from_json(j.at("p"));
  for (const auto& n : j.at("N")) cs.counts.push_back(bigint_from_json(n));
  cs.max_n = static_cast<unsigned>(cs.counts.size());
  return cs;
}

json to_json(const FrobeniusData& fd) {
  json a = json::array(), b = json::array();
  for (const auto& x : fd.a) a.push_back(to_string(x));
  for (const auto& x : fd.normalized) b.push_back(to_string(x));
  return {{"q", to_decimal(fd.q)}, {"sign", fd.sign}, {"coefficients_low_first", a}, {"normalized_low_first", b}};
}

json to_json(const TritangentScan& scan) {
  json contained = json::array();
  for (const auto& l : scan.contained_lines) contained.push_back(to_json(l));
  return {{"p", to_decimal(scan.p)},
          {"line", scan.line ? to_json(*scan.line) : json(nullptr)},
          {"lines_scanned", scan.lines_scanned},
          {"contained_lines", contained}};
}

json to_json(const RankCertificate& cert) {
  return {{"p", to_decimal(cert.p)},
          {"tritangent_line", to_json(cert.line)},
          {"frobenius", to_json(cert.frobenius)},
          {"unit_root_bound", cert.unit_root_bound},
          {"p_prime", to_decimal(cert.p_prime)},
          {"lines_scanned_at_p_prime", cert.lines_scanned_at_p_prime},
          {"rho", cert.rho}};
}

namespace {

json fq_to_json(const FqElem& e) {
  if (e.c.size() <= 1) return to_decimal(e.c.empty() ? BigInt(0) : e.c[0]);
  json c = json::array();
  for (const auto& x : e.c) c.push_back(to_decimal(x));
  return c;
}

}  // namespace

json to_json(const SingularReport& rep) {
  json pts = json::array();
  for (const auto& pt : rep.points) {
    json modulus = json::array();
    for (const auto& c : pt.field->modulus()) modulus.push_back(to_decimal(c));
    pts.push_back({{"degree", pt.degree},
                   {"kind", pt.kind == SingularPoint::Kind::node ? "node" : "non-node"},
                   {"coords", json::array({fq_to_json(pt.coords[0]), fq_to_json(pt.coords[1]), fq_to_json(pt.coords[2])})},
                   {"field_modulus_low_first", modulus}});
  }
  json j = {{"p", to_decimal(rep.p)},
            {"degree_bound", rep.degree_bound},
            {"r", rep.r()},
            {"unresolved", rep.unresolved},
            {"all_nodes_and_r_lt_8", rep.all_nodes_and_r_lt_8()},
            {"points", pts}};
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json to_json(const BadPrimeAttestation& att) {
  json bad = json::array(), good = json::array();
  for (const auto& p : att.bad_confirmed) bad.push_back(to_decimal(p));
  for (const auto& p : att.good_confirmed) good.push_back(to_decimal(p));
  return {{"bad_confirmed", bad}, {"good_confirmed", good}, {"completeness_note", att.completeness_note}};
}

json to_json(const LocalSolubilityAttestation& att) {
  json w = json::array();
  for (const auto& pt : att.witnesses) w.push_back(to_json(pt));
  return {{"witnesses", w}, {"rules", att.rules}};
}

json to_json(const InvariantProfile& profile) {
  json places = json::array();
  for (const auto& [place, pp] : profile.places) {
    json values = json::array();
    for (const auto& v : pp.values) values.push_back(v.to_string());
    json j = {{"place", place.name()},
              {"value", pp.value.to_string()},
              {"basis", to_string(pp.basis)},
              {"constant", pp.constant},
              {"witness", pp.evaluated.empty() ? json(nullptr) : to_json(pp.evaluated.front())},
              {"evaluations", pp.values.size()},
              {"values", values}};
    if (pp.singular) j["singular"] = to_json(*pp.singular);
    places.push_back(j);
  }
  return {{"seed", profile.seed}, {"places", places}, {"attestation", profile.attestation}};
}

}  // namespace k3bm
