#include "k3bm/picard.hpp"

#include "k3bm/badred.hpp"

namespace k3bm {

std::vector<ProjLine<BigInt>> enumerate_lines(const PrimeField& fp) {
  const BigInt& p = fp.modulus();
  std::vector<ProjLine<BigInt>> out;
  out.push_back({{0, 0, 1}});
  for (BigInt b = 0; b < p; ++b) out.push_back({{0, 1, b}});
  for (BigInt a = 0; a < p; ++a)
    for (BigInt b = 0; b < p; ++b) out.push_back({{1, a, b}});
  return out;
}

bool is_tritangent(const PrimeField& fp, const TernaryForm<BigInt>& f_mod_p, const ProjLine<BigInt>& line) {
  const auto r = restrict_to_line(fp, f_mod_p, line);
  if (r.identically_zero()) return false;
  const int deg = r.affine.degree();
  if ((static_cast<int>(r.form_degree) - deg) % 2 != 0) return false;
  if (deg == 0) return true;
  const auto sqf = squarefree_decomposition(fp, r.affine);
  for (const auto& [factor, mult] : sqf.factors)
    if (mult % 2 != 0) return false;
  return true;
}

TritangentScan find_tritangent(const TernaryForm<BigInt>& f, const BigInt& p) {
  if (p == 2) throw DomainError("find_tritangent: p must be odd");
  const PrimeField fp(p);
  const auto g = reduce_form(fp, f);
  TritangentScan scan;
  scan.p = p;
  for (const auto& line : enumerate_lines(fp)) {
    ++scan.lines_scanned;
    if (restrict_to_line(fp, g, line).identically_zero()) {
      scan.contained_lines.push_back(line);
      continue;
    }
    if (is_tritangent(fp, g, line)) {
      scan.line = line;
      break;
    }
  }
  return scan;
}

RankCertificate certify_rank_one(const K3Surface& X, const BigInt& p, const BigInt& p_prime,
                                 const std::optional<CountSeries>& counts, unsigned threads) {
  if (p == p_prime) throw DomainError("certify_rank_one: p and p' must be distinct");
  for (const BigInt* q : {&p, &p_prime}) {
    if (*q == 2 || !probable_prime(*q)) throw DomainError("certify_rank_one: " + to_decimal(*q) + " is not an odd prime");
    if (is_bad_prime(X.branch, *q))
      throw DomainError("certify_rank_one: bad reduction at " + to_decimal(*q));
  }
  RankCertificate cert;
  cert.p = p;
  cert.p_prime = p_prime;

  const auto at_p = find_tritangent(X.branch, p);
  if (!at_p.line) throw Inconclusive("tritangent-p", "no tritangent line mod " + to_decimal(p));
  cert.line = *at_p.line;

  if (counts && counts->p != p) throw DomainError("certify_rank_one: counts are for a different prime");
  const CountSeries series = counts ? *counts : count_series(X.branch, p, 10, threads);
  cert.frobenius = frobenius_charpoly(series);
  cert.unit_root_bound = unit_root_bound(cert.frobenius);
  if (cert.unit_root_bound != 2)
    throw Inconclusive("unit-root-bound", "bound " + std::to_string(cert.unit_root_bound) + " at " + to_decimal(p));

  const auto at_pp = find_tritangent(X.branch, p_prime);
  cert.lines_scanned_at_p_prime = at_pp.lines_scanned;
  if (at_pp.line) throw Inconclusive("tritangent-p-prime", "tritangent line mod " + to_decimal(p_prime));
  cert.rho = 1;
  return cert;
}

}  // namespace k3bm
