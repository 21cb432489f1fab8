#include "k3bm/finitefield.hpp"

#include <mutex>

namespace k3bm {

namespace {

BigInt mod_p(const BigInt& v, const BigInt& p) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

// Word-sized arithmetic for building tables: q <= 2^20.
struct SmallArith {
  std::uint64_t p;
  unsigned n;
  std::vector<std::uint64_t> modulus;  // monic, n + 1 entries

  std::vector<std::uint64_t> decode(std::uint64_t idx) const {
    std::vector<std::uint64_t> c(n);
    for (unsigned i = 0; i < n; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& c) const {
    std::uint64_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * p + c[i];
    return idx;
  }
  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (unsigned k = 2 * n - 1; k-- > n;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[k - n + j] = (prod[k - n + j] + (p - c) * modulus[j]) % p;
    }
    prod.resize(n);
    return prod;
  }
  std::vector<std::uint64_t> pow(std::vector<std::uint64_t> a, std::uint64_t e) const {
    std::vector<std::uint64_t> acc(n, 0);
    acc[0] = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return acc;
  }
};

std::shared_ptr<const FieldTables> build_tables(const BigInt& p, unsigned n, const std::vector<BigInt>& modulus) {
  SmallArith ar{p.get_ui(), n, {}};
  for (const auto& c : modulus) ar.modulus.push_back(c.get_ui());
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= ar.p;
  std::vector<std::uint64_t> prime_divisors;
  {
    std::uint64_t m = q - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      prime_divisors.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1) prime_divisors.push_back(m);
  }
  std::vector<std::uint64_t> one(n, 0);
  one[0] = 1;
  std::uint64_t prim = 0;
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    const auto e = ar.decode(cand);
    bool ok = true;
    for (auto r : prime_divisors)
      if (ar.pow(e, (q - 1) / r) == one) {
        ok = false;
        break;
      }
    if (ok) {
      prim = cand;
      break;
    }
  }
  auto t = std::make_shared<FieldTables>();
  t->p = static_cast<std::uint32_t>(ar.p);
  t->q = static_cast<std::uint32_t>(q);
  t->primitive_index = static_cast<std::uint32_t>(prim);
  t->log_of.assign(q, t->zero_log());
  t->exp_of.resize(q - 1);
  const auto g = ar.decode(prim);
  auto cur = one;
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    const std::uint64_t idx = ar.encode(cur);
    t->exp_of[k] = static_cast<std::uint32_t>(idx);
    t->log_of[idx] = static_cast<std::uint32_t>(k);
    cur = ar.mul(cur, g);
  }
  t->zech.resize(q - 1);
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    const std::uint64_t idx = t->exp_of[k];
    const std::uint64_t c0 = idx % ar.p;
    const std::uint64_t plus_one = idx - c0 + (c0 + 1) % ar.p;
    t->zech[k] = t->log_of[plus_one];
  }
  return t;
}

}  // namespace

bool is_irreducible(const PrimeField& fp, const UniPoly<BigInt>& g) {
  const int n = g.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto x = poly_x(fp);
  const auto monic = poly_monic(fp, g);
  auto frob_power = [&](int k) {
    auto r = x;
    for (int i = 0; i < k; ++i) r = poly_powmod(fp, r, fp.modulus(), monic);
    return r;
  };
  if (!poly_sub(fp, frob_power(n), poly_rem(fp, x, monic)).is_zero()) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    auto h = poly_sub(fp, frob_power(n / r), x);
    if (poly_gcd(fp, monic, h).degree() != 0) return false;
  }
  return true;
}

std::vector<BigInt> smallest_irreducible(const PrimeField& fp, unsigned n) {
  if (n == 0) throw DomainError("extension degree must be >= 1");
  const BigInt& p = fp.modulus();
  const BigInt base = p <= 65536 ? p : BigInt(64);
  for (BigInt k = 0;; ++k) {
    std::vector<BigInt> c(n + 1);
    BigInt rest = k;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = rest % base;
      rest /= base;
    }
    if (rest != 0) break;
    c[n] = 1;
    if (is_irreducible(fp, UniPoly<BigInt>(c))) return c;
  }
  throw DomainError("no irreducible polynomial found in the search range");
}

FqField::FqField(const BigInt& p, unsigned n, bool build) : p_(p), n_(n), fp_(p) {
  if (n == 0) throw DomainError("extension degree must be >= 1");
  mpz_pow_ui(q_.get_mpz_t(), p_.get_mpz_t(), n_);
  modulus_ = smallest_irreducible(fp_, n_);
  if (build && q_ <= (1u << 20)) tables_ = build_tables(p_, n_, modulus_);
}

FqField make_field(const BigInt& p, unsigned n) { return FqField(p, n); }

FqElem FqField::from_int(const BigInt& v) const {
  Elem r = zero();
  r.c[0] = mod_p(v, p_);
  return r;
}

FqElem FqField::from_coeffs(std::vector<BigInt> c) const {
  if (c.size() > n_) {
    auto r = poly_rem(fp_, trim(fp_, UniPoly<BigInt>(c)), UniPoly<BigInt>(modulus_));
    c = r.coeffs;
  }
  c.resize(n_, BigInt(0));
  for (auto& x : c) x = mod_p(x, p_);
  return Elem{std::move(c)};
}

FqElem FqField::generator() const {
  std::vector<BigInt> c(n_ + 1, BigInt(0));
  c[1] = 1;
  return from_coeffs(std::move(c));
}

FqElem FqField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (unsigned i = 0; i < n_; ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  return r;
}

FqElem FqField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (unsigned i = 0; i < n_; ++i) {
    r.c[i] -= b.c[i];
    if (r.c[i] < 0) r.c[i] += p_;
  }
  return r;
}

FqElem FqField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& x : r.c)
    if (x != 0) x = p_ - x;
  return r;
}

FqElem FqField::mul(const Elem& a, const Elem& b) const {
  if (n_ == 1) return Elem{{mod_p(a.c[0] * b.c[0], p_)}};
  std::vector<BigInt> prod(2 * n_ - 1, BigInt(0));
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    const BigInt c = mod_p(prod[k], p_);
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[k - n_ + j] -= c * modulus_[j];
  }
  prod.resize(n_);
  for (auto& x : prod) x = mod_p(x, p_);
  return Elem{std::move(prod)};
}

FqElem FqField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in F_q");
  const auto r = poly_inverse_mod(fp_, trim(fp_, UniPoly<BigInt>(a.c)), UniPoly<BigInt>(modulus_));
  return from_coeffs(r.coeffs);
}

FqElem FqField::pow(const Elem& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem acc = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mul(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, a);
  }
  return acc;
}

FqElem FqField::pth_root(const Elem& a) const {
  Elem r = a;
  for (unsigned i = 1; i < n_; ++i) r = frobenius(r);
  return r;
}

FqElem FqField::random(std::mt19937_64& g) const {
  Elem r = zero();
  for (auto& x : r.c) x = fp_.random(g);
  return r;
}

bool FqField::is_zero(const Elem& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

unsigned FqField::element_degree(const Elem& a) const {
  Elem r = a;
  for (unsigned d = 1; d <= n_; ++d) {
    r = frobenius(r);
    if (n_ % d == 0 && r == a) return d;
  }
  return n_;
}

std::uint64_t FqField::index(const Elem& a) const {
  if (!indexable()) throw DomainError("field too large for index encoding");
  const std::uint64_t p = p_.get_ui();
  std::uint64_t idx = 0;
  for (unsigned i = n_; i-- > 0;) idx = idx * p + a.c[i].get_ui();
  return idx;
}

FqElem FqField::from_index(std::uint64_t idx) const {
  if (!indexable()) throw DomainError("field too large for index encoding");
  const std::uint64_t p = p_.get_ui();
  Elem r = zero();
  for (unsigned i = 0; i < n_; ++i) {
    r.c[i] = static_cast<unsigned long>(idx % p);
    idx /= p;
  }
  return r;
}

const FieldTables& FqField::tables() const {
  if (!tables_) throw DomainError("field has no discrete-log tables");
  return *tables_;
}

std::shared_ptr<const FqField> shared_field(const BigInt& p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<std::string, unsigned>, std::shared_ptr<const FqField>> cache;
  const auto key = std::make_pair(to_decimal(p), e);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const FqField>(p, e);
  std::lock_guard lock(mu);
  return cache.emplace(key, field).first->second;
}

FqElem lift_to(const FqField& field, const BigInt& v) { return field.from_int(v); }

UniPoly<FqElem> lift_poly(const FqField& field, const UniPoly<BigInt>& g) {
  UniPoly<FqElem> r;
  for (const auto& c : g.coeffs) r.coeffs.push_back(field.from_int(c));
  return trim(field, std::move(r));
}

ExtensionRoots roots_in_extensions(const PrimeField& fp, const UniPoly<BigInt>& g, unsigned max_degree) {
  if (g.is_zero()) throw DomainError("roots_in_extensions: zero polynomial");
  ExtensionRoots out;
  if (g.degree() <= 0) return out;
  const auto dec = squarefree_decomposition(fp, g);
  for (const auto& [h, mult] : dec.factors) {
    const auto ddf = distinct_degree_factorization(fp, h, max_degree);
    for (const auto& [deg, part] : ddf.parts) {
      auto field = shared_field(fp.modulus(), deg);
      for (auto& r : roots_in_field(*field, lift_poly(*field, part)))
        out.roots.push_back({field, std::move(r), deg, mult});
    }
    if (ddf.remainder.degree() > 0) out.unresolved_degree += static_cast<unsigned>(ddf.remainder.degree()) * mult;
  }
  std::stable_sort(out.roots.begin(), out.roots.end(),
                   [](const ExtensionRoot& a, const ExtensionRoot& b) { return a.degree < b.degree; });
  return out;
}

}  // namespace k3bm
