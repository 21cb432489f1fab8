#include <numeric>
#include <thread>

#include "k3bm/finitefield.hpp"
#include "k3bm/picard.hpp"

namespace k3bm {

namespace {

// Arithmetic on discrete logs; `zero` is the sentinel q - 1.
struct LogArith {
  std::uint32_t q1;
  const std::uint32_t* zech;

  std::uint32_t zero() const { return q1; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == q1 || b == q1) return q1;
    std::uint32_t s = a + b;
    return s >= q1 ? s - q1 : s;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == q1) return b;
    if (b == q1) return a;
    std::uint32_t diff = b >= a ? b - a : b + q1 - a;
    std::uint32_t z = zech[diff];
    if (z == q1) return q1;
    std::uint32_t s = a + z;
    return s >= q1 ? s - q1 : s;
  }
};

struct Accum {
  std::uint64_t points = 0;
  std::uint64_t zeros = 0;
  std::int64_t chi = 0;
  void add(std::uint32_t value_log, std::uint32_t zero_log, std::uint64_t weight) {
    points += weight;
    if (value_log == zero_log)
      zeros += weight;
    else
      chi += (value_log & 1u) ? -static_cast<std::int64_t>(weight) : static_cast<std::int64_t>(weight);
  }
  void merge(const Accum& o) {
    points += o.points;
    zeros += o.zeros;
    chi += o.chi;
  }
};

struct Context {
  std::shared_ptr<const FqField> field;
  const FieldTables* t = nullptr;
  LogArith ar{};
  unsigned d = 0;
  std::uint64_t p = 0;
  // a[j][k]: log of the coefficient of x0^{6-j-k} x1^j x2^k.
  std::array<std::array<std::uint32_t, 7>, 7> a{};
  std::vector<std::uint8_t> degree_of_log;  // index q - 1 is zero, degree 1

  std::uint32_t log_of_int(const BigInt& c) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    return t->log_of[r.get_ui()];
  }
};

Context make_context(const TernaryForm<BigInt>& f, const BigInt& p, unsigned d) {
  if (p == 2) throw DomainError("point counting in characteristic 2 is unsupported");
  if (f.degree != 6) throw DomainError("point counting expects a sextic");
  Context c;
  c.field = shared_field(p, d);
  if (!c.field->has_tables()) throw DomainError("point counting needs q <= 2^20");
  c.t = &c.field->tables();
  c.ar = {c.t->q - 1, c.t->zech.data()};
  c.d = d;
  c.p = p.get_ui();
  for (unsigned j = 0; j <= 6; ++j)
    for (unsigned k = 0; k <= 6; ++k)
      c.a[j][k] = j + k <= 6 ? c.log_of_int(f.at({6 - j - k, j, k})) : c.ar.zero();
  const std::uint32_t q1 = c.t->q - 1;
  c.degree_of_log.assign(q1 + 1, 1);
  std::vector<unsigned> divisors;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) divisors.push_back(e);
  for (std::uint32_t k = 0; k < q1; ++k) {
    std::uint64_t pe = 1;
    for (unsigned e : divisors) {
      pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= c.p;
      const std::uint64_t m = q1 / (pe - 1);
      if (k % m == 0) {
        c.degree_of_log[k] = static_cast<std::uint8_t>(e);
        break;
      }
    }
  }
  return c;
}

// Coefficients of f(1, y, z) as a polynomial in z, in log form.
std::array<std::uint32_t, 7> z_coefficients(const Context& c, std::uint32_t y_log) {
  std::array<std::uint32_t, 7> out;
  for (unsigned k = 0; k <= 6; ++k) {
    std::uint32_t acc = c.ar.zero();
    for (unsigned j = 6 - k + 1; j-- > 0;) acc = c.ar.add(c.ar.mul(acc, y_log), c.a[j][k]);
    out[k] = acc;
  }
  return out;
}

std::uint32_t horner(const LogArith& ar, const std::array<std::uint32_t, 7>& cz, std::uint32_t z_log) {
  std::uint32_t acc = cz[6];
  for (unsigned k = 6; k-- > 0;) acc = ar.add(ar.mul(acc, z_log), cz[k]);
  return acc;
}

struct YEntry {
  std::uint32_t log;
  std::uint32_t weight;
  unsigned degree;
};

// Sum over points [1 : y : z] for the given y entries; when exact_degree is
// nonzero only points whose minimal field has that degree are kept.
Accum affine_chart(const Context& c, const std::vector<YEntry>& ys, unsigned exact_degree, unsigned threads) {
  const std::uint32_t q1 = c.ar.q1;
  auto work = [&](std::size_t begin, std::size_t stride, Accum& acc) {
    for (std::size_t i = begin; i < ys.size(); i += stride) {
      const YEntry& y = ys[i];
      const auto cz = z_coefficients(c, y.log);
      const bool filter = exact_degree != 0 && y.degree != exact_degree;
      // z = 0 has degree 1.
      if (!filter || std::lcm(y.degree, 1u) == exact_degree) acc.add(cz[0], q1, y.weight);
      for (std::uint32_t z = 0; z < q1; ++z) {
        if (filter && std::lcm(y.degree, static_cast<unsigned>(c.degree_of_log[z])) != exact_degree) continue;
        acc.add(horner(c.ar, cz, z), q1, y.weight);
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<Accum> parts(threads);
  if (threads == 1) {
    work(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads, std::ref(parts[t]));
    for (auto& th : pool) th.join();
  }
  Accum total;
  for (const auto& a : parts) total.merge(a);
  return total;
}

// Points [0 : 1 : z] (with the given exact degree, or all when 0) and [0 : 0 : 1].
Accum line_at_infinity(const Context& c, unsigned exact_degree) {
  const std::uint32_t q1 = c.ar.q1;
  std::array<std::uint32_t, 7> cz;
  for (unsigned k = 0; k <= 6; ++k) cz[k] = c.a[6 - k][k];
  Accum acc;
  if (exact_degree <= 1) acc.add(cz[0], q1, 1);
  for (std::uint32_t z = 0; z < q1; ++z) {
    if (exact_degree != 0 && c.degree_of_log[z] != exact_degree) continue;
    acc.add(horner(c.ar, cz, z), q1, 1);
  }
  if (exact_degree <= 1) acc.add(c.a[0][6], q1, 1);
  return acc;
}

BigInt naive_count(const TernaryForm<BigInt>& f, const BigInt& p, unsigned n, unsigned threads) {
  const Context c = make_context(f, p, n);
  const std::uint32_t q1 = c.ar.q1;
  std::vector<YEntry> ys;
  ys.push_back({q1, 1, 1});
  for (std::uint32_t y = 0; y < q1; ++y) ys.push_back({y, 1, 1});
  Accum acc = affine_chart(c, ys, 0, threads);
  acc.merge(line_at_infinity(c, 0));
  return BigInt(static_cast<unsigned long>(acc.points)) + BigInt(static_cast<long>(acc.chi));
}

}  // namespace

DegreeSums degree_sums(const TernaryForm<BigInt>& f, const BigInt& p, unsigned d, unsigned threads) {
  if (d == 0) throw DomainError("degree must be >= 1");
  const Context c = make_context(f, p, d);
  const std::uint32_t q1 = c.ar.q1;
  // Frobenius orbit leaders: y = g^k with k minimal among k p^i mod (q - 1).
  std::vector<YEntry> ys;
  ys.push_back({q1, 1, 1});  // y = 0
  for (std::uint32_t k = 0; k < q1; ++k) {
    bool leader = true;
    std::uint64_t m = k;
    for (unsigned i = 1; i < d && leader; ++i) {
      m = (m * c.p) % q1;
      if (m < k) leader = false;
    }
    if (!leader) continue;
    const unsigned e = c.degree_of_log[k];
    ys.push_back({k, e, e});
  }
  Accum acc = affine_chart(c, ys, d, threads);
  acc.merge(line_at_infinity(c, d));
  return {d, acc.points, acc.zeros, acc.chi};
}

BigInt assemble_count(const std::vector<DegreeSums>& sums, unsigned n) {
  BigInt total = 0;
  for (const auto& s : sums) {
    if (s.d == 0 || n % s.d != 0) continue;
    total += BigInt(static_cast<unsigned long>(s.points));
    if ((n / s.d) % 2 == 1)
      total += BigInt(static_cast<long>(s.chi_sum));
    else
      total += BigInt(static_cast<unsigned long>(s.points - s.zeros));
  }
  return total;
}

bool within_weil_bound(const BigInt& count, const BigInt& q, unsigned n) {
  BigInt qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  BigInt dev = count - 1 - qn * qn;
  return abs(dev) <= 22 * qn;
}

BigInt count_points(const TernaryForm<BigInt>& f, const BigInt& p, unsigned n, CountStrategy strategy,
                    unsigned threads) {
  if (n == 0) throw DomainError("extension degree must be >= 1");
  BigInt N;
  if (strategy == CountStrategy::naive) {
    N = naive_count(f, p, n, threads);
  } else {
    std::vector<DegreeSums> sums;
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) sums.push_back(degree_sums(f, p, d, threads));
    N = assemble_count(sums, n);
  }
  if (!within_weil_bound(N, p, n))
    throw VerificationFailure("count", "N_" + std::to_string(n) + " = " + to_decimal(N) + " violates the Weil bound");
  return N;
}

CountSeries count_series(const TernaryForm<BigInt>& f, const BigInt& p, unsigned max_n, unsigned threads) {
  CountSeries cs;
  cs.p = p;
  cs.max_n = max_n;
  for (unsigned d = 1; d <= max_n; ++d) cs.degrees.push_back(degree_sums(f, p, d, threads));
  for (unsigned n = 1; n <= max_n; ++n) {
    BigInt N = assemble_count(cs.degrees, n);
    if (!within_weil_bound(N, p, n))
      throw VerificationFailure("count", "N_" + std::to_string(n) + " = " + to_decimal(N) + " violates the Weil bound");
    cs.counts.push_back(N);
  }
  return cs;
}

}  // namespace k3bm
