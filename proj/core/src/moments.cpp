#include "altsum/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "altsum/asymptotics.hpp"
#include "altsum/multipoly.hpp"
#include "altsum/specfun.hpp"

namespace altsum {

long alternating_sum(const Partition& p) {
  long s = 0;
  bool plus = true;
  for (unsigned part : p.parts) {
    s += plus ? static_cast<long>(part) : -static_cast<long>(part);
    plus = !plus;
  }
  return s;
}

namespace {

constexpr unsigned kEnumLimit = 60;

void enum_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
              const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition{cur});
    return;
  }
  for (unsigned first = std::min(remaining, max_part); first >= 1; --first) {
    cur.push_back(first);
    enum_rec(remaining - first, first, cur, fn);
    cur.pop_back();
  }
}

void enum_strict_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                     const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition{cur});
    return;
  }
  for (unsigned first = std::min(remaining, max_part); first >= 1; --first) {
    cur.push_back(first);
    enum_strict_rec(remaining - first, first - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_partitions(unsigned n, const std::function<void(const Partition&)>& fn) {
  if (n > kEnumLimit)
    throw std::invalid_argument("enumerate_partitions: n > 60 rejected");
  std::vector<unsigned> cur;
  enum_rec(n, n, cur, fn);
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void enumerate_strict_partitions(unsigned n, const std::function<void(const Partition&)>& fn) {
  if (n > kEnumLimit)
    throw std::invalid_argument("enumerate_strict_partitions: n > 60 rejected");
  std::vector<unsigned> cur;
  enum_strict_rec(n, n, cur, fn);
}

mpz_class FmPolynomial::evaluate(const std::vector<mpz_class>& g) const {
  if (g.size() < m)
    throw std::invalid_argument("FmPolynomial::evaluate: need m values");
  mpz_class total = 0;
  for (const auto& [expo, coeff] : terms) {
    mpz_class t = coeff;
    for (unsigned i = 0; i < expo.size(); ++i)
      for (unsigned e = 0; e < expo[i]; ++e) t *= g[i];
    total += t;
  }
  return total;
}

FmPolynomial fm_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("fm_polynomial: m >= 1 required");
  FmPolynomial f;
  f.m = 1;
  f.terms[{1}] = 1;  // F_1 = g0
  for (unsigned cur = 1; cur < m; ++cur) {
    FmPolynomial next;
    next.m = cur + 1;
    auto add = [&next](std::vector<unsigned> e, const mpz_class& c) {
      e.resize(next.m, 0);
      auto [it, inserted] = next.terms.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) next.terms.erase(it);
      }
    };
    for (const auto& [expo, coeff] : f.terms) {
      // sum_i dF/dg_i * g_{i+1}
      for (unsigned i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) continue;
        std::vector<unsigned> e = expo;
        e[i] -= 1;
        e.resize(next.m, 0);
        e[i + 1] += 1;
        add(std::move(e), coeff * expo[i]);
      }
      // + F * g0
      std::vector<unsigned> e = expo;
      e[0] += 1;
      add(std::move(e), coeff);
    }
    f = std::move(next);
  }
  return f;
}

namespace {

// Substitutes g_k -> lambert series into F_m; shares power products.
TruncatedSeries substitute_fm(const FmPolynomial& fm,
                              const std::vector<TruncatedSeries>& g,
                              std::size_t order) {
  // powers[i][e] caches g_i^{e+1}
  std::map<unsigned, std::vector<TruncatedSeries>> powers;
  auto power = [&](unsigned i, unsigned e) -> const TruncatedSeries& {
    auto& cache = powers.try_emplace(i).first->second;
    if (cache.empty()) cache.push_back(g[i]);
    while (cache.size() < e) cache.push_back(cache.back() * g[i]);
    return cache[e - 1];
  };
  TruncatedSeries sub(order);
  for (const auto& [expo, coeff] : fm.terms) {
    TruncatedSeries t = TruncatedSeries::constant(coeff, order);
    for (unsigned i = 0; i < expo.size(); ++i)
      if (expo[i] > 0) t = t * power(i, expo[i]);
    sub = sub + t;
  }
  return sub;
}

}  // namespace

TruncatedSeries moment_exact_series(unsigned m, std::size_t order) {
  if (m == 0) throw std::invalid_argument("moment_exact_series: m >= 1 required");
  const FmPolynomial fm = fm_polynomial(m);
  std::vector<TruncatedSeries> g;
  g.reserve(m);
  for (unsigned k = 0; k < m; ++k) g.push_back(lambert_gk_series(k, order));
  return substitute_fm(fm, g, order) * partition_series(order);
}

mpz_class moment_from_distribution(unsigned m, std::size_t n, const BivariateTable& table) {
  if (n > table.order())
    throw std::out_of_range("moment_from_distribution: n exceeds table order");
  mpz_class total = 0;
  const auto& row = table.packed_row(n);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    const std::size_t a = n - 2 * j;
    mpz_class am;
    mpz_ui_pow_ui(am.get_mpz_t(), static_cast<unsigned long>(a), m);
    total += am * row[j];
  }
  return total;
}

std::map<std::size_t, mpz_class> distribution_row(std::size_t n, const BivariateTable& table) {
  return table.row(n);  // row() range-checks
}

namespace {

MomentReport make_report(unsigned m, unsigned n, mpz_class a_m, mpz_class p_n) {
  MomentReport r;
  r.n = n;
  r.m = m;
  r.a_m = std::move(a_m);
  r.p_n = std::move(p_n);
  r.e_exact = mpq_class(r.a_m, r.p_n);
  r.e_exact.canonicalize();
  r.e_float = r.e_exact.get_d();
  r.predicted = asym::thm_moment_asym(m, n);
  r.ratio = r.e_float / r.predicted;
  return r;
}

}  // namespace

MomentReport expectation(unsigned m, unsigned n) {
  if (n == 0) throw std::invalid_argument("expectation: n >= 1 required");
  if (m == 0) throw std::invalid_argument("expectation: m >= 1 required");
  const TruncatedSeries am = moment_exact_series(m, n);
  const TruncatedSeries p = partition_series(n);
  return make_report(m, n, am[n], p[n]);
}

MomentReport expectation_from_table(unsigned m, unsigned n, const BivariateTable& table) {
  if (n == 0) throw std::invalid_argument("expectation: n >= 1 required");
  if (m == 0) throw std::invalid_argument("expectation: m >= 1 required");
  return make_report(m, n, moment_from_distribution(m, n, table), table.row_sum(n));
}

std::vector<MomentReport> moment_reports(const std::vector<unsigned>& ms, unsigned n) {
  if (n == 0) throw std::invalid_argument("moment_reports: n >= 1 required");
  unsigned max_m = 0;
  for (unsigned m : ms) {
    if (m == 0) throw std::invalid_argument("moment_reports: m >= 1 required");
    max_m = std::max(max_m, m);
  }
  const TruncatedSeries p = partition_series(n);
  std::vector<TruncatedSeries> g;
  for (unsigned k = 0; k < max_m; ++k) g.push_back(lambert_gk_series(k, n));
  std::vector<MomentReport> out;
  out.reserve(ms.size());
  for (unsigned m : ms) {
    const TruncatedSeries am = substitute_fm(fm_polynomial(m), g, n) * p;
    out.push_back(make_report(m, n, am[n], p[n]));
  }
  return out;
}

namespace {

const VarKey kX{0, 0};
const VarKey kZ{1, 0};
const VarKey kY{2, 0};

Exponents expo4(int x, int y, int z, int q) {
  Exponents e;
  if (x != 0) e[kX] = x;
  if (y != 0) e[kY] = y;
  if (z != 0) e[kZ] = z;
  if (q != 0) e[kQ] = q;
  return e;
}

// prefactor / ((xzq;q^2)_odd_count (xq^2;q^2)_even_count), truncated
SparsePoly pochhammer_block(std::size_t order, const Exponents& prefactor,
                            unsigned odd_count, unsigned even_count) {
  SparsePoly term = SparsePoly::one(order).times_monomial(prefactor);
  for (unsigned i = 1; i <= odd_count && !term.empty(); ++i)
    term.mul_geometric(expo4(1, 0, 1, static_cast<int>(2 * i - 1)));
  for (unsigned i = 1; i <= even_count && !term.empty(); ++i)
    term.mul_geometric(expo4(1, 0, 0, static_cast<int>(2 * i)));
  return term;
}

SparsePoly histogram(unsigned n_max, bool strict) {
  SparsePoly h(n_max);
  auto record = [&](const Partition& p) {
    h.add_term(expo4(static_cast<int>(p.largest()), static_cast<int>(p.length()),
                     static_cast<int>(alternating_sum(p)), static_cast<int>(p.size())),
               1);
  };
  for (unsigned n = 0; n <= n_max; ++n) {
    if (strict)
      enumerate_strict_partitions(n, record);
    else
      enumerate_partitions(n, record);
  }
  return h;
}

}  // namespace

double ks_distance_erfc_limit(std::size_t n, const BivariateTable& table) {
  if (n == 0 || n > table.order())
    throw std::out_of_range("ks_distance_erfc_limit: 1 <= n <= table order required");
  const double scale = std::numbers::pi / std::sqrt(6.0 * static_cast<double>(n));
  const double shift = -0.25 * std::log(static_cast<double>(n)) +
                       0.5 * std::log(2.0 * std::numbers::pi / std::sqrt(6.0));
  const mpz_class total = table.row_sum(n);
  const auto& row = table.packed_row(n);
  mpz_class cum = 0;
  double ks = 0;
  // atoms ascend in a as j descends
  for (std::size_t idx = row.size(); idx-- > 0;) {
    if (row[idx] == 0) continue;
    const double a = static_cast<double>(n - 2 * idx);
    const double x = scale * a + shift;
    const double limit = specfun::erfc(std::exp(-x));
    ks = std::max(ks, std::abs(mpq_class(cum, total).get_d() - limit));
    cum += row[idx];
    ks = std::max(ks, std::abs(mpq_class(cum, total).get_d() - limit));
  }
  return ks;
}

MultivariateCheck multivariate_identity_check(unsigned n_max) {
  if (n_max > 25)
    throw std::invalid_argument("multivariate_identity_check: n_max <= 25 required");
  MultivariateCheck out;

  // Ordinary partitions: 1 + sum_r x y^{2r} q^{2r} block(r,r)
  //                        + sum_r x z y^{2r+1} q^{2r+1} block(r+1,r).
  {
    SparsePoly sum = SparsePoly::one(n_max);
    for (unsigned r = 1; 2 * r <= n_max; ++r)
      sum += pochhammer_block(n_max, expo4(1, static_cast<int>(2 * r), 0, static_cast<int>(2 * r)), r, r);
    for (unsigned r = 0; 2 * r + 1 <= n_max; ++r)
      sum += pochhammer_block(n_max, expo4(1, static_cast<int>(2 * r + 1), 1, static_cast<int>(2 * r + 1)), r + 1, r);
    out.ordinary_max = max_abs_diff(sum, histogram(n_max, false));
  }

  // Strict partitions: the length-2r block carries x^{2r} y^{2r} z^r
  // q^{r(2r+1)}, the length-(2r+1) block x^{2r+1} y^{2r+1} z^{r+1}
  // q^{(r+1)(2r+1)}.
  {
    SparsePoly sum(n_max);
    for (unsigned r = 0; r * (2 * r + 1) <= n_max; ++r)
      sum += pochhammer_block(n_max,
                              expo4(static_cast<int>(2 * r), static_cast<int>(2 * r),
                                    static_cast<int>(r), static_cast<int>(r * (2 * r + 1))),
                              r, r);
    for (unsigned r = 0; (r + 1) * (2 * r + 1) <= n_max; ++r)
      sum += pochhammer_block(n_max,
                              expo4(static_cast<int>(2 * r + 1), static_cast<int>(2 * r + 1),
                                    static_cast<int>(r + 1), static_cast<int>((r + 1) * (2 * r + 1))),
                              r + 1, r);
    out.strict_max = max_abs_diff(sum, histogram(n_max, true));
  }
  return out;
}

}  // namespace altsum
