#include "altsum/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "altsum/multipoly.hpp"

namespace altsum {

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = f[i] + g[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = f[i] - g[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    const mpz_class& fi = f[i];
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (g[j] != 0)
        mpz_addmul(r[i + j].get_mpz_t(), fi.get_mpz_t(), g[j].get_mpz_t());
    }
  }
  return r;
}

TruncatedSeries operator*(const mpz_class& c, const TruncatedSeries& f) {
  TruncatedSeries r(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) r[i] = c * f[i];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const mpz_class& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("TruncatedSeries::inverse: constant coefficient must be +-1");
  const std::size_t n = order();
  TruncatedSeries r(n);
  r[0] = c0;  // 1/c0 = c0 for c0 = +-1
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      mpz_addmul(acc.get_mpz_t(), coeffs_[j].get_mpz_t(), r[k - j].get_mpz_t());
    r[k] = -c0 * acc;
  }
  return r;
}

TruncatedSeries partition_series(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1;
  for (std::size_t k = 1; k <= order; ++k)
    for (std::size_t n = k; n <= order; ++n)
      s[n] += s[n - k];
  return s;
}

std::vector<mpz_class> pentagonal_partition_numbers(std::size_t order) {
  std::vector<mpz_class> p(order + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    mpz_class total = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const bool plus = (k % 2 == 1);
      if (g1 <= n) plus ? total += p[n - g1] : total -= p[n - g1];
      if (g2 <= n) plus ? total += p[n - g2] : total -= p[n - g2];
    }
    p[n] = total;
  }
  return p;
}

TruncatedSeries lambert_gk_series(unsigned k, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t m = 1; m <= order; ++m) {
    mpz_class mk;
    mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m), k);
    for (std::size_t j = 0; m * (2 * j + 1) <= order; ++j)
      s[m * (2 * j + 1)] += mk;
  }
  return s;
}

BivariateTable::BivariateTable(std::size_t order) : rows_(order + 1) {
  for (std::size_t n = 0; n <= order; ++n) rows_[n].resize(n / 2 + 1);
}

const mpz_class& BivariateTable::count(std::size_t n, std::size_t a) const {
  if (n >= rows_.size())
    throw std::out_of_range("BivariateTable::count: n exceeds table order");
  if (a > n || (n - a) % 2 != 0) return zero_;
  return rows_[n][(n - a) / 2];
}

std::map<std::size_t, mpz_class> BivariateTable::row(std::size_t n) const {
  if (n >= rows_.size())
    throw std::out_of_range("BivariateTable::row: n exceeds table order");
  std::map<std::size_t, mpz_class> out;
  for (std::size_t j = 0; j < rows_[n].size(); ++j)
    if (rows_[n][j] != 0) out.emplace(n - 2 * j, rows_[n][j]);
  return out;
}

mpz_class BivariateTable::row_sum(std::size_t n) const {
  if (n >= rows_.size())
    throw std::out_of_range("BivariateTable::row_sum: n exceeds table order");
  mpz_class s = 0;
  for (const auto& c : rows_[n]) s += c;
  return s;
}

BivariateTable bivariate_distribution(std::size_t order) {
  BivariateTable t(order);
  t.packed_row(0)[0] = 1;
  // Unbounded knapsack over part sizes; in packed coordinates j = (n-a)/2 an
  // odd part k shifts j by (k-1)/2, an even one by k/2.
  for (std::size_t k = 1; k <= order; ++k) {
    const std::size_t shift = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
    for (std::size_t n = k; n <= order; ++n) {
      auto& dst = t.packed_row(n);
      const auto& src = t.packed_row(n - k);
      const std::size_t jmax = std::min(dst.size(), shift + src.size());
      for (std::size_t j = shift; j < jmax; ++j) {
        const mpz_class& s = src[j - shift];
        if (s != 0)
          mpz_add(dst[j].get_mpz_t(), dst[j].get_mpz_t(), s.get_mpz_t());
      }
    }
  }
  return t;
}

namespace {

const VarKey kX{0, 0};  // the largest-part marker in the trivariate identity
const VarKey kZ{1, 0};

Exponents expo(std::initializer_list<std::pair<VarKey, int>> items) {
  Exponents e;
  for (const auto& [k, v] : items)
    if (v != 0) e[k] = v;
  return e;
}

}  // namespace

mpz_class trivariate_identity_check(std::size_t order) {
  const std::size_t N = order;

  // Product form: 1 / prod_i (1 - x z q^{2i-1})(1 - x q^{2i}), q-degree > N
  // factors dropped by truncation.
  SparsePoly product = SparsePoly::one(N);
  for (std::size_t i = 1; 2 * i - 1 <= N; ++i)
    product.mul_geometric(expo({{kX, 1}, {kZ, 1}, {kQ, static_cast<int>(2 * i - 1)}}));
  for (std::size_t i = 1; 2 * i <= N; ++i)
    product.mul_geometric(expo({{kX, 1}, {kQ, static_cast<int>(2 * i)}}));

  // Sum form, graded by partition length: the empty term, even lengths 2r
  // with prefactor x q^{2r}, odd lengths 2r+1 with prefactor x z q^{2r+1};
  // each over the finite products (xzq;q^2)_r' (xq^2;q^2)_r''.
  SparsePoly sum = SparsePoly::one(N);
  auto finite_block = [&](std::size_t odd_count, std::size_t even_count,
                          const Exponents& prefactor) {
    SparsePoly term = SparsePoly::one(N).times_monomial(prefactor);
    for (std::size_t i = 1; i <= odd_count && !term.empty(); ++i)
      term.mul_geometric(expo({{kX, 1}, {kZ, 1}, {kQ, static_cast<int>(2 * i - 1)}}));
    for (std::size_t i = 1; i <= even_count && !term.empty(); ++i)
      term.mul_geometric(expo({{kX, 1}, {kQ, static_cast<int>(2 * i)}}));
    sum += term;
  };
  for (std::size_t r = 1; 2 * r <= N; ++r)
    finite_block(r, r, expo({{kX, 1}, {kQ, static_cast<int>(2 * r)}}));
  for (std::size_t r = 0; 2 * r + 1 <= N; ++r)
    finite_block(r + 1, r, expo({{kX, 1}, {kZ, 1}, {kQ, static_cast<int>(2 * r + 1)}}));

  return max_abs_diff(product, sum);
}

}  // namespace altsum
