#pragma once

// Exact truncated q-series arithmetic over arbitrary-precision integers, and
// the partition-counting constructions built on it.  All types here are
// immutable value types once constructed and safe to share across threads.

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace altsum {

// Power series in q truncated at a fixed order N: coefficients for q^0..q^N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  static TruncatedSeries constant(const mpz_class& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const mpz_class& operator[](std::size_t n) const { return coeffs_.at(n); }
  mpz_class& operator[](std::size_t n) { return coeffs_.at(n); }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // Multiplicative inverse up to the truncation order.  The constant
  // coefficient must be +1 or -1 so the inverse stays integral.
  TruncatedSeries inverse() const;

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

// Results carry the min of the operand orders.
TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const mpz_class& c, const TruncatedSeries& f);

// Generating function of p(n): coefficient n is the number of partitions of n.
// Built by the unbounded-knapsack product expansion of 1/(q;q)_inf.
TruncatedSeries partition_series(std::size_t order);

// Independent oracle for p(n): Euler's pentagonal-number recurrence.
// Deliberately shares no code with partition_series.
std::vector<mpz_class> pentagonal_partition_numbers(std::size_t order);

// q-expansion of G^{(k)}(1;q) = sum_{m>=1} m^k q^m / (1 - q^{2m}).
// Coefficient of q^n is sum of d^k over divisors d of n with n/d odd.
TruncatedSeries lambert_gk_series(unsigned k, std::size_t order);

// Exact counts N(n,a) of partitions of n whose alternating sum equals a.
// Cells with a != n (mod 2) are identically zero and are not stored: row n
// keeps entries j = (n-a)/2 for j = 0..floor(n/2).
class BivariateTable {
 public:
  explicit BivariateTable(std::size_t order);

  std::size_t order() const { return rows_.size() - 1; }

  // 0 for parity-forbidden or out-of-triangle (a > n) cells; throws if n > order.
  const mpz_class& count(std::size_t n, std::size_t a) const;

  // Nonzero entries of row n, keyed by a.
  std::map<std::size_t, mpz_class> row(std::size_t n) const;

  mpz_class row_sum(std::size_t n) const;

  // Packed access used by the builders; cell(n, j) holds count(n, n-2j).
  std::vector<mpz_class>& packed_row(std::size_t n) { return rows_[n]; }
  const std::vector<mpz_class>& packed_row(std::size_t n) const { return rows_[n]; }

 private:
  std::vector<std::vector<mpz_class>> rows_;
  mpz_class zero_;
};

// Expands 1/((zq;q^2)_inf (q^2;q^2)_inf) by unbounded-knapsack updates: an odd
// part-size k maps (n,a) <- (n-k, a-1), an even one maps (n,a) <- (n-k, a).
BivariateTable bivariate_distribution(std::size_t order);

// Largest-part / alternating-sum / size identity: compares the length-graded
// sum form against the product over (1 - x z q^{2i-1}) and (1 - x q^{2i}),
// both truncated at q^N.  Returns the max absolute coefficient difference.
mpz_class trivariate_identity_check(std::size_t order);

}  // namespace altsum
