#pragma once

// Exact moments of the alternating-sum statistic via two independent routes
// (distribution summation and the F_m / Lambert-series route), plus the
// brute-force enumeration oracle.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "altsum/series.hpp"

namespace altsum {

struct Partition {
  std::vector<unsigned> parts;  // non-increasing, strictly positive

  unsigned size() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
  }
  unsigned length() const { return static_cast<unsigned>(parts.size()); }
  unsigned largest() const { return parts.empty() ? 0u : parts.front(); }

  bool is_valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }
};

// lambda_1 - lambda_2 + lambda_3 - ...; always in [0, largest] and of the
// same parity as |lambda|.
long alternating_sum(const Partition& p);

// Yields every partition of n exactly once, in reverse-lexicographic order.
// Guards n <= 60 against combinatorial explosion.
void enumerate_partitions(unsigned n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> all_partitions(unsigned n);

// Partitions with strictly decreasing parts, same order and guard.
void enumerate_strict_partitions(unsigned n, const std::function<void(const Partition&)>& fn);

// F_1 = g0, F_{m+1} = sum_i dF_m/dg_i * g_{i+1} + F_m * g0, where g_i stands
// for the i-th z-logarithmic derivative of the Lambert sum at z=1.  Every
// term has weighted degree sum e_i*(i+1) = m (F_m is the complete Bell
// polynomial in g0..g_{m-1}).
struct FmPolynomial {
  unsigned m = 0;
  // exponent vector e[0..m-1] over g0..g_{m-1} -> integer coefficient
  std::map<std::vector<unsigned>, mpz_class> terms;

  // Substitutes numeric values for the g_i (used by property tests).
  mpz_class evaluate(const std::vector<mpz_class>& g) const;
};

FmPolynomial fm_polynomial(unsigned m);

// Coefficient n is A_m(n) = sum over partitions of n of a(lambda)^m,
// computed as F_m(g0..g_{m-1}) * P(1;q) with g_k = lambert_gk_series(k).
TruncatedSeries moment_exact_series(unsigned m, std::size_t order);

// The independent route: sum_a a^m N(n,a) off the distribution table.
// m = 0 recovers p(n).
mpz_class moment_from_distribution(unsigned m, std::size_t n, const BivariateTable& table);

// Row of the table with range checking (throws past the table order).
std::map<std::size_t, mpz_class> distribution_row(std::size_t n, const BivariateTable& table);

struct MomentReport {
  unsigned n = 0;
  unsigned m = 0;
  mpz_class a_m;       // A_m(n)
  mpz_class p_n;       // p(n)
  mpq_class e_exact;   // A_m(n)/p(n), lowest terms
  double e_float = 0;
  double predicted = 0;  // leading-order prediction (asymptotics module)
  double ratio = 0;      // e_float / predicted
};

// Fully populated report; n = 0 is rejected (the prediction ratio is
// undefined there).  Computes A_m via the series route.
MomentReport expectation(unsigned m, unsigned n);
MomentReport expectation_from_table(unsigned m, unsigned n, const BivariateTable& table);

// Shares the series work across several m for one n.
std::vector<MomentReport> moment_reports(const std::vector<unsigned>& ms, unsigned n);

// Four-variable identity checks (largest part, length, alternating sum,
// size) against direct enumeration, for ordinary and strict partitions.
struct MultivariateCheck {
  mpz_class ordinary_max;
  mpz_class strict_max;
  mpz_class max() const { return ordinary_max > strict_max ? ordinary_max : strict_max; }
};

MultivariateCheck multivariate_identity_check(unsigned n_max);  // n_max <= 25

// Kolmogorov-Smirnov distance between the exact distribution of the
// normalized statistic x = (pi/sqrt(6n)) a - (1/4) log n + (1/2) log(2pi/sqrt6)
// and the limit law Erfc(e^{-x}).
double ks_distance_erfc_limit(std::size_t n, const BivariateTable& table);

}  // namespace altsum
