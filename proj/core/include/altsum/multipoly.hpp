#pragma once

// Sparse multivariate polynomials with exact coefficients, truncated in the
// q-degree.  Shared by the generating-function identity checks and by the
// Omega engine's series expansion.

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include <gmpxx.h>

namespace altsum {

// Variable universe: x1,x2,... then z, y, q, then the eliminator variables
// l1,l2,...  The ordering below is the canonical printing order.
struct VarKey {
  int alphabet;  // 0:x 1:z 2:y 3:q 4:l
  int index;     // subscript for x/l, 0 otherwise

  auto operator<=>(const VarKey&) const = default;
};

VarKey var_key(const std::string& name);  // throws on unknown names
std::string var_name(const VarKey& v);

inline const VarKey kQ{3, 0};

using Exponents = std::map<VarKey, int>;  // no zero entries stored

int q_degree(const Exponents& e);

class SparsePoly {
 public:
  explicit SparsePoly(std::size_t q_order) : q_order_(q_order) {}

  static SparsePoly one(std::size_t q_order) {
    SparsePoly p(q_order);
    p.terms_[Exponents{}] = 1;
    return p;
  }

  std::size_t q_order() const { return q_order_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Drops any term whose q-degree would exceed the truncation order.
  void add_term(const Exponents& e, const mpz_class& c);

  SparsePoly times_monomial(const Exponents& e, const mpz_class& c = 1) const;

  // Multiplies by (1 - M)^{-1} = sum_j M^j; M must have positive q-degree
  // so only finitely many powers survive truncation.
  void mul_geometric(const Exponents& m);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly operator*(const SparsePoly& o) const;

  mpz_class coefficient(const Exponents& e) const;

  friend mpz_class max_abs_diff(const SparsePoly& a, const SparsePoly& b);

 private:
  std::size_t q_order_;
  std::map<Exponents, mpz_class> terms_;
};

mpz_class max_abs_diff(const SparsePoly& a, const SparsePoly& b);

}  // namespace altsum
