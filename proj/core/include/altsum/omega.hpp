#pragma once

// Parser and rewriting engine for Omega_>= partition analysis.  Crude forms
// (rational expressions with eliminator variables l1, l2, ...) go in; the
// eliminator variables are removed one at a time by the template rule
//
//   Omega_>=  l^{-A} / ((1 - X l)(1 - Y/l))  =  X^A / ((1 - X)(1 - X Y))
//
// with A >= 0 and X, Y free of l (the no-lowering-factor case is Y = 0).
// The engine handles exactly one raising and at most one lowering factor per
// eliminator; that template covers every chain form used here.
//
// Wire grammar (whitespace insignificant), also accepted with the prefactor
// written "m/(...)" in place of "m*1/(...)":
//   form     := [monomial "*"] "1/(" factor+ ")"
//   factor   := "(1 - " monomial ")"
//   monomial := term ("*" term)*
//   term     := var ["^" int]
//   var      := "x"<digits> | "l"<digits> | "z" | "q" | "y" | "x"
//
// (bare "x" is the largest-part marker targeted by substitutions.)
//
// The eliminator annuli 1-eps < |l_i| < 1+eps that make Omega_>= analytic
// are a property of the operator's defining expansion; the engine is purely
// symbolic and never evaluates the l_i numerically.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/multipoly.hpp"
#include "altsum/series.hpp"

namespace altsum::omega {

struct Monomial {
  int coefficient = 1;
  Exponents exponents;  // no zero entries

  bool is_one() const { return coefficient == 1 && exponents.empty(); }
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, int e);
std::string to_string(const Monomial& m);

// prefactor * product over factors f of 1/(1 - f).
struct CrudeForm {
  Monomial prefactor;
  std::vector<Monomial> denominators;
};

// Same shape, free of eliminator variables.
struct ProductForm {
  Monomial numerator;
  std::vector<Monomial> denominators;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

struct EliminationError : std::runtime_error {
  EliminationError(const std::string& what, std::string variable)
      : std::runtime_error(what), variable(std::move(variable)) {}
  std::string variable;
};

CrudeForm parse_crude(std::string_view text);

// Canonical printing: variables ordered x < z < y < q < l (index ascending),
// factors sorted by (degree, exponent vector).  parse and to_string
// round-trip up to this normalization.
std::string to_string(const CrudeForm& f);
std::string to_string(const ProductForm& f);

CrudeForm normalize(CrudeForm f);

// Applies the template rule to one eliminator variable.
CrudeForm eliminate_once(const CrudeForm& form, const std::string& var);

// Eliminates the listed variables in order; the result must be free of all
// eliminator variables.
ProductForm eliminate_all(const CrudeForm& form, const std::vector<std::string>& order);

// Names of eliminator variables present, sorted by index.
std::vector<std::string> eliminator_variables(const CrudeForm& form);

// Rewrites every variable through the map; all variables occurring in the
// form must be bound.
ProductForm substitute(const ProductForm& form,
                       const std::map<std::string, Monomial>& map);

// Series expansion of a product form, truncated at q^order.  Every factor
// must have positive q-degree.
SparsePoly expand_general(const ProductForm& form, std::size_t order);
TruncatedSeries expand_to_series(const ProductForm& form, std::size_t order);   // q only
BivariateTable expand_to_table(const ProductForm& form, std::size_t order);     // z and q

// Chain crude forms: the bounded-length partition generating function with
// n eliminators (strict = distinct parts, prefactor l1^-1 ... ln^-1).
CrudeForm chain_crude_form(unsigned n, bool strict = false);

}  // namespace altsum::omega
