#pragma once

// Numeric evaluators for the asymptotic expansions: log-Pochhammer sums near
// q = 1 and near roots of unity, regularized Euler-Maclaurin integrals,
// the Hardy-Ramanujan term, and the leading-order moment prediction.
// Everything is deterministic; identical inputs give bit-identical outputs.

#include <complex>
#include <vector>

#include "altsum/quadrature.hpp"

namespace altsum::asym {

using Complex = std::complex<double>;

// A point w = x(1+iy) approached inside the cone |arg w| <= theta.
struct ComplexWindow {
  double x = 0;      // positive scale of the real part
  double y = 0;      // transverse coordinate
  double theta = 0;  // cone half-angle, in (0, pi/2)

  Complex point() const { return {x, x * y}; }
  bool in_cone() const;
};

// One term c * w^p * Log(1/w)^l of an expansion as w -> 0.
struct AsymTerm {
  Complex coeff;
  double w_power = 0;
  unsigned log_power = 0;
};

// Term list kept sorted by increasing growth as w -> 0; evaluation sums
// termwise with the principal Log.
class AsymTermList {
 public:
  void add(Complex coeff, double w_power, unsigned log_power = 0);
  Complex evaluate(Complex w) const;
  const std::vector<AsymTerm>& terms() const { return terms_; }

 private:
  std::vector<AsymTerm> terms_;
};

// Log(z q^a; q^b)_inf^{-1} = sum_{m>=1} z^m q^{am} / (m (1 - q^{bm})),
// summed until the tail is below tail_tol.  Needs |q| < 1 and |z q^a| < 1.
Complex log_pochhammer_direct(int a, int b, Complex z, Complex q,
                              double tail_tol = 1e-14);

// Regularized integral of f_{a,b}(u) = e^{-au/b}/(u(1-e^{-u})) with the
// 1/u^2 and c_{-1} e^{-Au}/u singular parts removed (c_{-1} = 1/2 - a/b).
// Adaptive quadrature, relative target 1e-8, achieved error reported.
quad::Result istar_quadrature(int a, int b, double A);

// The three-term small-w expansion of Log(q^a;q^b)_inf^{-1} at q -> 1:
//   zeta(2)/(bw) + b I*_{f_{a,b},A} - (b/2 - a)(Log(Aw) + psi(a/b) + gamma).
// A > 0 is free; A = 1 is the default used throughout.
Complex log_pochhammer_asym_q1(int a, int b, Complex w, double A = 1.0);
AsymTermList log_pochhammer_asym_q1_terms(int a, int b, double A = 1.0);

// Leading term Li2(z^k)/(b k^2 w) of Log(z q^a; q^b)_inf^{-1} as q
// approaches the root of unity e^{2 pi i h/k}.  Requires gcd(h,k) = 1 (or
// h=0,k=1), gcd(b,k) = 1, and z^k off [1,inf).
Complex log_pochhammer_root_leading(Complex z, int a, int b, int h, int k,
                                    Complex w);

// Euler-Maclaurin order check for f = e^{-w}: compares the n_terms-term
// expansion I_f/w - sum c_n B_{n+1}(a)/(n+1) w^n against the closed form
// e^{-aw}/(1-e^{-w}) and measures how the error scales under halving w.
struct EmCheck {
  double error = 0;         // at w
  double error_half = 0;    // at w/2
  double error_quarter = 0; // at w/4
  double empirical_order = 0;  // log2(error/error_quarter)/2
};
EmCheck em_holomorphic_check(double a, double w, unsigned n_terms);

// Hardy-Ramanujan leading term e^{pi sqrt(2n/3)}/(4 n sqrt 3).
double hr_pn(double n);
double hr_pn_log(double n);

// Leading-order prediction for the m-th moment expectation:
//   (sqrt6/(2 pi))^m n^{m/2} log^m(sqrt(6n)/pi).
double thm_moment_asym(unsigned m, double n);

// Natural log of the main term of A_m(n) (log-space; the e^{pi sqrt(2n/3)}
// factor would overflow doubles near n ~ 1e4).
double am_main_term_log(unsigned m, double n);

// Lambert sum G(1;q) = sum_m q^m/(1-q^{2m}) evaluated directly, and its
// constant-refined small-w approximation
//   I*_{f,A}/w - (Log(Aw) - log 4)/(2w)   with f = e^{-2w}/(1-e^{-2w}).
double lambert_g_direct(double q);
double g_refined(double w, double A = 1.0);

// Empirical leading constant of G^{(k)}(1;e^{-w}): the direct sum
// sum_m m^k q^m/(1-q^{2m}) scaled by w^{k+1}.  Reported as a measurement;
// compare with k! zeta(k+1) and k! (1-2^{-k-1}) zeta(k+1).
double gk_leading_measured(unsigned k, double w);

}  // namespace altsum::asym
