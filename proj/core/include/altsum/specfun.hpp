#pragma once

// Special functions for the analytic side: complex dilogarithm with analytic
// continuation, Bernoulli and Eulerian polynomials, digamma, zeta at integer
// arguments, complementary error function.  Stateless pure functions.

#include <complex>
#include <vector>

#include <gmpxx.h>

namespace altsum::specfun {

using Complex = std::complex<double>;

// Li_2(z) on C \ [1,inf).  Series for |z| <= 1/2; elsewhere reduced by the
// inversion (z -> 1/z) and reflection (z -> 1-z) identities with the
// principal Log, then summed via the Bernoulli-coefficient series in
// -Log(1-z).  Throws std::domain_error on the branch cut.
Complex dilog(Complex z);

// |Li2(x) - n * sum over n-th roots z of x of Li2(z)|.
double dilog_distribution_residual(Complex x, int n);

// B_n, exact.  B_1 = -1/2 convention.
mpq_class bernoulli_number(unsigned n);

// Bernoulli polynomial B_n(a), exact for rational a.
mpq_class bernoulli_poly(unsigned n, const mpq_class& a);
double bernoulli_poly_d(unsigned n, double a);

// Hurwitz zeta at non-positive integers, defined via Bernoulli polynomials:
// zeta(-n, a) = -B_{n+1}(a)/(n+1).
mpq_class hurwitz_zeta_neg(unsigned n, const mpq_class& a);

// Coefficients of the Eulerian polynomial E_k (index = power of x), with
// sum_{j>=1} j^k x^j = E_k(x)/(1-x)^{k+1}.  Coefficients sum to k!.
std::vector<mpz_class> eulerian_poly(unsigned k);

// psi(a) for a > 0, by recurrence up into the asymptotic regime.
double digamma(double a);

// zeta(s) for integer s >= 2: direct summation with an Euler-Maclaurin
// tail correction, abs error well under 1e-12.
double zeta_int(unsigned s);

// Complementary error function (thin wrapper over the C library).
double erfc(double u);

}  // namespace altsum::specfun
