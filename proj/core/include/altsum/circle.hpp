#pragma once

// Wright-style circle-method quadrature on the circle |q| = e^{-pi/sqrt(6n)}:
// saddle-point verification, the major-arc integral in log space, a
// minor-arc smallness probe, and reconstruction against the exact moments.

#include <complex>
#include <cstddef>

#include "altsum/series.hpp"

namespace altsum::circle {

using Complex = std::complex<double>;

struct ArcConfig {
  unsigned n = 1000;        // coefficient index
  unsigned m = 1;           // moment order
  double delta = 1.0;       // major arc half-width Delta = cot(delta angle)
  std::size_t samples = 4096;  // quadrature resolution
};

// Radius of the integration circle, e^{-pi/sqrt(6n)}.
double circle_radius(double n);

// Integrand of the normalized saddle integral at height y:
// (1+iy)^{-m+1/2} exp(pi sqrt(n/6) (f(y)-2)), f(y) = 1/(1+iy) + 1 + iy.
// Modulus <= 1 everywhere since Re f <= 2.
Complex saddle_integrand(unsigned m, double n, double y);

struct SaddleResult {
  Complex integral;
  double prediction = 0;    // (6/n)^{1/4}
  double rel_error = 0;     // |integral - prediction| / prediction
  double quad_error = 0;
};

// Normalized saddle integral over |y| <= delta against (6/n)^{1/4}; the
// e^{pi sqrt(2n/3)} factor is handled analytically.
SaddleResult saddle_check(unsigned m, double n, double delta,
                          std::size_t samples = 4096);

// log M^(1)_m(n): the major-arc integral of w^{-m+1/2} Log^m(1/w)
// exp(pi^2/(6w) + nw), computed in log space.
double major_arc_log(unsigned m, double n, double delta,
                     std::size_t samples = 4096);

// x * log|(q;q)_inf^{-1}| at the minor-arc point w = x(1+iy).
double minor_arc_scaled_log(double n, double y);

struct MinorArcResult {
  double max_scaled_log = 0;   // max over samples of x log|(q;q)_inf^{-1}|
  double epsilon = 0;          // pi^2/6 - max; positive means savings
  std::size_t samples_used = 0;
};

// Samples the circle over delta <= |y| < sqrt(6n), uniformly plus clusters
// near the rational angles h/k for k <= 6 where the product peaks.
MinorArcResult minor_arc_probe(double n, std::size_t sample_count,
                               double delta = 1.0);

inline SaddleResult saddle_check(const ArcConfig& cfg) {
  return saddle_check(cfg.m, cfg.n, cfg.delta, cfg.samples);
}
inline double major_arc_log(const ArcConfig& cfg) {
  return major_arc_log(cfg.m, cfg.n, cfg.delta, cfg.samples);
}

struct ReconstructReport {
  unsigned m = 0;
  unsigned n = 0;
  double exact_log = 0;     // log A_m(n), exact integer evaluated in logs
  double major_log = 0;     // major_arc_log
  double difference = 0;    // major_log - exact_log
  double minor_epsilon = 0; // from minor_arc_probe
};

// Compares the numeric major arc against exact A_m(n) (m = 0 uses p(n)).
ReconstructReport circle_reconstruct(unsigned m, unsigned n, double delta = 1.0,
                                     std::size_t samples = 4096);

// log of a positive big integer, for reports.
double log_mpz(const mpz_class& v);

}  // namespace altsum::circle
