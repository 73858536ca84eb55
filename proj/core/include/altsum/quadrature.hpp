#pragma once

// Gauss-Kronrod 7-15 quadrature: an adaptive driver for real integrands and
// a fixed composite rule for complex ones (deterministic resolution knob).

#include <complex>
#include <functional>

namespace altsum::quad {

struct Result {
  double value = 0;
  double abs_error = 0;   // accumulated |K15 - G7| estimate
  int intervals = 0;
  bool converged = true;  // false when the subdivision cap was hit
};

// Bisecting adaptive GK15 on [a,b]; stops when the local estimate meets
// rel_tol/abs_tol or the interval budget runs out (reported, not thrown).
Result adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-8, double abs_tol = 1e-14,
                     int max_intervals = 4000);

struct ComplexResult {
  std::complex<double> value;
  double abs_error = 0;
  int panels = 0;
};

// Composite GK15 over equal panels; error is the summed per-panel estimate.
ComplexResult composite_gk15(const std::function<std::complex<double>(double)>& f,
                             double a, double b, int panels);

}  // namespace altsum::quad
