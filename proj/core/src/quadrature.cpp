#include "altsum/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace altsum::quad {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct PanelResult {
  T k15;
  double err;
};

template <typename T, typename F>
PanelResult<T> gk15_panel(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(c - h * kXgk[i]);
    fv[2 * i + 1] = f(c + h * kXgk[i]);
  }
  fv[14] = f(c);
  T k15 = kWgk[7] * fv[14];
  T g7 = kWg[3] * fv[14];
  for (int i = 0; i < 7; ++i) {
    k15 += kWgk[i] * (fv[2 * i] + fv[2 * i + 1]);
    if (i % 2 == 1)  // kronrod nodes 1,3,5 are the gauss nodes
      g7 += kWg[i / 2] * (fv[2 * i] + fv[2 * i + 1]);
  }
  k15 *= h;
  g7 *= h;
  return {k15, std::abs(k15 - g7)};
}

struct Interval {
  double a, b, value, err;
  bool operator<(const Interval& o) const { return err < o.err; }
};

}  // namespace

Result adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_intervals) {
  std::priority_queue<Interval> heap;
  auto first = gk15_panel<double>(f, a, b);
  heap.push({a, b, first.k15, first.err});
  double total = first.k15;
  double total_err = first.err;
  int count = 1;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         count < max_intervals) {
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15_panel<double>(f, worst.a, mid);
    auto right = gk15_panel<double>(f, mid, worst.b);
    total += left.k15 + right.k15 - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, mid, left.k15, left.err});
    heap.push({mid, worst.b, right.k15, right.err});
    ++count;
  }
  Result r;
  r.value = total;
  r.abs_error = total_err;
  r.intervals = count;
  r.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
  return r;
}

ComplexResult composite_gk15(const std::function<std::complex<double>(double)>& f,
                             double a, double b, int panels) {
  if (panels < 1) panels = 1;
  std::complex<double> total = 0;
  double err = 0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    auto pr = gk15_panel<std::complex<double>>(f, a + i * h, a + (i + 1) * h);
    total += pr.k15;
    err += pr.err;
  }
  return {total, err, panels};
}

}  // namespace altsum::quad
