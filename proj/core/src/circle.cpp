#include "altsum/circle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "altsum/asymptotics.hpp"
#include "altsum/moments.hpp"
#include "altsum/quadrature.hpp"

namespace altsum::circle {

namespace {
constexpr double kPi = std::numbers::pi;
}

double circle_radius(double n) { return std::exp(-kPi / std::sqrt(6.0 * n)); }

double log_mpz(const mpz_class& v) {
  if (v <= 0) throw std::invalid_argument("log_mpz: positive value required");
  long exp2;
  const double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * std::numbers::ln2;
}

Complex saddle_integrand(unsigned m, double n, double y) {
  const Complex u(1.0, y);
  const double t = kPi * std::sqrt(n / 6.0);
  // f(y) - 2 = 1/u + u - 2 has Re <= 0 on the window, so no overflow
  const Complex expo = t * (1.0 / u + u - 2.0);
  return std::pow(u, Complex(-static_cast<double>(m) + 0.5)) * std::exp(expo);
}

SaddleResult saddle_check(unsigned m, double n, double delta, std::size_t samples) {
  if (n < 100) throw std::invalid_argument("saddle_check: n >= 100 required");
  if (delta < 0.5) throw std::invalid_argument("saddle_check: delta >= 0.5 required");
  const int panels = std::max(8, static_cast<int>(samples / 15));
  auto qr = quad::composite_gk15(
      [&](double y) { return saddle_integrand(m, n, y); }, -delta, delta, panels);
  SaddleResult r;
  r.integral = qr.value;
  r.prediction = std::pow(6.0 / n, 0.25);
  r.rel_error = std::abs(qr.value - r.prediction) / r.prediction;
  r.quad_error = qr.abs_error;
  return r;
}

double major_arc_log(unsigned m, double n, double delta, std::size_t samples) {
  if (n < 100) throw std::invalid_argument("major_arc_log: n >= 100 required");
  if (delta < 0.5) throw std::invalid_argument("major_arc_log: delta >= 0.5 required");
  const double x = kPi / std::sqrt(6.0 * n);
  const double t = kPi * std::sqrt(n / 6.0);
  const double log_inv_x = -std::log(x);
  const int panels = std::max(8, static_cast<int>(samples / 15));
  auto qr = quad::composite_gk15(
      [&](double y) -> Complex {
        const Complex u(1.0, y);
        Complex v = std::pow(u, Complex(0.5 - static_cast<double>(m))) *
                    std::exp(t * (1.0 / u + u - 2.0));
        const Complex log_inv_w = log_inv_x - std::log(u);
        for (unsigned i = 0; i < m; ++i) v *= log_inv_w;
        return v;
      },
      -delta, delta, panels);
  // M^(1)_m(n) = x^{3/2-m}/(2^{m+1} pi sqrt(2 pi)) * J * e^{pi sqrt(2n/3)}
  return (1.5 - m) * std::log(x) -
         ((m + 1) * std::numbers::ln2 + std::log(kPi) + 0.5 * std::log(2.0 * kPi)) +
         std::log(std::abs(qr.value)) + 2.0 * t;
}

double minor_arc_scaled_log(double n, double y) {
  const double x = kPi / std::sqrt(6.0 * n);
  const Complex w(x, x * y);
  const Complex q = std::exp(-w);
  return x * asym::log_pochhammer_direct(1, 1, 1.0, q).real();
}

MinorArcResult minor_arc_probe(double n, std::size_t sample_count, double delta) {
  if (n < 100) throw std::invalid_argument("minor_arc_probe: n >= 100 required");
  const double ymax = std::sqrt(6.0 * n);
  std::set<double> ys;
  for (std::size_t i = 0; i < sample_count; ++i)
    ys.insert(delta + (ymax - delta) * static_cast<double>(i) / sample_count);
  // the product peaks near rational angles h/k; w = x(1+iy) hits angle
  // 2 pi h/k at y = 2 pi h/(k x)
  const double x = kPi / std::sqrt(6.0 * n);
  for (int k = 2; k <= 6; ++k)
    for (int h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const double yc = 2.0 * kPi * h / (k * x);
      for (double off : {0.0, 0.25, -0.25, 0.5, -0.5})
        if (yc + off >= delta && yc + off < ymax) ys.insert(yc + off);
    }
  MinorArcResult r;
  r.max_scaled_log = -1e300;
  for (double y : ys)
    r.max_scaled_log = std::max(r.max_scaled_log, minor_arc_scaled_log(n, y));
  r.epsilon = kPi * kPi / 6.0 - r.max_scaled_log;
  r.samples_used = ys.size();
  return r;
}

ReconstructReport circle_reconstruct(unsigned m, unsigned n, double delta,
                                     std::size_t samples) {
  if (n > 2000)
    throw std::invalid_argument("circle_reconstruct: n <= 2000 (needs exact A_m)");
  const mpz_class exact =
      (m == 0) ? partition_series(n)[n] : moment_exact_series(m, n)[n];
  ReconstructReport r;
  r.m = m;
  r.n = n;
  r.exact_log = log_mpz(exact);
  r.major_log = major_arc_log(m, n, delta, samples);
  r.difference = r.major_log - r.exact_log;
  r.minor_epsilon = minor_arc_probe(n, 200, delta).epsilon;
  return r;
}

}  // namespace altsum::circle
