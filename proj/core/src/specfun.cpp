#include "altsum/specfun.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace altsum::specfun {

namespace {

constexpr double kPi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

// Defining series, geometric convergence for |z| <= 1/2.
Complex dilog_power_series(Complex z) {
  Complex term = z, sum = z;
  for (int k = 2; k < 60; ++k) {
    term *= z;
    const Complex add = term / static_cast<double>(k * k);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

// Li2(z) = sum_{k>=0} B_k u^{k+1}/(k+1)!  with u = -Log(1-z), |u| < 2 pi.
Complex dilog_log_series(Complex u) {
  // B_k/(k+1)! for k = 0..;  odd entries beyond B_1 vanish.
  static const double kCoeff[] = {
      1.0,
      -0.25,
      1.0 / 36,
      0.0,
      -1.0 / 3600,
      0.0,
      1.0 / 211680,
      0.0,
      -1.0 / 10886400,
      0.0,
      1.0 / 526901760,
      0.0,
      -4.0647616451442255e-11,
      0.0,
      8.9216910204564526e-13,
      0.0,
      -1.9939295860721076e-14,
      0.0,
      4.5189800296199182e-16,
      0.0,
      -1.0356517612181247e-17,
      0.0,
      2.3952186210261867e-19,
      0.0,
      -5.5817858743250093e-21,
  };
  Complex up = u, sum = 0.0;
  for (double c : kCoeff) {
    if (c != 0.0) sum += c * up;
    up *= u;
  }
  return sum;
}

}  // namespace

Complex dilog(Complex z) {
  if (on_cut(z)) throw std::domain_error("dilog: z on the branch cut [1,inf)");
  if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
  if (std::abs(z) <= 0.5) return dilog_power_series(z);

  // Reduce with inversion / reflection into the domain where the log-series
  // argument u = -Log(1-v) satisfies |u| < 2 pi.
  const double rz = z.real();
  const double nz = std::norm(z);
  Complex u, rest;
  double sgn;
  if (rz <= 0.5) {
    if (nz > 1.0) {  // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - Log(-z)^2/2
      const Complex lz = std::log(-z);
      u = -std::log(1.0 - 1.0 / z);
      rest = -0.5 * lz * lz - kPi2_6;
      sgn = -1.0;
    } else {
      u = -std::log(1.0 - z);
      rest = 0.0;
      sgn = 1.0;
    }
  } else {
    if (nz <= 2.0 * rz) {  // |z-1| <= 1, reflection: Li2(z) = pi^2/6 - Log(z)Log(1-z) - Li2(1-z)
      u = -std::log(z);
      rest = u * std::log(1.0 - z) + kPi2_6;
      sgn = -1.0;
    } else {
      const Complex lz = std::log(-z);
      u = -std::log(1.0 - 1.0 / z);
      rest = -0.5 * lz * lz - kPi2_6;
      sgn = -1.0;
    }
  }
  return sgn * dilog_log_series(u) + rest;
}

double dilog_distribution_residual(Complex x, int n) {
  if (n < 1) throw std::invalid_argument("dilog_distribution_residual: n >= 1");
  const double r = std::pow(std::abs(x), 1.0 / n);
  const double theta = std::arg(x) / n;
  Complex sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double phi = theta + 2.0 * std::numbers::pi * j / n;
    sum += dilog(Complex(r * std::cos(phi), r * std::sin(phi)));
  }
  return std::abs(dilog(x) - static_cast<double>(n) * sum);
}

mpq_class bernoulli_number(unsigned n) {
  // cache guarded for concurrent callers
  static std::mutex mutex;
  static std::vector<mpq_class> cache{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= n) {
    const unsigned k = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{k} C(k+1,j) B_j = 0
    mpq_class acc = 0;
    for (unsigned j = 0; j < k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
      acc += mpq_class(binom) * cache[j];
    }
    cache.push_back(-acc / mpq_class(k + 1));
  }
  return cache[n];
}

mpq_class bernoulli_poly(unsigned n, const mpq_class& a) {
  // B_n(a) = sum_k C(n,k) B_k a^{n-k}
  mpq_class result = 0;
  std::vector<mpq_class> powers(n + 1);
  powers[0] = 1;
  for (unsigned i = 1; i <= n; ++i) powers[i] = powers[i - 1] * a;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    result += mpq_class(binom) * bernoulli_number(k) * powers[n - k];
  }
  return result;
}

double bernoulli_poly_d(unsigned n, double a) {
  double result = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    result += binom.get_d() * bernoulli_number(k).get_d() * std::pow(a, static_cast<double>(n - k));
  }
  return result;
}

mpq_class hurwitz_zeta_neg(unsigned n, const mpq_class& a) {
  return -bernoulli_poly(n + 1, a) / mpq_class(n + 1);
}

std::vector<mpz_class> eulerian_poly(unsigned k) {
  if (k == 0) throw std::invalid_argument("eulerian_poly: k >= 1 required");
  // E_{k+1}(x) = x(1-x) E_k'(x) + (k+1) x E_k(x), E_1 = x
  std::vector<mpz_class> e{0, 1};
  for (unsigned cur = 1; cur < k; ++cur) {
    std::vector<mpz_class> next(cur + 2);
    for (unsigned i = 1; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      // x E' contributes i*e_i at power i; -x^2 E' gives -i*e_i at i+1
      next[i] += mpz_class(i) * e[i];
      next[i + 1] -= mpz_class(i) * e[i];
      // (cur+1) x E at power i+1
      next[i + 1] += mpz_class(cur + 1) * e[i];
    }
    e = std::move(next);
  }
  return e;
}

double digamma(double a) {
  if (!(a > 0)) throw std::domain_error("digamma: a > 0 required");
  double result = 0;
  while (a < 12.0) {
    result -= 1.0 / a;
    a += 1.0;
  }
  // psi(a) ~ ln a - 1/(2a) - sum B_{2k}/(2k a^{2k})
  const double inv = 1.0 / a, inv2 = inv * inv;
  static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                             1.0 / 132, -691.0 / 32760, 1.0 / 12};
  double tail = 0, p = inv2;
  for (double c : b) {
    tail += c * p;
    p *= inv2;
  }
  return result + std::log(a) - 0.5 * inv - tail;
}

double zeta_int(unsigned s) {
  if (s < 2) throw std::invalid_argument("zeta_int: s >= 2 required");
  if (s > 60) {  // 2^{-s} already below double resolution of the tail
    double sum = 0;
    for (int k = 8; k >= 1; --k) sum += std::pow(static_cast<double>(k), -static_cast<double>(s));
    return sum;
  }
  const unsigned K = 256;
  double sum = 0;
  for (unsigned k = K - 1; k >= 1; --k)
    sum += std::pow(static_cast<double>(k), -static_cast<double>(s));
  // Euler-Maclaurin tail from K upward
  const double Kd = K, sd = s;
  double tail = std::pow(Kd, 1.0 - sd) / (sd - 1.0) + 0.5 * std::pow(Kd, -sd);
  tail += sd * std::pow(Kd, -sd - 1.0) / 12.0;
  tail -= sd * (sd + 1.0) * (sd + 2.0) * std::pow(Kd, -sd - 3.0) / 720.0;
  return sum + tail;
}

double erfc(double u) { return std::erfc(u); }

}  // namespace altsum::specfun
