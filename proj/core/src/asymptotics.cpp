#include "altsum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "altsum/specfun.hpp"

namespace altsum::asym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;

// Laurent coefficients of 1/(1 - e^{-v}) = 1/v + 1/2 + sum_j B_{2j} v^{2j-1}/(2j)!.
// Index i holds the coefficient of v^{i-1} (so [0] is the 1/v residue).
std::vector<double> one_minus_exp_inv_coeffs(int count) {
  std::vector<double> s(count, 0.0);
  s[0] = 1.0;
  if (count > 1) s[1] = 0.5;
  for (int j = 1; 2 * j < count; ++j) {
    mpq_class b = specfun::bernoulli_number(2 * j);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * j);
    s[2 * j] = mpq_class(b / fact).get_d();
  }
  return s;
}

// exp-integral tail e^{-x}/x (1 - 1/x + 2/x^2), adequate for x >= 40.
double e1_tail(double x) {
  return std::exp(-x) / x * (1.0 - 1.0 / x + 2.0 / (x * x));
}

}  // namespace

bool ComplexWindow::in_cone() const { return std::abs(std::atan(y)) <= theta; }

void AsymTermList::add(Complex coeff, double w_power, unsigned log_power) {
  terms_.push_back({coeff, w_power, log_power});
  // increasing effective growth as w -> 0: slowest-growing first
  std::sort(terms_.begin(), terms_.end(), [](const AsymTerm& a, const AsymTerm& b) {
    if (a.w_power != b.w_power) return a.w_power > b.w_power;
    return a.log_power < b.log_power;
  });
}

Complex AsymTermList::evaluate(Complex w) const {
  const Complex log_inv = -std::log(w);
  Complex sum = 0;
  for (const auto& t : terms_) {
    Complex v = t.coeff * std::pow(w, Complex(t.w_power));
    for (unsigned i = 0; i < t.log_power; ++i) v *= log_inv;
    sum += v;
  }
  return sum;
}

Complex log_pochhammer_direct(int a, int b, Complex z, Complex q, double tail_tol) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("log_pochhammer_direct: a, b >= 1 required");
  if (std::abs(q) >= 1.0)
    throw std::invalid_argument("log_pochhammer_direct: |q| < 1 required");
  const double zqa = std::abs(z) * std::pow(std::abs(q), a);
  if (zqa >= 1.0)
    throw std::invalid_argument("log_pochhammer_direct: |z q^a| < 1 required");

  const Complex qa = std::pow(q, a);
  const Complex qb = std::pow(q, b);
  const double qb_abs = std::pow(std::abs(q), b);
  Complex zm = 1.0, qam = 1.0, qbm = 1.0;
  Complex sum = 0;
  const double r = zqa;
  double rm = 1.0, qb_abs_m = 1.0;
  for (int m = 1; m <= 4000000; ++m) {
    zm *= z;
    qam *= qa;
    qbm *= qb;
    rm *= r;
    qb_abs_m *= qb_abs;
    sum += zm * qam / (static_cast<double>(m) * (1.0 - qbm));
    // tail bound robust to small 1 - q^{bm'} denominators at later m':
    // sum_{m'>m} r^{m'} / (m' (1-|q|^{b m'})) <= r^{m+1} / ((m+1)(1-|q|^{b(m+1)})(1-r))
    if (m > 8 && rm * r / ((m + 1) * (1.0 - qb_abs_m * qb_abs) * (1.0 - r)) < tail_tol)
      return sum;
  }
  throw std::runtime_error("log_pochhammer_direct: no convergence");
}

quad::Result istar_quadrature(int a, int b, double A) {
  if (a < 1 || b < a)
    throw std::invalid_argument("istar_quadrature: 1 <= a <= b required");
  if (!(A > 0)) throw std::invalid_argument("istar_quadrature: A > 0 required");
  const double c = static_cast<double>(a) / b;
  const double cm1 = 0.5 - c;

  // Taylor coefficients d_k of f_{a,b}(u) - 1/u^2 - cm1/u near 0, from the
  // product e^{-cu} * (1/(1-e^{-u})) / u.
  constexpr int kOrder = 14;
  const std::vector<double> s = one_minus_exp_inv_coeffs(kOrder + 3);
  std::vector<double> d(kOrder + 1, 0.0);
  {
    std::vector<double> e(kOrder + 3, 0.0);  // (-c)^i / i!
    e[0] = 1.0;
    for (int i = 1; i < static_cast<int>(e.size()); ++i) e[i] = e[i - 1] * (-c) / i;
    // f coefficient of u^k is sum_{i + (m-1) = k+1} e_i s_m  (s index m holds v^{m-1})
    for (int k = 0; k <= kOrder; ++k) {
      double acc = 0;
      for (int m = 0; m <= k + 2 && m < static_cast<int>(s.size()); ++m)
        acc += e[k + 2 - m] * s[m];
      d[k] = acc;
    }
  }

  auto integrand = [&](double u) -> double {
    if (u < 0.05) {
      double poly = 0, up = 1;
      for (int k = 0; k <= kOrder; ++k) {
        poly += d[k] * up;
        up *= u;
      }
      // cm1 (1 - e^{-Au})/u = cm1 sum (-1)^k A^{k+1} u^k/(k+1)!
      double rel = 0, term = A;
      up = 1;
      for (int k = 0; k <= kOrder; ++k) {
        rel += term * up;
        up *= u;
        term *= -A / (k + 2);
      }
      return poly + cm1 * rel;
    }
    const double f = std::exp(-c * u) / (u * (-std::expm1(-u)));
    return f - 1.0 / (u * u) - cm1 * std::exp(-A * u) / u;
  };

  const double U = std::max({60.0, 45.0 / c, 45.0 / A});
  quad::Result r = quad::adaptive_gk15(integrand, 0.0, U, 1e-8, 1e-14, 4000);
  // exact tails of the subtractions; the f tail is exponentially small
  r.value += -1.0 / U - cm1 * e1_tail(A * U);
  r.abs_error += std::exp(-c * U) / (c * U) + 1e-18;
  return r;
}

AsymTermList log_pochhammer_asym_q1_terms(int a, int b, double A) {
  const double half_b_minus_a = 0.5 * b - a;
  AsymTermList t;
  t.add(specfun::zeta_int(2) / b, -1.0, 0);
  t.add(half_b_minus_a, 0.0, 1);
  const double istar = istar_quadrature(a, b, A).value;
  t.add(b * istar -
            half_b_minus_a * (std::log(A) + specfun::digamma(static_cast<double>(a) / b) + kGamma),
        0.0, 0);
  return t;
}

Complex log_pochhammer_asym_q1(int a, int b, Complex w, double A) {
  return log_pochhammer_asym_q1_terms(a, b, A).evaluate(w);
}

Complex log_pochhammer_root_leading(Complex z, int a, int b, int h, int k, Complex w) {
  if (k < 1 || h < 0 || h >= k)
    throw std::invalid_argument("log_pochhammer_root_leading: 0 <= h < k required");
  if (!(k == 1 && h == 0) && std::gcd(h, k) != 1)
    throw std::invalid_argument("log_pochhammer_root_leading: gcd(h,k) = 1 required");
  if (std::gcd(b, k) != 1)
    throw std::invalid_argument("log_pochhammer_root_leading: gcd(b,k) > 1 unsupported");
  (void)a;  // the leading term does not depend on a
  Complex zk = 1.0;
  for (int i = 0; i < k; ++i) zk *= z;
  return specfun::dilog(zk) / (static_cast<double>(b) * k * k * w);
}

EmCheck em_holomorphic_check(double a, double w, unsigned n_terms) {
  if (!(w > 0) || w > 0.5)
    throw std::invalid_argument("em_holomorphic_check: w in (0, 0.5] required");
  if (n_terms > 8)
    throw std::invalid_argument("em_holomorphic_check: n_terms <= 8 required");
  auto error_at = [&](double wv) {
    const double closed = std::exp(-a * wv) / (-std::expm1(-wv));
    double expansion = 1.0 / wv;  // I_f = 1 for f = e^{-w}
    double cn = 1.0;              // (-1)^n/n!
    double wp = 1.0;
    for (unsigned n = 0; n < n_terms; ++n) {
      expansion -= cn * specfun::bernoulli_poly_d(n + 1, a) / (n + 1) * wp;
      cn *= -1.0 / (n + 1);
      wp *= wv;
    }
    return std::abs(closed - expansion);
  };
  EmCheck c;
  c.error = error_at(w);
  c.error_half = error_at(w / 2);
  c.error_quarter = error_at(w / 4);
  c.empirical_order = std::log2(c.error / c.error_quarter) / 2.0;
  return c;
}

double hr_pn_log(double n) {
  if (!(n >= 1)) throw std::invalid_argument("hr_pn_log: n >= 1 required");
  return kPi * std::sqrt(2.0 * n / 3.0) - std::log(4.0 * n * std::sqrt(3.0));
}

double hr_pn(double n) { return std::exp(hr_pn_log(n)); }

double thm_moment_asym(unsigned m, double n) {
  if (m < 1) throw std::invalid_argument("thm_moment_asym: m >= 1 required");
  const double L = std::log(std::sqrt(6.0 * n) / kPi);
  const double base = std::sqrt(6.0) / (2.0 * kPi) * std::sqrt(n) * L;
  return std::pow(base, static_cast<double>(m));
}

double am_main_term_log(unsigned m, double n) {
  if (m < 1) throw std::invalid_argument("am_main_term_log: m >= 1 required");
  const double L = std::log(std::sqrt(6.0 * n) / kPi);
  return (static_cast<double>(m) - 2.0) / 2.0 * std::log(n) -
         (m + 2.0) * std::log(2.0) - 0.5 * std::log(3.0) +
         m * std::log(std::sqrt(6.0) / kPi) + m * std::log(L) +
         kPi * std::sqrt(2.0 * n / 3.0);
}

double lambert_g_direct(double q) {
  if (!(q >= 0 && q < 1))
    throw std::invalid_argument("lambert_g_direct: q in [0,1) required");
  if (q == 0) return 0;
  double sum = 0, qm = 1;
  for (int m = 1; m < 100000000; ++m) {
    qm *= q;
    const double term = qm / (1.0 - qm * qm);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double g_refined(double w, double A) {
  if (!(w > 0) || w > 0.1)
    throw std::invalid_argument("g_refined: w in (0, 0.1] required");
  // I* for f(u) = e^{-2u}/(1 - e^{-2u}) = 1/(2u) - 1/2 + sum_j B_{2j} (2u)^{2j-1}/(2j)!,
  // simple pole only, residue 1/2.
  constexpr int kOrder = 14;
  static const std::vector<double> s = one_minus_exp_inv_coeffs(kOrder + 3);
  auto integrand = [&](double u) -> double {
    if (u < 0.05) {
      double poly = -0.5, vp = 2.0 * u;
      for (int j = 2; j < static_cast<int>(s.size()); ++j) {
        if (s[j] != 0.0) poly += s[j] * vp;
        vp *= 2.0 * u;
      }
      double rel = 0, term = A, up = 1;
      for (int k = 0; k <= kOrder; ++k) {
        rel += term * up;
        up *= u;
        term *= -A / (k + 2);
      }
      return poly + 0.5 * rel;
    }
    return std::exp(-2.0 * u) / (-std::expm1(-2.0 * u)) - 0.5 * std::exp(-A * u) / u;
  };
  const double U = std::max(45.0, 45.0 / A);
  quad::Result r = quad::adaptive_gk15(integrand, 0.0, U, 1e-10, 1e-15, 4000);
  const double istar = r.value - 0.5 * e1_tail(A * U);
  return istar / w - (std::log(A * w) - std::log(4.0)) / (2.0 * w);
}

double gk_leading_measured(unsigned k, double w) {
  if (!(w > 0) || w > 0.5)
    throw std::invalid_argument("gk_leading_measured: w in (0, 0.5] required");
  double sum = 0;
  for (double m = 1;; ++m) {
    const double qm = std::exp(-m * w);
    const double term = std::pow(m, static_cast<double>(k)) * qm / (1.0 - qm * qm);
    sum += term;
    if (m > 2 * (k + 1) / w && term < 1e-16 * sum) break;
  }
  return sum * std::pow(w, static_cast<double>(k) + 1.0);
}

}  // namespace altsum::asym
