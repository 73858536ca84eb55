#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "altsum/quadrature.hpp"
#include "altsum/specfun.hpp"

using namespace altsum;
using specfun::Complex;

namespace {

// direct defining series, valid for |z| < 1; the test-side oracle
Complex dilog_series_oracle(Complex z, int terms = 4000) {
  Complex sum = 0, zp = 1;
  for (int k = 1; k <= terms; ++k) {
    zp *= z;
    sum += zp / static_cast<double>(k * k);
  }
  return sum;
}

// explicit double-sum formula for Bernoulli polynomials (independent route)
mpq_class bernoulli_poly_oracle(unsigned n, const mpq_class& x) {
  mpq_class total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpq_class inner = 0;
    for (unsigned j = 0; j <= k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      mpq_class xj = x + j;
      mpq_class power = 1;
      for (unsigned i = 0; i < n; ++i) power *= xj;
      inner += ((j % 2) ? -1 : 1) * mpq_class(binom) * power;
    }
    total += inner / mpq_class(k + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("dilog at real points") {
  CHECK(std::abs(specfun::dilog({0, 0})) == 0.0);
  CHECK(specfun::dilog({0.5, 0}).real() == doctest::Approx(0.582240526465012506).epsilon(1e-12));
  // series oracle at 0.5 (geometric convergence)
  CHECK(std::abs(specfun::dilog({0.5, 0}) - dilog_series_oracle({0.5, 0})) < 1e-10);
  // alternating zeta oracle at -1
  CHECK(specfun::dilog({-1, 0}).real() ==
        doctest::Approx(-std::numbers::pi * std::numbers::pi / 12).epsilon(1e-12));
  CHECK(std::abs(specfun::dilog({-1, 0}) - dilog_series_oracle({-0.999999, 0})) < 1e-4);
}

TEST_CASE("dilog branch cut") {
  CHECK_THROWS_AS(specfun::dilog({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(specfun::dilog({2.5, 0.0}), std::domain_error);
  CHECK_NOTHROW(specfun::dilog({0.999, 0.0}));
  CHECK_NOTHROW(specfun::dilog({2.5, 1e-8}));
}

TEST_CASE("dilog across the plane, |z| <= 8") {
  struct Ref {
    Complex z, v;
  };
  // reference values computed with 25-digit arithmetic
  const Ref refs[] = {
      {{0.25, 0}, {0.267652639082732607, 0}},
      {{0.3, 0}, {0.326129510075476056, 0}},
      {{-0.5, 0}, {-0.448414206923646202, 0}},
      {{0.1, 0.2}, {0.0912536406589613687, 0.209614407739977182}},
      {{3, 4}, {-0.604807012061199983, 3.73361953229438589}},
      {{-5, 2}, {-2.82341518913989265, 0.704239233643017468}},
      {{0, 8}, {-2.56938098309132184, 3.39116333262929974}},
      {{7.5, -1.5}, {0.487222155315104212, -6.01744604931728071}},
      {{0.9, 0.1}, {1.26418673233875398, 0.243735679981014052}},
      {{-0.3, 0.77}, {-0.375944494592730519, 0.648476762629603704}},
  };
  for (const auto& r : refs) {
    const Complex got = specfun::dilog(r.z);
    CHECK(std::abs(got - r.v) / std::abs(r.v) < 1e-10);
  }
}

TEST_CASE("dilog conjugate symmetry") {
  // 50 pseudo-random points in the disk of radius 0.9
  unsigned long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0;
  };
  for (int i = 0; i < 50; ++i) {
    const double r = 0.9 * std::sqrt(next());
    const double th = 2 * std::numbers::pi * next();
    const Complex z(r * std::cos(th), r * std::sin(th));
    const Complex a = specfun::dilog(z);
    const Complex b = std::conj(specfun::dilog(std::conj(z)));
    CHECK(std::abs(a - b) < 1e-12 * (1 + std::abs(a)));
  }
}

TEST_CASE("dilog distribution property") {
  CHECK(specfun::dilog_distribution_residual({0.25, 0}, 2) < 1e-9);
  CHECK(specfun::dilog_distribution_residual({0.3, 0}, 3) < 1e-9);
  CHECK(specfun::dilog_distribution_residual({-0.5, 0}, 2) < 1e-9);
  CHECK(specfun::dilog_distribution_residual({0.1, 0.2}, 5) < 1e-9);
  for (int n : {2, 3, 5}) {
    CHECK(specfun::dilog_distribution_residual({0.25, 0}, n) < 1e-9);
    CHECK(specfun::dilog_distribution_residual({0.3, 0}, n) < 1e-9);
    CHECK(specfun::dilog_distribution_residual({-0.5, 0}, n) < 1e-9);
    CHECK(specfun::dilog_distribution_residual({0.1, 0.2}, n) < 1e-9);
  }
  // n = 1 is the identity itself
  CHECK(specfun::dilog_distribution_residual({0.37, 0.11}, 1) == 0.0);
}

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(specfun::bernoulli_number(0) == 1);
  CHECK(specfun::bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(specfun::bernoulli_number(2) == mpq_class(1, 6));
  CHECK(specfun::bernoulli_number(3) == 0);
  CHECK(specfun::bernoulli_number(12) == mpq_class(-691, 2730));

  // B_1(a) = a - 1/2, B_0 = 1
  for (const mpq_class& a : {mpq_class(0), mpq_class(1, 2), mpq_class(3, 7)}) {
    CHECK(specfun::bernoulli_poly(1, a) == a - mpq_class(1, 2));
    CHECK(specfun::bernoulli_poly(0, a) == 1);
  }
  CHECK(specfun::bernoulli_poly(2, 0) == mpq_class(1, 6));

  // independent explicit-formula oracle
  for (unsigned n = 0; n <= 6; ++n)
    for (const mpq_class& a : {mpq_class(0), mpq_class(1), mpq_class(1, 2), mpq_class(2, 3)})
      CHECK(specfun::bernoulli_poly(n, a) == bernoulli_poly_oracle(n, a));
}

TEST_CASE("Hurwitz zeta bridge at negative integers") {
  // zeta(0, 1) = zeta(0) = -1/2; B_1(1) = +1/2 flips the n = 0 sign
  CHECK(specfun::hurwitz_zeta_neg(0, 1) == mpq_class(-1, 2));
  for (unsigned n = 0; n <= 6; ++n) {
    // zeta(-n, 1) = zeta(-n) = -B_{n+1}/(n+1) for n >= 1
    if (n >= 1)
      CHECK(specfun::hurwitz_zeta_neg(n, 1) ==
            -specfun::bernoulli_number(n + 1) / mpq_class(n + 1));
    // zeta(-n, 1/2) = (2^{-n} - 1) zeta(-n)
    CHECK(specfun::hurwitz_zeta_neg(n, mpq_class(1, 2)) ==
          (mpq_class(1, 1 << n) - 1) * specfun::hurwitz_zeta_neg(n, 1));
  }
}

TEST_CASE("Eulerian polynomials") {
  auto e1 = specfun::eulerian_poly(1);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0] == 0);
  CHECK(e1[1] == 1);

  auto e2 = specfun::eulerian_poly(2);
  REQUIRE(e2.size() == 3);
  CHECK(e2[1] == 1);
  CHECK(e2[2] == 1);

  // partial-sum fit oracle: sum_{j<=J} j^2 x^j (1-x)^3 -> E_2(x)
  for (double x : {0.3, 0.5}) {
    double s = 0;
    for (int j = 1; j <= 400; ++j) s += j * j * std::pow(x, j);
    s *= std::pow(1 - x, 3);
    CHECK(s == doctest::Approx(x + x * x).epsilon(1e-10));
  }

  // coefficient sum is k!
  mpz_class fact = 1;
  for (unsigned k = 1; k <= 8; ++k) {
    fact *= k;
    mpz_class sum = 0;
    for (const auto& c : specfun::eulerian_poly(k)) sum += c;
    CHECK(sum == fact);
  }
}

TEST_CASE("digamma") {
  CHECK(specfun::digamma(1.0) == doctest::Approx(-std::numbers::egamma).epsilon(1e-12));
  // duplication-formula value at 1/2
  CHECK(specfun::digamma(0.5) ==
        doctest::Approx(-std::numbers::egamma - 2 * std::numbers::ln2).epsilon(1e-12));
  CHECK(specfun::digamma(3.7) == doctest::Approx(1.16715353936151139).epsilon(1e-12));
  // recurrence psi(a+1) - psi(a) = 1/a
  for (double a : {0.3, 1.0, 2.5, 7.9})
    CHECK(specfun::digamma(a + 1) - specfun::digamma(a) == doctest::Approx(1 / a).epsilon(1e-11));
  CHECK_THROWS_AS(specfun::digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::digamma(-1.5), std::domain_error);
}

TEST_CASE("zeta at integers") {
  CHECK(specfun::zeta_int(2) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
  CHECK(specfun::zeta_int(4) == doctest::Approx(1.08232323371113819).epsilon(1e-13));
  // direct-summation oracle with a tail bracket
  {
    const int K = 20000;
    double s = 0;
    for (int k = K; k >= 1; --k) s += 1.0 / (static_cast<double>(k) * k * k * k);
    const double tail_hi = std::pow(K, -3.0) / 3.0;  // integral bound
    CHECK(specfun::zeta_int(4) >= s);
    CHECK(specfun::zeta_int(4) <= s + tail_hi);
  }
  CHECK(specfun::zeta_int(3) == doctest::Approx(1.20205690315959429).epsilon(1e-13));
  CHECK(specfun::zeta_int(60) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(specfun::zeta_int(1), std::invalid_argument);
}

TEST_CASE("erfc") {
  CHECK(specfun::erfc(0.0) == 1.0);
  CHECK(specfun::erfc(30.0) < 1e-300);
  CHECK(specfun::erfc(1.0) == doctest::Approx(0.157299207050285131).epsilon(1e-12));
  CHECK(specfun::erfc(0.5) == doctest::Approx(0.479500122186953462).epsilon(1e-12));

  // quadrature oracle for the defining integral (2/sqrt(pi)) int_u^inf e^{-z^2}
  auto oracle = [](double u) {
    auto r = quad::adaptive_gk15([](double z) { return std::exp(-z * z); }, u, u + 30.0,
                                 1e-12, 1e-16, 4000);
    return 2.0 / std::sqrt(std::numbers::pi) * r.value;
  };
  CHECK(std::abs(specfun::erfc(1.0) - oracle(1.0)) < 1e-10);
  CHECK(std::abs(specfun::erfc(0.25) - oracle(0.25)) < 1e-10);

  // reflection erfc(-u) = 2 - erfc(u)
  for (double u : {0.1, 0.7, 1.9, 4.2, 7.5})
    CHECK(std::abs(specfun::erfc(-u) - (2.0 - specfun::erfc(u))) < 1e-10);
}
