#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "special.hpp"

using namespace polyqm::special;
using std::complex;
constexpr double kPi = std::numbers::pi;

namespace {

// Independent oracle for arg Gamma(1+iy): the Weierstrass product gives
// arg Gamma(1+iy) = -gamma_E y + sum_k [y/k - atan(y/k)].
double arg_gamma_1_plus_iy(double y) {
  const double euler = 0.57721566490153286060651209;
  double s = -euler * y;
  const long K = 4'000'000;
  for (long k = 1; k <= K; ++k) s += y / k - std::atan(y / k);
  // tail: sum_{k>K} y^3/(3k^3) + O(K^-4)
  s += y * y * y / (6.0 * double(K) * double(K));
  return s;
}

}  // namespace

TEST_CASE("log_gamma at integer points") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(log_gamma({5.0, 0.0}).real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma({5.0, 0.0}).imag() == doctest::Approx(0.0));
}

TEST_CASE("log_gamma at 1+i against the reflection-formula modulus") {
  auto lg = log_gamma({1.0, 1.0});
  double mod2 = std::exp(2.0 * lg.real());
  CHECK(mod2 == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
}

TEST_CASE("gamma_abs_arg examples") {
  auto g2 = gamma_abs_arg({2.0, 0.0});
  CHECK(g2.magnitude == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g2.argument == doctest::Approx(0.0));

  auto gh = gamma_abs_arg({0.5, 0.0});
  CHECK(gh.magnitude == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(std::abs(gh.argument) < 1e-13);

  auto g1i = gamma_abs_arg({1.0, 1.0});
  CHECK(g1i.magnitude == doctest::Approx(0.52156404686493984).epsilon(1e-12));
  CHECK(g1i.argument == doctest::Approx(arg_gamma_1_plus_iy(1.0)).epsilon(1e-11));
}

TEST_CASE("log_gamma pole error") {
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("gamma recurrence on a complex grid") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> re(-30.0, 30.0), im(-30.0, 30.0);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 1000; ++i) {
    complex<double> z(re(rng), im(rng));
    if (z.imag() == 0.0) continue;
    if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5) continue;  // pole ridge
    complex<double> lhs = log_gamma(z + 1.0);
    complex<double> rhs = std::log(z) + log_gamma(z);
    // Compare Gamma values: branch constants may differ by 2 pi i.
    complex<double> ratio = std::exp(lhs - rhs);
    CHECK(std::abs(ratio - 1.0) < 1e-12);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("reflection identity |Gamma(1+iy)|^2 sinh(pi y)/(pi y) = 1") {
  for (double y = 0.1; y <= 20.0; y += 0.37) {
    double mod2 = std::exp(2.0 * log_gamma({1.0, y}).real());
    CHECK(mod2 * std::sinh(kPi * y) / (kPi * y) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer({0.37, -2.1}, 0) == complex<double>(1.0, 0.0));
  CHECK(pochhammer({2.0, 0.0}, 3).real() == doctest::Approx(24.0));
  double fact = 1.0;
  for (int n = 1; n <= 12; ++n) {
    fact *= n;
    CHECK(pochhammer({1.0, 0.0}, n).real() == doctest::Approx(fact).epsilon(1e-14));
  }
  // gamma-ratio branch agrees with the direct product
  complex<double> z(1.3, 0.7);
  complex<double> direct(1.0, 0.0);
  for (int k = 0; k < 80; ++k) direct *= z + double(k);
  complex<double> viaGamma = pochhammer(z, 80);
  CHECK(std::abs(viaGamma - direct) < 1e-10 * std::abs(direct));
}

TEST_CASE("terminating_pfq hand values") {
  using C = complex<double>;
  // 3F2 with n = 0
  {
    const C num[3] = {C(0.0), C(0.5, 1.0), C(0.5, -1.0)};
    const C den[2] = {C(1.0), C(1.0)};
    CHECK(terminating_pfq(num, den, C(1.0)).real() == doctest::Approx(1.0));
  }
  // 2F1(-1, 1; 2; 2) = 1 - (1*1/2)*2 = 0
  {
    const C num[2] = {C(-1.0), C(1.0)};
    const C den[1] = {C(2.0)};
    CHECK(std::abs(terminating_pfq(num, den, C(2.0))) < 1e-15);
  }
  // 3F2(-1, 1/2+i, 1/2-i; 1, 1; 1) = 1 - (1/4 + 1) = -0.25
  {
    const C num[3] = {C(-1.0), C(0.5, 1.0), C(0.5, -1.0)};
    const C den[2] = {C(1.0), C(1.0)};
    CHECK(terminating_pfq(num, den, C(1.0)).real() == doctest::Approx(-0.25));
  }
}

TEST_CASE("terminating_pfq error paths") {
  using C = complex<double>;
  const C num[2] = {C(0.5), C(1.0)};
  const C den[1] = {C(2.0)};
  CHECK_THROWS_AS(terminating_pfq(num, den, C(1.0)), std::invalid_argument);
  const C num2[2] = {C(-3.0), C(1.0)};
  const C den2[1] = {C(-1.0)};
  CHECK_THROWS_AS(terminating_pfq(num2, den2, C(1.0)), std::domain_error);
}

TEST_CASE("gauss_2f1_unit") {
  using C = complex<double>;
  CHECK(gauss_2f1_unit(C(0.0), C(0.7), C(1.9)).real() == doctest::Approx(1.0));
  CHECK(gauss_2f1_unit(C(-1.0), C(1.0), C(2.0)).real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gauss_2f1_unit(C(0.5), C(0.5), C(2.0)).real() ==
        doctest::Approx(4.0 / kPi).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_2f1_unit(C(1.0), C(1.0), C(1.5)), std::domain_error);
}

TEST_CASE("terminating 2F1 equals the Gauss sum for n <= 20") {
  using C = complex<double>;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  for (int n = 0; n <= 20; ++n) {
    C b(u(rng), 0.0), c(b.real() + u(rng), 0.0);
    const C num[2] = {C(double(-n)), b};
    const C den[1] = {c};
    C lhs = terminating_pfq(num, den, C(1.0));
    C rhs = gauss_2f1_unit(C(double(-n)), b, c);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("bessel_j basics") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  // first zero of J_0
  CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-9);
}

TEST_CASE("bessel_j against the standard library") {
  for (int n = 0; n <= 20; ++n)
    for (double x = 0.25; x <= 50.0; x += 0.5)
      CHECK(std::abs(bessel_j(n, x) - std::cyl_bessel_j(double(n), x)) <=
            1e-10);
}

TEST_CASE("bessel three-term recurrence") {
  for (int n = 1; n <= 10; ++n)
    for (double x = 0.5; x <= 30.0; x += 0.7) {
      double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
      double rhs = (2.0 * n / x) * bessel_j(n, x);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("recip_gamma sign structure") {
  CHECK(recip_gamma(1.0) == doctest::Approx(1.0));
  CHECK(recip_gamma(0.0) == doctest::Approx(0.0));
  CHECK(recip_gamma(-1.0) == doctest::Approx(0.0));
  // sign alternates between consecutive poles
  CHECK(recip_gamma(-0.5) < 0.0);
  CHECK(recip_gamma(-1.5) > 0.0);
  CHECK(recip_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)));
}
