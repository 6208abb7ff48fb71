#include "doctest.h"

#include <cmath>
#include <numbers>

#include "exactpot/special_functions.hpp"
#include "oracles.hpp"

using namespace exactpot;
using oracle::rel_err;

namespace {

Complex F(Complex a, Complex b, Complex c, Complex z, CutPolicy cut = CutPolicy::reject) {
  return gauss_2f1({a, b, c, z}, cut);
}

Complex dF(Complex a, Complex b, Complex c, Complex z) { return gauss_2f1_derivative({a, b, c, z}); }

double distance_to_pole(double c) { return c > 0.5 ? 1.0 : std::abs(c - std::round(c)); }

}  // namespace

TEST_CASE("log_gamma at small integers and one half") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(log_gamma(5.0).real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) < 1e-14);
  CHECK(gamma_function(5.0).real() == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("log_gamma against frozen high-precision values") {
  for (const auto& ref : oracle::log_gamma_references()) {
    CAPTURE(ref.x);
    CHECK(std::abs(log_gamma(ref.x) - ref.value) <= 1e-13 * std::max(1.0, std::abs(ref.value)));
  }
}

TEST_CASE("log_gamma matches lgamma on the real axis") {
  oracle::for_all(400, 11, [](oracle::Gen& g, int) {
    const double x = g.uniform(1e-3, 50.0);
    const double want = std::lgamma(x);
    CAPTURE(x);
    // Near the zeros at x = 1, 2 relative accuracy is measured against max(1, |value|).
    CHECK(std::abs(log_gamma(x).real() - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    CHECK(log_gamma(x).imag() == 0.0);
  });
  oracle::for_all(100, 12, [](oracle::Gen& g, int) {
    double x = g.uniform(-20.0, 0.0);
    if (std::abs(x - std::round(x)) < 1e-3) x += 0.01;
    CAPTURE(x);
    CHECK(std::abs(log_gamma(x).real() - std::lgamma(x)) <= 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  });
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
  CHECK(reciprocal_gamma(-2.0) == Complex(0.0));
  CHECK(std::abs(reciprocal_gamma(4.0) - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("2F1 closed-form values") {
  CHECK(F(0.3, -1.2, 2.7, 0.0) == Complex(1.0));
  CHECK(std::abs(F(1, 1, 2, 0.5) - 2.0 * std::log(2.0)) < 1e-14);
  CHECK(std::abs(F(2, 5, 5, 0.3) - 1.0 / (0.7 * 0.7)) < 1e-13);
  for (Complex z : {Complex(0.2), Complex(0.9), Complex(-4.0), Complex(0.5, -30.0), Complex(7.0, 2.0)}) {
    CAPTURE(z);
    CHECK(std::abs(F(-1, 4.5, 1.5, z) - (1.0 - 3.0 * z)) <= 1e-15 * std::max(1.0, std::abs(z)) * 4);
  }
}

TEST_CASE("2F1 against frozen high-precision values") {
  for (const auto& ref : oracle::hyp2f1_references()) {
    CAPTURE(ref.a);
    CAPTURE(ref.b);
    CAPTURE(ref.c);
    CAPTURE(ref.z);
    CHECK(std::abs(F(ref.a, ref.b, ref.c, ref.z) - ref.value) <= 1e-12 * std::abs(ref.value));
  }
}

TEST_CASE("2F1 reductions: log and (1-z)^-a") {
  oracle::for_all(200, 21, [](oracle::Gen& g, int) {
    const Complex z(g.uniform(-3.0, 0.95), g.uniform(-2.0, 2.0));
    CAPTURE(z);
    CHECK(rel_err(F(1, 1, 2, z), -std::log(1.0 - z) / z) < 1e-12);
    const double a = g.uniform(-3.0, 3.0);
    const double b = g.uniform(0.2, 3.0);
    CHECK(rel_err(F(a, b, b, z), std::pow(1.0 - z, -a)) < 1e-12);
  });
}

TEST_CASE("2F1 terminating series equals the explicit polynomial") {
  oracle::for_all(300, 22, [](oracle::Gen& g, int) {
    const int n = g.integer(0, 12);
    const double b = g.uniform(-4.0, 4.0);
    double c = g.uniform(-4.0, 4.0);
    if (distance_to_pole(c) < 0.05) c += 0.1;
    const Complex z(g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0));
    const Complex want = oracle::polynomial_2f1(n, b, c, z);
    // Scale: sum of |terms|, which bounds the rounding of any evaluation order.
    double scale = 0.0;
    Complex coef = 1.0;
    for (int k = 0; k <= n; ++k) {
      scale += std::abs(coef) * std::pow(std::abs(z), k);
      coef *= double(k - n) * (b + k) / ((c + k) * double(k + 1));
    }
    CAPTURE(n);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(z);
    CHECK(std::abs(F(-n, b, c, z) - want) <= 1e-14 * scale * (n + 1));
    CHECK(std::abs(F(b, -n, c, z) - want) <= 1e-14 * scale * (n + 1));
  });
}

TEST_CASE("2F1 series agrees with a long double oracle inside |z| <= 0.5") {
  oracle::for_all(300, 23, [](oracle::Gen& g, int) {
    const double a = g.uniform(-3, 3), b = g.uniform(-3, 3);
    double c = g.uniform(-3, 3);
    if (distance_to_pole(c) < 0.05) c += 0.1;
    const Complex z = std::polar(g.uniform(0.0, 0.5), g.uniform(-3.14, 3.14));
    const auto want = oracle::series_2f1(a, b, c, z);
    CAPTURE(z);
    CHECK(rel_err(F(a, b, c, z), Complex(double(want.real()), double(want.imag()))) < 1e-12);
  });
}

TEST_CASE("Pfaff route agrees with the direct series on 0.3 <= |z| <= 0.5") {
  oracle::for_all(300, 24, [](oracle::Gen& g, int) {
    const double a = g.uniform(-3, 3), b = g.uniform(-3, 3);
    double c = g.uniform(-3, 3);
    if (distance_to_pole(c) < 0.05) c += 0.1;
    const Complex z = std::polar(g.uniform(0.3, 0.5), g.uniform(-3.14, 3.14));
    const HypergeometricInput in{a, b, c, z};
    const Complex direct = hyp2f1_route::series(in);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(z);
    CHECK(std::abs(hyp2f1_route::pfaff(in) - direct) <= 1e-11 * std::max(1.0, std::abs(direct)));
  });
}

TEST_CASE("connection and continuation routes agree with the series on their overlaps") {
  oracle::for_all(200, 25, [](oracle::Gen& g, int) {
    const double a = g.uniform(-2, 2), b = g.uniform(-2, 2);
    double c = g.uniform(0.2, 3);
    if (std::abs((c - a - b) - std::round(c - a - b)) < 0.1) c += 0.25;
    // Lens |z| <= 0.5, |1-z| <= 0.5 around z = 1/2.
    const Complex z(g.uniform(0.45, 0.5), g.uniform(-0.15, 0.15));
    const HypergeometricInput in{a, b, c, z};
    const Complex direct = hyp2f1_route::series(in);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(z);
    CHECK(std::abs(hyp2f1_route::connection(in) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    CHECK(std::abs(hyp2f1_route::continuation(in) - direct) <= 1e-11 * std::max(1.0, std::abs(direct)));
  });
}

TEST_CASE("2F1 along the PT line Re z = 1/2") {
  // Derivative against a finite difference in z along the line.
  for (double r = -5.0; r <= 5.0; r += 0.5) {
    const Complex z(0.5, -0.5 * std::sinh(r));
    const std::function<Complex(Complex)> f = [](Complex w) { return F(0.3, 1.7, 1.2, w); };
    CAPTURE(r);
    const Complex exact = dF(0.3, 1.7, 1.2, z);
    CHECK(std::abs(oracle::fd1(f, z, 1e-4) - exact) <= 1e-7 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("2F1 at and near z = 1") {
  const Complex sum = F(0.2, 0.3, 2.5, 1.0);
  CHECK(std::abs(sum - oracle::kGaussSum) < 1e-13);
  CHECK(std::abs(F(0.2, 0.3, 2.5, 1.0 - 1e-6) - oracle::kNearOne) < 1e-12);
  CHECK(std::abs(F(0.2, 0.3, 2.5, 1.0 - 1e-6) - sum) < 1e-6);
  CHECK_THROWS_AS(F(1.0, 2.0, 3.0, 1.0), BranchCutError);

  // Gauss summation property: the gap at 1 - 1e-6 is 1e-6 times the slope at 1, to first order.
  oracle::for_all(100, 26, [](oracle::Gen& g, int) {
    const double a = g.uniform(-2, 2), b = g.uniform(-2, 2);
    const double c = a + b + g.uniform(1.5, 3.0);
    if (distance_to_pole(c) < 0.05) return;
    const Complex limit = std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b));
    const Complex slope = a * b / c *
                          std::exp(log_gamma(c + 1) + log_gamma(c - a - b - 1) - log_gamma(c - a) - log_gamma(c - b));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CHECK(std::abs(F(a, b, c, 1.0 - 1e-6) - limit) <= 1e-6 * std::abs(slope) + 1e-8 * std::max(1.0, std::abs(limit)));
  });
}

TEST_CASE("2F1 errors and the cut") {
  CHECK_THROWS_AS(F(0.5, 0.5, -2.0, 0.3), PoleError);
  CHECK(std::abs(F(-1.0, 3.0, -2.0, 0.3) - (1.0 + 3.0 * 0.3 / 2.0)) < 1e-15);
  CHECK_THROWS_AS(F(0.5, 0.75, 1.6, 2.5), BranchCutError);
  CHECK(std::abs(F(0.5, 0.75, 1.6, 2.5, CutPolicy::principal) - oracle::kAboveCut) < 1e-12);
  CHECK(std::abs(F(0.5, 0.75, 1.6, Complex(2.5, 1e-9)) - oracle::kAboveCut) < 1e-7);
  CHECK(std::abs(F(0.5, 0.75, 1.6, Complex(2.5, -1e-9)) - std::conj(oracle::kAboveCut)) < 1e-7);
  CHECK_THROWS_AS(F(std::nan(""), 1.0, 1.0, 0.2), ValidationError);
  CHECK_THROWS_AS(F(1.0, 1.0, 1.0, Complex(INFINITY, 0)), ValidationError);
}

TEST_CASE("2F1 derivative") {
  CHECK(std::abs(dF(0.6, -1.4, 2.2, 0.0) - 0.6 * -1.4 / 2.2) < 1e-15);
  CHECK(std::abs(dF(-1, 4.5, 1.5, Complex(0.3, 2.0)) + 3.0) < 1e-14);
  const std::function<Complex(double)> f = [](double z) { return F(1, 1, 2, z); };
  CHECK(std::abs(oracle::fd1(f, 0.5, 1e-3) - dF(1, 1, 2, 0.5)) < 1e-8);
}

TEST_CASE("2F1 derivative against finite differences, 1000 draws") {
  oracle::for_all(1000, 27, [](oracle::Gen& g, int) {
    const double a = g.uniform(-3, 3), b = g.uniform(-3, 3);
    double c = g.uniform(-3, 3);
    if (distance_to_pole(c) < 0.05 || distance_to_pole(c + 1) < 0.05) c += 0.1;
    const double z = g.uniform(-0.4, 0.4);
    const std::function<Complex(double)> f = [&](double w) { return F(a, b, c, w); };
    const Complex exact = dF(a, b, c, z);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(z);
    CHECK(std::abs(oracle::fd1(f, z, 2e-4) - exact) <= 1e-7 * std::max(1.0, std::abs(F(a, b, c, z))));
  });
}
