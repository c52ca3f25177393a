#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperd/error.hpp"
#include "hyperd/gammakit.hpp"
#include "reference/reference_values.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;
using testutil::relative;

TEST_CASE("gamma at small integers and one half") {
  CHECK(absdiff(hyperd::gamma(1.0), 1.0) < 1e-15);
  CHECK(relative(hyperd::gamma(5.0), 24.0) < 1e-14);
  CHECK(relative(hyperd::gamma(0.5), kSqrtPi) < 1e-15);
  CHECK(relative(hyperd::gamma(cplx(0.3, 0.4)), ref::gamma_03_04i) < 1e-14);
}

TEST_CASE("gamma throws on poles") {
  CHECK_THROWS_AS(hyperd::gamma(0.0), Error);
  CHECK_THROWS_AS(hyperd::gamma(-3.0), Error);
  try {
    hyperd::gamma(-2.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
  CHECK(gamma_value(-4.0).is_pole);
  CHECK_FALSE(gamma_value(-3.5).is_pole);
}

TEST_CASE("reciprocal gamma vanishes at poles") {
  CHECK(recip_gamma(0.0) == cplx(0.0));
  CHECK(recip_gamma(-3.0) == cplx(0.0));
  CHECK(relative(recip_gamma(-2.5), ref::recip_gamma_m25) < 1e-14);
}

TEST_CASE("derivative of 1/Gamma at negative integers") {
  const double h = 1e-5;
  const cplx fd = (recip_gamma(-2.0 + h) - recip_gamma(-2.0 - h)) / (2.0 * h);
  CHECK(absdiff(fd, 2.0) < 1e-6);
  CHECK(absdiff(recip_gamma_derivative(-2.0), 2.0) < 1e-13);
  CHECK(absdiff(recip_gamma_derivative(-3.0), -6.0) < 1e-13);
  CHECK(absdiff(recip_gamma_derivative(1.0), kEulerGamma) < 1e-14);
}

TEST_CASE("digamma") {
  CHECK(absdiff(digamma(1.0), -kEulerGamma) < 1e-15);
  CHECK(absdiff(digamma(2.0), 1.0 - kEulerGamma) < 1e-15);
  CHECK(absdiff(digamma(0.5), -kEulerGamma - 2.0 * std::log(2.0)) < 1e-15);
  CHECK(absdiff(digamma(0.5), ref::digamma_half) < 1e-15);
  CHECK(relative(digamma(cplx(2.0, 3.0)), ref::digamma_2_3i) < 1e-14);
  CHECK(relative(digamma(cplx(-0.5, 0.1)), ref::digamma_m05_01i) < 1e-13);
  CHECK(absdiff(kEulerGamma, ref::euler_gamma) < 1e-16);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0, cplx(0.7, 0.2)) == cplx(0.0));
  CHECK(std::abs(harmonic(3) - 11.0 / 6.0) < 1e-15);
  const cplx z = 0.7;
  CHECK(absdiff(harmonic(5, z) - harmonic(2, z) - harmonic(3, z + 2.0), 0.0) < 1e-15);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(cplx(0.3, 0.1), 0) == cplx(1.0));
  CHECK(absdiff(pochhammer(3.0, -1), 0.5) < 1e-16);
  const cplx z = 0.3;
  CHECK(relative(pochhammer(z, 4), pochhammer(1.0 - 4.0 - z, 4)) < 1e-14);
  CHECK(absdiff(pochhammer(0.5, -2), 1.0 / ((-0.5) * (-1.5))) < 1e-15);
}

TEST_CASE("factorial and pole detection") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(10) == 3628800.0);
  CHECK(is_gamma_pole(-5.0));
  CHECK_FALSE(is_gamma_pole(-5.0 + 1e-6));
  long n = 0;
  CHECK(near_integer(cplx(3.0 + 1e-12, 0.0), 1e-9, n));
  CHECK(n == 3);
  CHECK_FALSE(near_integer(cplx(3.0, 1e-3), 1e-9, n));
}

TEST_CASE("sin_pi is exact at integers") {
  for (int k = -4; k <= 4; ++k) CHECK(sin_pi(static_cast<double>(k)) == cplx(0.0));
  CHECK(absdiff(sin_pi(0.5), 1.0) < 1e-16);
  CHECK(absdiff(cos_pi(1.0), -1.0) < 1e-16);
}
