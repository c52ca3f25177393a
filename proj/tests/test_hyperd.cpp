#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperd/error.hpp"
#include "hyperd/hyperd.hpp"
#include "hyperd/oracle.hpp"
#include "reference/reference_values.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;
using testutil::relative;

namespace {

DSpec d0(long m) { return DSpec{EqKind::F0, m, 0.0, 0.0, 0.0}; }
DSpec d1(double theta, long m) { return DSpec{EqKind::F1, m, theta, 0.0, 0.0}; }
DSpec d2(long m, double beta, double mu) { return DSpec{EqKind::F2, m, 0.0, beta, mu}; }

}  // namespace

TEST_CASE("expansion of D for 0F1") {
  const LaurentExpansion e0 = d_expand(d0(0));
  CHECK(e0.principal.empty());
  CHECK(absdiff(e0.tail_coeffs(1)[0], 2.0 * kEulerGamma) < 1e-15);
  CHECK(absdiff(e0.tail_coeffs(1)[0], ref::D0_m0_z0) < 1e-15);

  const LaurentExpansion e1 = d_expand(d0(1));
  REQUIRE(e1.principal.size() == 1);
  CHECK(e1.principal[0] == cplx(1.0));

  // d_0 = -(psi(1) + psi(1+m))/m!
  const LaurentExpansion e3 = d_expand(d0(3));
  CHECK(absdiff(e3.tail_coeffs(1)[0], -(digamma(1.0) + digamma(4.0)) / 6.0) < 1e-15);

  const LaurentExpansion em = d_expand(d0(-2));
  CHECK(em.power_shift == 2);
}

TEST_CASE("D at negative m is a power shift") {
  const cplx z = 0.3;
  const cplx lhs = d_eval(d0(-2), z).value;
  CHECK(absdiff(lhs, 0.09 * d_eval(d0(2), z).value) < 1e-14);
  CHECK(relative(lhs, ref::D0_mm2_z03) < 1e-14);
}

TEST_CASE("D values against the reference") {
  CHECK(absdiff(d_eval(d0(0), 0.0).value, 2.0 * kEulerGamma) < 1e-15);
  const auto r = d_eval(d0(2), 0.5);
  CHECK(relative(r.value, ref::D0_m2_z05) < 1e-14);
  CHECK(r.err_estimate <= 1e-12);
  CHECK(relative(d_eval(d0(1), cplx(0.3, 0.4)).value, ref::D0_m1_z03_04i) < 1e-14);
  CHECK(relative(d_eval(d1(0.4, 1), 0.3).value, ref::D1_t04_m1_z03) < 1e-14);
  CHECK(relative(d_eval(d1(0.4, 2), cplx(0.7, -0.2)).value, ref::D1_t04_m2_z07_m02i) < 1e-14);
  CHECK(relative(d_eval(d2(1, 0.3, 0.2), 0.25).value, ref::D2_m1_b03_u02_z025) < 1e-14);
  CHECK(relative(d_eval(d2(2, 0.45, 0.1), cplx(-0.4, 0.1)).value, ref::D2_m2_b045_u01_zm04_01i) <
        1e-13);
}

TEST_CASE("D has a pole at the origin for m >= 1") {
  try {
    d_eval(d0(2), 0.0);
    FAIL("expected PoleAtOrigin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOrigin);
  }
}

TEST_CASE("inhomogeneous equations") {
  CHECK(inhom_residual(d0(0), 0.5).residual <= 1e-10);
  CHECK(inhom_residual(d0(2), cplx(1.0, 0.5)).residual <= 1e-9);
  CHECK(inhom_residual(d1(0.4, 1), 0.3).residual <= 1e-9);
  // theta = 1 gives a = (1 + m + theta)/2 = 1 at m = 0.
  CHECK(inhom_residual(d1(1.0, 0), 0.5).residual <= 1e-9);
  CHECK(inhom_residual(d2(1, 0.3, 0.2), 0.25).residual <= 1e-9);
}

TEST_CASE("log solutions solve the homogeneous equation") {
  auto resid = [](const DSpec& s, cplx z) {
    const Evaluable f = evaluable_jet([&](cplx w) { return log_solution_jet(s, w); });
    return ode_residual(f, f_params(s), z).residual;
  };
  CHECK(resid(d0(0), 1.0) <= 1e-9);
  CHECK(resid(d2(0, 0.3, 0.2), -0.25) <= 1e-8);
  CHECK(resid(d1(0.4, 2), cplx(0.7, 0.4)) <= 1e-9);
  CHECK_THROWS_AS(log_solution(d0(1), -0.5), Error);
  CHECK_THROWS_AS(log_solution(d2(1, 0.3, 0.2), 0.5), Error);
}

TEST_CASE("log solution of 0F1 gives the U function up to a factor") {
  // U_m = (-1)^{m+1} (log z F_m + D_m) / sqrt(pi)
  const cplx z = 0.5;
  const cplx l = log_solution(d0(1), z).value;
  const cplx u = l / kSqrtPi;
  CHECK(relative(u, ref::U0_a1_z05) < 1e-9);
}

TEST_CASE("singular parameters are rejected") {
  // A = (1 + m + theta)/2 = 0 hits a digamma pole.
  CHECK_THROWS_AS(validate(d1(-2.0, 1)), Error);
  CHECK_THROWS_AS(dspec_from(Params0F1{0.5}), Error);
  const DSpec s = dspec_from(Params1F1{0.4, 2.0});
  CHECK(s.kind == EqKind::F1);
  CHECK(s.m == 2);
}

TEST_CASE("normalization constant") {
  CHECK(std::abs(d_normalization_constant(0) - 2.0 * kEulerGamma) < 1e-15);
  CHECK(std::abs(d_normalization_constant(3) - (2.0 * kEulerGamma - 11.0 / 6.0)) < 1e-15);
}

TEST_CASE("symmetric 2F1 companion") {
  const DSpec s = d2(1, 0.3, 0.2);
  const cplx pre = hyperd::gamma((1.0 + 1.0 + 0.3 - 0.2) / 2.0) * hyperd::gamma((1.0 + 1.0 - 0.3 + 0.2) / 2.0);
  CHECK(absdiff(d2_norm_I(s, 0.25).value, pre * d_eval(s, 0.25).value) < 1e-12);
}
