#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperd/error.hpp"
#include "hyperd/hyperu.hpp"
#include "hyperd/oracle.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;

TEST_CASE("ODE residual of F") {
  const EquationParams p = Params0F1{0.0};
  const Evaluable f = evaluable_jet([&](cplx z) { return f_norm_jet(p, z); });
  const ResidualReport r = ode_residual(f, p, 1.0);
  CHECK(r.residual <= 1e-10);
  CHECK(r.method == ResidualMethod::SeriesDeriv);
}

TEST_CASE("ODE residual of a constant") {
  const Evaluable one{[](cplx) { return jet_constant(1.0); }, {}};
  CHECK(std::abs(ode_residual(one, Params0F1{0.0}, 1.0).residual - 1.0) < 1e-15);
}

TEST_CASE("finite-difference residual") {
  const EquationParams p = Params1F1{0.4, 0.3};
  const Evaluable f = evaluable_value([&](cplx z) { return f_norm(p, z); });
  const ResidualReport r = ode_residual(f, p, cplx(0.7, 0.2));
  CHECK(r.method != ResidualMethod::SeriesDeriv);
  CHECK(r.step > 0.0);
  CHECK(r.scaled <= 1e-7);
  const Jet j = fd_jet([](cplx z) { return std::exp(z); }, 0.5);
  CHECK(absdiff(j.d1, std::exp(0.5)) < 1e-10);
  CHECK(absdiff(j.d2, std::exp(0.5)) < 1e-6);
}

TEST_CASE("inhomogeneous residuals") {
  CHECK(inhom_residual(DSpec{EqKind::F0, 0}, 0.5).residual <= 1e-10);
  CHECK(inhom_residual(DSpec{EqKind::F0, 2}, cplx(1.0, 0.5)).residual <= 1e-9);
  CHECK(inhom_residual(DSpec{EqKind::F1, 1, 0.4}, 0.3).residual <= 1e-9);
  CHECK_THROWS_AS(inhom_residual(DSpec{EqKind::F0, -1}, 0.5), Error);
}

TEST_CASE("limit in alpha matches the log route") {
  CHECK(absdiff(limit_alpha(EqKind::F0, 0, {}, 0.5).value, u0(0.0, 0.5, URoute::LogPlusD).value) <= 1e-7);
  CHECK(absdiff(limit_alpha(EqKind::F1, 1, {0.4, 0.0, 0.0}, 0.7).value,
                u1(0.4, 1.0, 0.7, URoute::LogPlusD).value) <= 1e-6);
  CHECK(absdiff(limit_alpha(EqKind::F2, 0, {0.0, 0.3, 0.2}, -0.4).value,
                u2(0.0, 0.3, 0.2, -0.4, URoute::LogPlusD).value) <= 1e-6);
}

TEST_CASE("connection value approaches U away from integers") {
  const cplx z = 0.9;
  CHECK(absdiff(connection_value(EqKind::F0, 0.4, {}, z), u0(0.4, z).value) < 1e-12);
}

TEST_CASE("alpha derivative") {
  const auto r = alpha_derivative(Params0F1{0.0}, 0.0);
  CHECK(absdiff(r.value, kEulerGamma) < 1e-14);

  // D_m is the alpha derivative at m plus z^{-m} times the one at -m.
  const long m = 1;
  const cplx z = 0.5;
  const cplx dp = alpha_derivative(Params0F1{1.0}, z).value;
  const cplx dm = alpha_derivative(Params0F1{-1.0}, z).value;
  const cplx bracket = std::log(z) * f_norm(Params0F1{1.0}, z).value + dp + dm / z;
  const cplx logsol = log_solution(DSpec{EqKind::F0, m}, z).value;
  CHECK(absdiff(bracket, logsol) < 1e-8);
}

TEST_CASE("finite-difference alpha derivative is second order") {
  const EquationParams p = Params1F1{0.4, 0.3};
  const cplx z(0.6, 0.2);
  const cplx exact = alpha_derivative_series(p, z);
  const double e1 = std::abs(alpha_derivative_fd(p, z, 1e-2) - exact);
  const double e2 = std::abs(alpha_derivative_fd(p, z, 5e-3) - exact);
  const double e3 = std::abs(alpha_derivative_fd(p, z, 2.5e-3) - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.05));
}
