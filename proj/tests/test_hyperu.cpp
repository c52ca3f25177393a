#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperd/error.hpp"
#include "hyperd/hyperu.hpp"
#include "hyperd/oracle.hpp"
#include "reference/reference_values.hpp"
#include "suites.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;
using testutil::relative;
using testutil::scaled;

TEST_CASE("0F1 U function") {
  const cplx z = 2.0;
  const cplx u = u0(0.3, z).value;
  CHECK(relative(u, ref::U0_a03_z2) < 1e-13);
  CHECK(absdiff(u, principal_pow(z, -0.3) * u0(-0.3, z).value) < 1e-10);
  CHECK(relative(u0(2.0, cplx(1.0, 1.0)).value, ref::U0_a2_z1_1i) < 1e-13);
}

TEST_CASE("0F1 U at integer alpha: log route against the limit") {
  const auto u = u0(1.0, 0.5, URoute::LogPlusD);
  CHECK(relative(u.value, ref::U0_a1_z05) < 1e-13);
  const auto lim = limit_alpha(EqKind::F0, 1, {}, 0.5);
  CHECK(absdiff(u.value, lim.value) < 1e-7);
  CHECK(absdiff(limit_alpha(EqKind::F0, 0, {}, 0.5).value, u0(0.0, 0.5, URoute::LogPlusD).value) < 1e-7);
}

TEST_CASE("0F1 U at large z: log route against the asymptotic route") {
  const auto a = u0(0.0, 25.0, URoute::LogPlusD);
  const auto b = u0(0.0, 25.0, URoute::Asymptotic2F0);
  CHECK(absdiff(a.value, b.value) <= 2.0 * (a.err_estimate + b.err_estimate));
  // The log route cancels by about exp(4 sqrt z) here; its estimate says so.
  CHECK(absdiff(a.value, ref::U0_a0_z25) <= a.err_estimate);
  CHECK(absdiff(b.value, ref::U0_a0_z25) <= b.err_estimate);
  CHECK(relative(b.value, ref::U0_a0_z25) < 1e-8);
}

TEST_CASE("1F1 U function") {
  const cplx z = 1.5;
  const cplx u = u1(0.4, 0.25, z).value;
  CHECK(relative(u, ref::U1_t04_a025_z15) < 1e-13);
  CHECK(absdiff(u, principal_pow(z, -0.25) * u1(0.4, -0.25, z).value) < 1e-10);
}

TEST_CASE("1F1 U at integer alpha") {
  const auto u = u1(0.4, 0.0, 0.7, URoute::LogPlusD);
  CHECK(relative(u.value, ref::U1_t04_a0_z07) < 1e-13);
  CHECK(absdiff(u.value, limit_alpha(EqKind::F1, 0, {0.4, 0.0, 0.0}, 0.7).value) < 1e-7);
  const auto u1m = u1(0.4, 1.0, 0.7, URoute::LogPlusD);
  CHECK(relative(u1m.value, ref::U1_t04_a1_z07) < 1e-13);
  CHECK(absdiff(u1m.value, limit_alpha(EqKind::F1, 1, {0.4, 0.0, 0.0}, 0.7).value) < 1e-6);
}

TEST_CASE("1F1 U: connection formula against the asymptotic route") {
  const auto a = u1(0.4, 0.5, 30.0, URoute::Connection);
  const auto b = u1(0.4, 0.5, 30.0, URoute::Asymptotic2F0);
  CHECK(absdiff(a.value, b.value) <= a.err_estimate + b.err_estimate + 1e-12 * std::abs(b.value));
  CHECK(relative(b.value, ref::U1_t04_a05_z30) < 1e-12);
}

TEST_CASE("2F1 U: Kummer forms") {
  const auto forms = u2_kummer_forms(0.2, 0.3, 0.4, cplx(-0.3, 0.2));
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) worst = std::max(worst, absdiff(forms[i].value, forms[j].value));
  }
  CHECK(worst <= 1e-9);
  CHECK(relative(forms[0].value, ref::U2_a02_b03_u04_zm03_02i) < 1e-12);
}

TEST_CASE("2F1 U at integer alpha") {
  const auto u = u2(1.0, 0.3, 0.2, -0.4, URoute::LogPlusD);
  CHECK(relative(u.value, ref::U2_a1_b03_u02_zm04) < 1e-12);
  CHECK(absdiff(u.value, limit_alpha(EqKind::F2, 1, {0.0, 0.3, 0.2}, -0.4).value) < 1e-6);
  const auto u0v = u2(0.0, 0.3, 0.2, -0.4);
  CHECK(relative(u0v.value, ref::U2_a0_b03_u02_zm04) < 1e-12);
  CHECK(absdiff(u0v.value, limit_alpha(EqKind::F2, 0, {0.0, 0.3, 0.2}, -0.4).value) < 1e-6);
}

TEST_CASE("2F1 U: reflection z -> 1 - z") {
  const cplx z(0.3, 0.2);
  const cplx lhs = u2(0.2, 0.3, 0.4, z).value;
  const cplx rhs = u2_one_minus_z(0.2, 0.3, 0.4, z).value;
  CHECK(absdiff(lhs, rhs) < 1e-9);
  CHECK_THROWS_AS(u2_one_minus_z(0.2, 0.3, 0.4, 0.3), Error);
}

TEST_CASE("2F1 U outside the unit disc") {
  CHECK(relative(u2(0.3, 0.2, 0.1, cplx(-2.0, 0.5)).value, ref::U2_a03_b02_u01_zm2_05i) < 1e-12);
  CHECK(relative(u2(2.0, 0.45, 0.1, cplx(1.6, 0.5)).value, ref::U2_a2_b045_u01_z16_05i) < 1e-12);
}

TEST_CASE("route selection") {
  CHECK(parse_route("logplusd") == URoute::LogPlusD);
  CHECK_FALSE(parse_route("bogus").has_value());
  CHECK_THROWS_AS(u0(0.3, 1.0, URoute::LogPlusD), Error);
  CHECK_THROWS_AS(u0(1.0, 1.0, URoute::Connection), Error);
  CHECK_THROWS_AS(u2(0.3, 0.2, 0.1, 0.3, URoute::Asymptotic2F0), Error);
}

TEST_CASE("U solves its equation") {
  const EquationParams ps[] = {Params0F1{0.3}, Params0F1{2.0}, Params1F1{0.4, 0.25},
                               Params1F1{0.4, 1.0}};
  for (const auto& p : ps) {
    const Evaluable f = evaluable_jet([&](cplx w) { return u_eval_jet(p, w); });
    CHECK(ode_residual(f, p, cplx(1.2, 0.5)).scaled <= 1e-8);
  }
  const EquationParams q = Params2F1{1.0, 0.3, 0.2};
  const Evaluable f = evaluable_jet([&](cplx w) { return u_eval_jet(q, w); });
  CHECK(ode_residual(f, q, cplx(-0.4, 0.2)).scaled <= 1e-8);
}

TEST_CASE("Bessel functions") {
  CHECK(absdiff(bessel(BesselKind::I, 0, 0.0).value, 1.0) < 1e-16);
  const cplx k0 = bessel(BesselKind::K, 0, 1.0).value;
  const cplx k1 = bessel(BesselKind::K, 1, 1.0).value;
  CHECK(absdiff(k0, suites::bessel_k_quadrature(0.0, 1.0)) < 1e-8);
  CHECK(absdiff(k1, suites::bessel_k_quadrature(1.0, 1.0)) < 1e-8);
  CHECK(relative(k0, ref::K0_1) < 1e-14);
  CHECK(relative(k1, ref::K1_1) < 1e-14);
  CHECK(relative(bessel(BesselKind::K, 2, cplx(0.7, 0.3)).value, ref::K2_z07_03i) < 1e-13);
  CHECK(relative(bessel(BesselKind::I, 2, cplx(1.5, 0.5)).value, ref::I2_z15_05i) < 1e-14);
  CHECK(relative(bessel(BesselKind::J, 1, cplx(2.0, 0.1)).value, ref::J1_z2_01i) < 1e-14);
  CHECK(relative(bessel(BesselKind::H1, 1, cplx(2.0, 0.1)).value, ref::H1_1_z2_01i) < 1e-13);
  CHECK(relative(bessel(BesselKind::H2, 0, 1.5).value, ref::H2_0_z15) < 1e-13);
  CHECK(relative(bessel(BesselKind::H1, 3, cplx(0.8, 1.2)).value, ref::H1_3_z08_12i) < 1e-13);
}

TEST_CASE("Hankel functions sum to twice J") {
  const cplx z(2.0, 0.1);
  const cplx h = bessel(BesselKind::H1, 1, z).value + bessel(BesselKind::H2, 1, z).value;
  CHECK(absdiff(h, 2.0 * bessel(BesselKind::J, 1, z).value) < 1e-9);
}

TEST_CASE("K from the series route against the asymptotic expansion") {
  // K_m(z) = (sqrt(pi)/2) (z/2)^m U_m(z^2/4); the two routes overlap only
  // to about exp(-2|z|) relative accuracy.
  for (long m = 0; m <= 2; ++m) {
    const double dm = static_cast<double>(m);
    for (cplx z : {cplx(7.0), cplx(8.0), cplx(9.0), cplx(8.0, 2.0)}) {
      const cplx series = bessel(BesselKind::K, m, z).value;
      const cplx asym = kSqrtPi / 2.0 * principal_pow(z / 2.0, dm) *
                        u0(dm, z * z / 4.0, URoute::Asymptotic2F0).value;
      CHECK(relative(series, asym) < 1e-6);
    }
  }
}
