#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperd/error.hpp"
#include "hyperd/hyperf.hpp"
#include "reference/reference_values.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;
using testutil::relative;
using testutil::scaled;

TEST_CASE("0F1 normalized function") {
  CHECK(absdiff(f_norm(Params0F1{0.0}, 0.0).value, 1.0) < 1e-16);
  CHECK(absdiff(f_norm(Params0F1{0.0}, 1.0).value, ref::F0_a0_z1) < 1e-9);
  CHECK(relative(f_norm(Params0F1{0.0}, 1.0).value, ref::F0_a0_z1) < 1e-15);
  CHECK(relative(f_norm(Params0F1{1.3}, 0.7).value, ref::F0_a13_z07) < 1e-14);
  const auto r = f_norm(Params0F1{cplx(2.5, 0.5)}, cplx(-1.2, 0.4));
  CHECK(relative(r.value, ref::F0_a25_05i_zm12_04i) < 1e-14);
  CHECK(r.err_estimate < 1e-14);
}

TEST_CASE("0F1 at negative integer alpha") {
  const cplx z = 0.3;
  const cplx fm = f_norm(Params0F1{1.0}, z).value;
  const cplx fneg = f_norm(Params0F1{-1.0}, z).value;
  CHECK(absdiff(fm - fneg / z, 0.0) < 1e-12);
}

TEST_CASE("1F1 and 2F1 normalized functions") {
  CHECK(relative(f_norm(Params1F1{0.4, 0.3}, cplx(0.6, 0.2)).value, ref::F1_t04_a03_z06_02i) < 1e-14);
  CHECK(relative(f_norm(Params1F1{2.4, 0.2}, 0.3).value, ref::F1_t24_a02_z03) < 1e-14);
  CHECK(relative(f_norm(Params2F1{0.2, 0.3, 0.4}, 0.3).value, ref::F2_a02_b03_u04_z03) < 1e-14);
  CHECK(relative(f_norm(Params2F1{1.4, 0.2, -0.35}, cplx(-0.5, 0.5)).value,
                 ref::F2_a14_b02_um035_zm05_05i) < 1e-13);
}

TEST_CASE("1F1 with a = c is the exponential") {
  const EquationParams p = from_classical(EqKind::F1, {1.0, 0.0, 1.0});
  CHECK(absdiff(f_norm(p, 0.3).value, std::exp(0.3)) < 1e-12);
}

TEST_CASE("2F1 series is refused near the unit circle") {
  CHECK_THROWS_AS(f_norm(Params2F1{0.2, 0.3, 0.4}, 0.97), Error);
}

TEST_CASE("second solution") {
  const cplx z(0.8, 0.3);
  CHECK(absdiff(f_second(Params0F1{0.0}, z).value, f_norm(Params0F1{0.0}, z).value) == 0.0);
  // Degenerate 1F1 proportionality.
  const double t = 0.7, m = 2.0;
  const cplx lhs = pochhammer((t - m + 1.0) / 2.0, 2) * f_norm(Params1F1{t, m}, 0.4).value;
  const cplx rhs = ipow(0.4, -2) * f_norm(Params1F1{t, -m}, 0.4).value;
  CHECK(scaled(lhs, rhs) < 1e-12);
}

TEST_CASE("degenerate 2F1: four coefficient forms agree") {
  const long m = 1;
  const double b = 0.3, u = 0.2, dm = 1.0;
  const cplx z = 0.25;
  auto poch = [&](double x) { return pochhammer((1.0 - dm + x) / 2.0, m); };
  const cplx lhs = ipow(z, -m) * f_norm(Params2F1{-dm, b, -u}, z).value;
  const cplx f = f_norm(Params2F1{dm, b, u}, z).value;
  const cplx forms[4] = {poch(b - u) * poch(b + u) * f, poch(-b - u) * poch(-b + u) * f,
                         -poch(b + u) * poch(-b + u) * f, -poch(b - u) * poch(-b - u) * f};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, scaled(lhs, forms[i]));
    for (int j = i + 1; j < 4; ++j) worst = std::max(worst, scaled(forms[i], forms[j]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("2F0 asymptotic series") {
  const auto trivial = f2f0_asymptotic(0.0, 0.7, -3.0);
  CHECK(trivial.value == cplx(1.0));
  CHECK(trivial.err_estimate == 0.0);
  CHECK(f2f0_asymptotic(0.5, 0.5, 0.0).value == cplx(1.0));

  const auto r = f2f0_asymptotic(0.5, 0.5, -0.01);
  CHECK(absdiff(r.value, ref::F2F0_half_half_m001) <= 2.0 * r.err_estimate);
  CHECK(r.err_estimate < 1e-14);

  try {
    f2f0_asymptotic(0.5, 0.5, 5.0);
    FAIL("expected DivergedImmediately");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergedImmediately);
  }
}

TEST_CASE("2F1 symmetric normalization") {
  CHECK(absdiff(f2_norm_I(Params2F1{0.0, 0.0, 0.0}, 0.0).value, kPi) < 1e-14);
  // The series is symmetric in a, b, which swaps mu -> -mu.
  const cplx z = 0.3;
  CHECK(absdiff(f_norm(Params2F1{0.2, 0.3, 0.4}, z).value, f_norm(Params2F1{0.2, 0.3, -0.4}, z).value) <
        1e-15);
  // d/dz F^I_{alpha,beta,mu} = ((1+alpha+beta+mu)/2) F^I_{alpha+1,beta+1,mu}
  const Params2F1 p{0.2, 0.3, 0.4};
  const cplx d = f2_norm_I_jet(p, 0.25).value.d1;
  const cplx shifted = f2_norm_I(Params2F1{1.2, 1.3, 0.4}, 0.25).value;
  CHECK(absdiff(d, (1.0 + 0.2 + 0.3 + 0.4) / 2.0 * shifted) < 1e-13);
}

TEST_CASE("classical parameter conversion round-trips") {
  const EquationParams ps[] = {Params0F1{cplx(0.3, 0.1)}, Params1F1{0.4, -0.6},
                               Params2F1{0.2, 0.3, cplx(0.4, 0.2)}};
  for (const auto& p : ps) {
    const EquationParams q = from_classical(kind_of(p), to_classical(p));
    CHECK(absdiff(alpha_of(q), alpha_of(p)) < 1e-15);
    CHECK(absdiff(f_norm(q, 0.3).value, f_norm(p, 0.3).value) < 1e-15);
  }
  const ClassicalParams c = to_classical(Params1F1{0.4, 0.3});
  CHECK(absdiff(c.a, 0.85) < 1e-15);
  CHECK(absdiff(c.c, 1.3) < 1e-16);
}

TEST_CASE("operator annihilates both power solutions") {
  const EquationParams ps[] = {Params0F1{0.3}, Params1F1{0.4, 0.3}, Params2F1{0.2, 0.3, 0.4}};
  const cplx z(0.4, 0.3);
  for (const auto& p : ps) {
    CHECK(std::abs(apply_operator(p, z, f_norm_jet(p, z).value)) < 1e-13);
    CHECK(std::abs(apply_operator(p, z, f_second_jet(p, z).value)) < 1e-12);
  }
}

TEST_CASE("degeneracy snapping") {
  CHECK(is_degenerate(Params0F1{2.0 + 1e-12}));
  CHECK_FALSE(is_degenerate(Params0F1{2.0 + 1e-6}));
  CHECK(alpha_of(snap_degenerate(Params0F1{2.0 + 1e-12})) == cplx(2.0));
}
