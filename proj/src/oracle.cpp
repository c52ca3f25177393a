#include "hyperd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Combination {
  cplx value{};
  double noise = 0.0;  // rounding scale of the two-term bracket
};

Combination connection_terms(EqKind kind, cplx alpha, const LimitParams& r, cplx z,
                             const SeriesOptions& opt) {
  cplx pre, t1, t2;
  switch (kind) {
    case EqKind::F0: {
      const EquationParams p = Params0F1{alpha};
      pre = kSqrtPi;
      t1 = f_second(p, z, opt).value;
      t2 = f_norm(p, z, opt).value;
      break;
    }
    case EqKind::F1: {
      const EquationParams p = Params1F1{r.theta, alpha};
      pre = kPi;
      t1 = f_second(p, z, opt).value * recip_gamma((1.0 + r.theta + alpha) / 2.0);
      t2 = f_norm(p, z, opt).value * recip_gamma((1.0 + r.theta - alpha) / 2.0);
      break;
    }
    case EqKind::F2: {
      const EquationParams p = Params2F1{alpha, r.beta, r.mu};
      const EquationParams q = Params2F1{-alpha, r.beta, -r.mu};
      pre = -kPi;
      t1 = f_norm(p, z, opt).value * recip_gamma((1.0 - alpha - r.beta - r.mu) / 2.0) *
           recip_gamma((1.0 - alpha + r.beta - r.mu) / 2.0);
      t2 = std::exp(-alpha * log_negated(z)) * f_norm(q, z, opt).value *
           recip_gamma((1.0 + alpha + r.beta - r.mu) / 2.0) *
           recip_gamma((1.0 + alpha - r.beta - r.mu) / 2.0);
      break;
    }
  }
  const cplx s = sin_pi(alpha);
  Combination c;
  c.value = pre * (t1 - t2) / s;
  c.noise = kEps * std::abs(pre / s) * (std::abs(t1) + std::abs(t2));
  return c;
}

}  // namespace

std::string to_string(ResidualMethod m) {
  switch (m) {
    case ResidualMethod::SeriesDeriv: return "series";
    case ResidualMethod::FiniteDiff: return "finite-difference";
    case ResidualMethod::Richardson: return "richardson";
  }
  return "?";
}

Evaluable evaluable_jet(std::function<JetResult(cplx)> f) {
  Evaluable e;
  e.jet = [f](cplx z) { return f(z).value; };
  e.value = [f](cplx z) { return f(z).value.v; };
  return e;
}

Evaluable evaluable_value(std::function<EvalResult(cplx)> f) {
  Evaluable e;
  e.value = [f](cplx z) { return f(z).value; };
  return e;
}

double fd_step(cplx z) { return 1e-4 * std::max(1.0, std::abs(z)); }

Jet fd_jet(const std::function<cplx(cplx)>& f, cplx z) {
  const double h = fd_step(z);
  const cplx f0 = f(z);
  const cplx p1 = f(z + h), m1 = f(z - h);
  const cplx p2 = f(z + 2.0 * h), m2 = f(z - 2.0 * h);
  Jet j;
  j.v = f0;
  j.d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
  j.d2 = (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12.0 * h * h);
  return j;
}

ResidualReport ode_residual(const Evaluable& f, const EquationParams& p, cplx z) {
  ResidualReport r;
  Jet j;
  if (f.jet) {
    j = f.jet(z);
    r.method = ResidualMethod::SeriesDeriv;
  } else {
    if (!f.value) fail(ErrorKind::InvalidArgument, "ode_residual: empty evaluable");
    j = fd_jet(f.value, z);
    r.method = ResidualMethod::FiniteDiff;
    r.step = fd_step(z);
  }
  const OperatorCoeffs c = operator_coeffs(p, z);
  r.residual = std::abs(apply_operator(p, z, j));
  const double scale = std::max({1.0, std::abs(c.c2 * j.d2), std::abs(c.c1 * j.d1),
                                 std::abs(c.c0 * j.v)});
  r.scaled = r.residual / scale;
  return r;
}

ResidualReport inhom_residual(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  if (spec.m < 0) fail(ErrorKind::Domain, "inhom_residual: m must be non-negative");
  const EquationParams p = f_params(spec);
  const Jet d = d_eval_jet(spec, z, opt).value;
  const Jet f = f_norm_jet(p, z, opt).value;
  const double m = static_cast<double>(spec.m);
  cplx rhs;
  switch (spec.kind) {
    case EqKind::F0:
      rhs = -(m / z) * f.v - 2.0 * f.d1;
      break;
    case EqKind::F1:
      rhs = (1.0 - m / z) * f.v - 2.0 * f.d1;
      break;
    case EqKind::F2: {
      const cplx a = (1.0 + m + spec.beta - spec.mu) / 2.0;
      const cplx b = (1.0 + m + spec.beta + spec.mu) / 2.0;
      rhs = (a + b - m / z) * f.v + 2.0 * (z - 1.0) * f.d1;
      break;
    }
  }
  const cplx lhs = apply_operator(p, z, d);
  ResidualReport r;
  r.method = ResidualMethod::SeriesDeriv;
  r.residual = std::abs(lhs - rhs);
  r.scaled = r.residual / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return r;
}

cplx connection_value(EqKind kind, cplx alpha, const LimitParams& rest, cplx z,
                      const SeriesOptions& opt) {
  return connection_terms(kind, alpha, rest, z, opt).value;
}

EvalResult limit_alpha(EqKind kind, long m, const LimitParams& rest, cplx z,
                       const SeriesOptions& opt) {
  constexpr int n = 4;
  cplx table[n][n];
  double noise = 0.0;
  for (int i = 0; i < n; ++i) {
    const Combination c =
        connection_terms(kind, cplx(static_cast<double>(m) + kLimitSteps[i], 0.0), rest, z, opt);
    if (!std::isfinite(c.value.real()) || !std::isfinite(c.value.imag())) {
      fail(ErrorKind::ExtrapolationUnstable, "limit_alpha: non-finite ladder value");
    }
    table[i][0] = c.value;
    noise = std::max(noise, c.noise);
  }
  for (int j = 1; j < n; ++j) {
    const double f = std::ldexp(1.0, j) - 1.0;
    for (int i = j; i < n; ++i) {
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / f;
    }
  }
  // Amplification of rounding through the tableau is below 2^n.
  const double floor = 16.0 * noise + 1e-14 * std::abs(table[n - 1][n - 1]);
  double prev = -1.0;
  double last = 0.0;
  for (int j = 1; j < n; ++j) {
    const double inc = std::abs(table[j][j] - table[j - 1][j - 1]);
    if (prev >= 0.0 && inc > floor && inc > prev / 2.0) {
      fail(ErrorKind::ExtrapolationUnstable,
           "limit_alpha: Richardson increments do not contract by 2x");
    }
    prev = inc;
    last = inc;
  }
  EvalResult out;
  out.value = table[n - 1][n - 1];
  out.err_estimate = last + floor;
  out.terms_used = n;
  return out;
}

cplx alpha_derivative_series(const EquationParams& p, cplx z, const SeriesOptions& opt) {
  const cplx alpha = alpha_of(p);
  // Numerator parameters a_i and their alpha-derivatives (1/2 each).
  cplx a[2];
  int count = 0;
  if (const auto* q = std::get_if<Params1F1>(&p)) {
    a[count++] = (1.0 + alpha + q->theta) / 2.0;
  } else if (const auto* q = std::get_if<Params2F1>(&p)) {
    a[count++] = (1.0 + alpha + q->beta - q->mu) / 2.0;
    a[count++] = (1.0 + alpha + q->beta + q->mu) / 2.0;
  }
  if (kind_of(p) == EqKind::F2 && std::abs(z) > kF2SeriesRadius) {
    fail(ErrorKind::Domain, "2F1 series needs |z| <= 0.95");
  }

  // Term T_j = P_j z^j / j! * rg(1 + alpha + j) and its alpha-derivative.
  // The first few terms, where 1 + alpha + j may sit on a Gamma pole, are
  // formed directly; later ones by the term ratio.
  const long direct = std::max<long>(1, static_cast<long>(std::ceil(-alpha.real())) + 2);
  cplx P = 1.0, dP = 0.0, zj = 1.0;
  double jfact = 1.0;
  cplx T = 0.0, dT = 0.0, sum = 0.0;
  int small = 0;
  for (long j = 0; j < opt.max_terms; ++j) {
    const double dj = static_cast<double>(j);
    const cplx x = 1.0 + alpha + dj;
    if (j < direct) {
      const cplx q = zj / jfact;
      T = P * q * recip_gamma(x);
      dT = (dP * recip_gamma(x) + P * recip_gamma_derivative(x)) * q;
    }
    sum += dT;
    if (j >= direct) {
      if (std::abs(dT) <= opt.rel_tol * std::abs(sum) && std::abs(T) <= opt.rel_tol * std::abs(sum)) {
        if (++small >= 3) return sum;
      } else {
        small = 0;
      }
    }
    // Advance.
    cplx N = 1.0, dN = 0.0;
    for (int i = 0; i < count; ++i) {
      dN = dN * (a[i] + dj) + N * 0.5;
      N *= a[i] + dj;
    }
    if (j + 1 < direct) {
      dP = dP * N + P * dN;
      P *= N;
      zj *= z;
      jfact *= dj + 1.0;
    } else {
      const cplx r = N * z / ((dj + 1.0) * x);
      const cplx dr = z / (dj + 1.0) * (dN / x - N / (x * x));
      dT = dT * r + T * dr;
      T *= r;
    }
  }
  fail(ErrorKind::NoConvergence, "alpha_derivative: series did not converge");
}

cplx alpha_derivative_fd(const EquationParams& p, cplx z, double h) {
  const cplx alpha = alpha_of(p);
  SeriesOptions opt;
  opt.rel_tol = 1e-16;
  const cplx up = f_norm(with_alpha(p, alpha + h), z, opt).value;
  const cplx dn = f_norm(with_alpha(p, alpha - h), z, opt).value;
  return (up - dn) / (2.0 * h);
}

EvalResult alpha_derivative(const EquationParams& p, cplx z, const SeriesOptions& opt) {
  const cplx s = alpha_derivative_series(p, z, opt);
  const cplx fd = alpha_derivative_fd(p, z, kAlphaFdStep);
  const double diff = std::abs(s - fd);
  if (diff > kRoutesAgreement * std::max(1.0, std::abs(s))) {
    fail(ErrorKind::RoutesDisagree, "alpha_derivative: psi series and finite difference disagree");
  }
  EvalResult out;
  out.value = s;
  out.err_estimate = diff;
  return out;
}

}  // namespace hyperd
