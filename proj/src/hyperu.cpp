#include "hyperd/hyperu.hpp"

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

constexpr cplx kI(0.0, 1.0);

long nearest_integer(cplx a, double tol, bool& ok) {
  long n = 0;
  ok = near_integer(a, tol, n);
  return n;
}

double sign_of_power(long m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// (-z)^a with derivatives in z.
Jet jet_pow_negated(cplx z, cplx a) {
  long n = 0;
  if (a.imag() == 0.0 && a.real() == std::floor(a.real()) && std::abs(a.real()) < 1e9) {
    n = static_cast<long>(a.real());
    const Jet j = jet_pow(-z, cplx(static_cast<double>(n), 0.0));
    return {j.v, -j.d1, j.d2};
  }
  const cplx v = std::exp(a * log_negated(z));
  return {v, a * v / z, a * (a - 1.0) * v / (z * z)};
}

// (1-z)^a with derivatives in z.
Jet jet_pow_one_minus(cplx z, cplx a) {
  const Jet j = jet_pow(1.0 - z, a);
  return {j.v, -j.d1, j.d2};
}

void require_route_ok(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::RouteInapplicable, what);
}

URoute resolve_integer_route(cplx alpha, URoute route) {
  if (route != URoute::Auto) return route;
  bool integer = false;
  nearest_integer(alpha, kDegeneracyTolerance, integer);
  if (integer) return URoute::LogPlusD;
  bool close = false;
  nearest_integer(alpha, kConnectionBand, close);
  if (close) {
    fail(ErrorKind::RouteInapplicable,
         "alpha is within 1e-6 of an integer but outside the degeneracy band");
  }
  return URoute::Connection;
}

void check_connection(cplx alpha) {
  bool close = false;
  nearest_integer(alpha, kConnectionBand, close);
  require_route_ok(!close, "Connection route needs alpha at distance > 1e-6 from the integers");
}

long check_log_plus_d(cplx alpha) {
  bool integer = false;
  const long m = nearest_integer(alpha, kDegeneracyTolerance, integer);
  require_route_ok(integer, "LogPlusD route needs integer alpha");
  return m;
}

// --- 0F1 -------------------------------------------------------------------

JetResult u0_connection(cplx alpha, cplx z, const SeriesOptions& opt) {
  check_connection(alpha);
  const EquationParams p = Params0F1{alpha};
  return (kSqrtPi / sin_pi(alpha)) * (f_second_jet(p, z, opt) - f_norm_jet(p, z, opt));
}

JetResult u0_log_plus_d(cplx alpha, cplx z, const SeriesOptions& opt) {
  const long m = check_log_plus_d(alpha);
  DSpec spec;
  spec.kind = EqKind::F0;
  spec.m = m;
  return (sign_of_power(m + 1) / kSqrtPi) * log_solution_jet(spec, z, opt);
}

EvalResult u0_asymptotic(cplx alpha, cplx z, const SeriesOptions& opt) {
  require_route_ok(z.real() > 0.0, "Asymptotic2F0 route for U_alpha is restricted to Re z > 0");
  const cplx root = principal_pow(z, 0.5);
  const EvalResult s = f2f0_asymptotic(0.5 + alpha, 0.5 - alpha, -1.0 / (4.0 * root), opt);
  return (std::exp(-2.0 * root) * principal_pow(z, -alpha / 2.0 - 0.25)) * s;
}

// --- 1F1 -------------------------------------------------------------------

JetResult u1_connection(cplx theta, cplx alpha, cplx z, const SeriesOptions& opt) {
  check_connection(alpha);
  const EquationParams p = Params1F1{theta, alpha};
  const JetResult second = recip_gamma((1.0 + theta + alpha) / 2.0) * f_second_jet(p, z, opt);
  const JetResult first = recip_gamma((1.0 + theta - alpha) / 2.0) * f_norm_jet(p, z, opt);
  return (kPi / sin_pi(alpha)) * (second - first);
}

JetResult u1_log_plus_d(cplx theta, cplx alpha, cplx z, const SeriesOptions& opt) {
  const long m = check_log_plus_d(alpha);
  if (m < 0) {
    // U_{theta,-n} = z^n U_{theta,n}
    return jet_pow(z, cplx(static_cast<double>(-m), 0.0)) *
           u1_log_plus_d(theta, cplx(static_cast<double>(-m), 0.0), z, opt);
  }
  const cplx g = (1.0 - static_cast<double>(m) + theta) / 2.0;
  if (is_gamma_pole(g)) {
    fail(ErrorKind::ParameterSingular, "Tricomi LogPlusD: Gamma((1-m+theta)/2) at a pole");
  }
  DSpec spec;
  spec.kind = EqKind::F1;
  spec.m = m;
  spec.theta = theta;
  return (sign_of_power(m + 1) * recip_gamma(g)) * log_solution_jet(spec, z, opt);
}

EvalResult u1_asymptotic(cplx theta, cplx alpha, cplx z, const SeriesOptions& opt) {
  const cplx a = (1.0 + alpha + theta) / 2.0;
  const cplx b = (1.0 - alpha + theta) / 2.0;
  const cplx pre = principal_pow(z, -a);
  return pre * f2f0_asymptotic(a, b, -1.0 / z, opt);
}

// --- 2F1 -------------------------------------------------------------------

JetResult u2_connection(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt) {
  check_connection(alpha);
  const Params2F1 p{alpha, beta, mu};
  const Params2F1 r{-alpha, beta, -mu};
  const cplx c1 = recip_gamma((1.0 - alpha - beta - mu) / 2.0) *
                  recip_gamma((1.0 - alpha + beta - mu) / 2.0);
  const cplx c2 = recip_gamma((1.0 + alpha + beta - mu) / 2.0) *
                  recip_gamma((1.0 + alpha - beta - mu) / 2.0);
  const JetResult first = c1 * f_norm_jet(p, z, opt);
  const JetResult second = c2 * (jet_pow_negated(z, -alpha) * f_norm_jet(r, z, opt));
  return (-kPi / sin_pi(alpha)) * (first - second);
}

JetResult u2_log_plus_d(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt) {
  const long m = check_log_plus_d(alpha);
  if (m < 0) {
    // U_{alpha,beta,mu} = (-z)^{-alpha} U_{-alpha,beta,mu}
    return jet_pow_negated(z, cplx(static_cast<double>(-m), 0.0)) *
           u2_log_plus_d(cplx(static_cast<double>(-m), 0.0), beta, mu, z, opt);
  }
  const double dm = static_cast<double>(m);
  const cplx g1 = (1.0 - dm - beta - mu) / 2.0;
  const cplx g2 = (1.0 - dm + beta - mu) / 2.0;
  if (is_gamma_pole(g1) || is_gamma_pole(g2)) {
    fail(ErrorKind::ParameterSingular, "2F1 LogPlusD: prefactor Gamma at a pole");
  }
  DSpec spec;
  spec.kind = EqKind::F2;
  spec.m = m;
  spec.beta = beta;
  spec.mu = mu;
  return (sign_of_power(m + 1) * recip_gamma(g1) * recip_gamma(g2)) *
         log_solution_jet(spec, z, opt);
}

JetResult u2_inverse_series(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt) {
  if (z == cplx(0.0) || std::abs(1.0 / z) > kF2SeriesRadius) {
    fail(ErrorKind::Domain, "InverseSeries route needs |1/z| <= 0.95");
  }
  const cplx w = 1.0 / z;
  const JetResult g = f_norm_jet(Params2F1{-mu, beta, -alpha}, w, opt);
  // chain rule for g(1/z)
  const cplx w1 = -w * w;
  const cplx w2 = 2.0 * w * w * w;
  JetResult inner;
  inner.value = {g.value.v, g.value.d1 * w1, g.value.d2 * w1 * w1 + g.value.d1 * w2};
  inner.err = {g.err[0], g.err[1] * std::abs(w1),
               g.err[2] * std::norm(w1) + g.err[1] * std::abs(w2)};
  inner.terms_used = g.terms_used;
  inner.flags = g.flags;
  return jet_pow_negated(z, (-1.0 - alpha - beta + mu) / 2.0) * inner;
}

JetResult u2_dispatch(cplx alpha, cplx beta, cplx mu, cplx z, URoute route,
                      const SeriesOptions& opt);

JetResult u2_kummer(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt) {
  return jet_pow_one_minus(z, -beta) * u2_dispatch(alpha, -beta, mu, z, URoute::Auto, opt);
}

JetResult u2_dispatch(cplx alpha, cplx beta, cplx mu, cplx z, URoute route,
                      const SeriesOptions& opt) {
  if (route == URoute::Auto) {
    if (std::abs(z) <= kF2SeriesRadius) {
      route = resolve_integer_route(alpha, URoute::Auto);
    } else if (std::abs(z) > 1.0 / kF2SeriesRadius) {
      route = URoute::InverseSeries;
    } else {
      fail(ErrorKind::Domain, "U for 2F1: |z| in the annulus where neither series converges");
    }
  }
  switch (route) {
    case URoute::Connection: return u2_connection(alpha, beta, mu, z, opt);
    case URoute::LogPlusD: return u2_log_plus_d(alpha, beta, mu, z, opt);
    case URoute::InverseSeries: return u2_inverse_series(alpha, beta, mu, z, opt);
    case URoute::KummerReflected: return u2_kummer(alpha, beta, mu, z, opt);
    default: break;
  }
  fail(ErrorKind::RouteInapplicable, "route " + to_string(route) + " does not apply to 2F1");
}

JetResult u0_dispatch(cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  route = resolve_integer_route(alpha, route);
  switch (route) {
    case URoute::Connection: return u0_connection(alpha, z, opt);
    case URoute::LogPlusD: return u0_log_plus_d(alpha, z, opt);
    default: break;
  }
  fail(ErrorKind::RouteInapplicable, "route " + to_string(route) + " has no jet for 0F1");
}

JetResult u1_dispatch(cplx theta, cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  route = resolve_integer_route(alpha, route);
  switch (route) {
    case URoute::Connection: return u1_connection(theta, alpha, z, opt);
    case URoute::LogPlusD: return u1_log_plus_d(theta, alpha, z, opt);
    default: break;
  }
  fail(ErrorKind::RouteInapplicable, "route " + to_string(route) + " has no jet for 1F1");
}

}  // namespace

std::string to_string(URoute route) {
  switch (route) {
    case URoute::Auto: return "auto";
    case URoute::Connection: return "connection";
    case URoute::LogPlusD: return "logplusd";
    case URoute::Asymptotic2F0: return "asymptotic";
    case URoute::KummerReflected: return "kummer";
    case URoute::InverseSeries: return "inverse";
  }
  return "?";
}

std::optional<URoute> parse_route(const std::string& name) {
  for (URoute r : {URoute::Auto, URoute::Connection, URoute::LogPlusD, URoute::Asymptotic2F0,
                   URoute::KummerReflected, URoute::InverseSeries}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

JetResult u0_jet(cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  return u0_dispatch(alpha, z, route, opt);
}

JetResult u1_jet(cplx theta, cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  return u1_dispatch(theta, alpha, z, route, opt);
}

JetResult u2_jet(cplx alpha, cplx beta, cplx mu, cplx z, URoute route, const SeriesOptions& opt) {
  return u2_dispatch(alpha, beta, mu, z, route, opt);
}

EvalResult u0(cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  if (route == URoute::Asymptotic2F0) return u0_asymptotic(alpha, z, opt);
  return u0_dispatch(alpha, z, route, opt).as_eval();
}

EvalResult u1(cplx theta, cplx alpha, cplx z, URoute route, const SeriesOptions& opt) {
  if (route == URoute::Asymptotic2F0) return u1_asymptotic(theta, alpha, z, opt);
  return u1_dispatch(theta, alpha, z, route, opt).as_eval();
}

EvalResult u2(cplx alpha, cplx beta, cplx mu, cplx z, URoute route, const SeriesOptions& opt) {
  return u2_dispatch(alpha, beta, mu, z, route, opt).as_eval();
}

EvalResult u_eval(const EquationParams& p, cplx z, URoute route, const SeriesOptions& opt) {
  if (const auto* q = std::get_if<Params0F1>(&p)) return u0(q->alpha, z, route, opt);
  if (const auto* q = std::get_if<Params1F1>(&p)) return u1(q->theta, q->alpha, z, route, opt);
  const auto& q = std::get<Params2F1>(p);
  return u2(q.alpha, q.beta, q.mu, z, route, opt);
}

JetResult u_eval_jet(const EquationParams& p, cplx z, URoute route, const SeriesOptions& opt) {
  if (const auto* q = std::get_if<Params0F1>(&p)) return u0_jet(q->alpha, z, route, opt);
  if (const auto* q = std::get_if<Params1F1>(&p)) return u1_jet(q->theta, q->alpha, z, route, opt);
  const auto& q = std::get<Params2F1>(p);
  return u2_jet(q.alpha, q.beta, q.mu, z, route, opt);
}

std::array<EvalResult, 4> u2_kummer_forms(cplx alpha, cplx beta, cplx mu, cplx z,
                                          const SeriesOptions& opt) {
  const cplx pz = jet_pow_negated(z, -alpha).v;
  const cplx p1 = principal_pow(1.0 - z, -beta);
  return {u2(alpha, beta, mu, z, URoute::Auto, opt),
          pz * u2(-alpha, beta, mu, z, URoute::Auto, opt),
          p1 * u2(alpha, -beta, mu, z, URoute::Auto, opt),
          (pz * p1) * u2(-alpha, -beta, mu, z, URoute::Auto, opt)};
}

EvalResult u2_one_minus_z(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt) {
  if (z.imag() == 0.0) fail(ErrorKind::BranchCut, "1-z identity needs Im z != 0");
  const double sign = z.imag() > 0.0 ? -1.0 : 1.0;
  const cplx phase = std::exp(sign * kI * kPi * (-1.0 - alpha - beta + mu) / 2.0);
  return phase * u2(beta, alpha, mu, 1.0 - z, URoute::Auto, opt);
}

std::string to_string(BesselKind kind) {
  switch (kind) {
    case BesselKind::I: return "I";
    case BesselKind::J: return "J";
    case BesselKind::K: return "K";
    case BesselKind::H1: return "H1";
    case BesselKind::H2: return "H2";
  }
  return "?";
}

std::optional<BesselKind> parse_bessel_kind(const std::string& name) {
  for (BesselKind k : {BesselKind::I, BesselKind::J, BesselKind::K, BesselKind::H1,
                       BesselKind::H2}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

EvalResult bessel(BesselKind kind, long m, cplx z, const SeriesOptions& opt) {
  const cplx w = z * z / 4.0;
  const cplx half_pow = ipow(z / 2.0, m);
  const EquationParams p = Params0F1{cplx(static_cast<double>(m), 0.0)};
  DSpec spec;
  spec.kind = EqKind::F0;
  spec.m = m;
  switch (kind) {
    case BesselKind::I: return half_pow * f_norm(p, w, opt);
    case BesselKind::J: return half_pow * f_norm(p, -w, opt);
    case BesselKind::K: {
      const EvalResult inner = principal_log(w) * f_norm(p, w, opt) + d_eval(spec, w, opt);
      return (0.5 * sign_of_power(m + 1) * half_pow) * inner;
    }
    case BesselKind::H1: {
      const cplx lg = principal_log(w) - kI * kPi;
      const EvalResult inner = lg * f_norm(p, -w, opt) + d_eval(spec, -w, opt);
      return (kI / kPi * half_pow) * inner;
    }
    case BesselKind::H2: {
      const cplx lg = principal_log(w) + kI * kPi;
      const EvalResult inner = lg * f_norm(p, -w, opt) + d_eval(spec, -w, opt);
      return (-kI / kPi * half_pow) * inner;
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown Bessel kind");
}

}  // namespace hyperd
