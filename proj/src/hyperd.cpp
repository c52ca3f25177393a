#include "hyperd/hyperd.hpp"

#include <memory>

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

// Numerator parameters of the principal part and tail, evaluated at |m|.
struct DParams {
  long m = 0;
  cplx a{};  // (1+m+theta)/2 or (1+m+beta-mu)/2
  cplx b{};  // (1+m+beta+mu)/2
};

DParams d_params(const DSpec& spec) {
  DParams d;
  d.m = spec.m < 0 ? -spec.m : spec.m;
  const double m = static_cast<double>(d.m);
  if (spec.kind == EqKind::F1) d.a = (1.0 + m + spec.theta) / 2.0;
  if (spec.kind == EqKind::F2) {
    d.a = (1.0 + m + spec.beta - spec.mu) / 2.0;
    d.b = (1.0 + m + spec.beta + spec.mu) / 2.0;
  }
  return d;
}

std::function<cplx()> make_tail(EqKind kind, const DParams& d) {
  struct State {
    cplx w{};
    cplx psi_a{}, psi_b{};
    double h1 = 0.0, h2 = 0.0;
    long k = 0;
  };
  auto st = std::make_shared<State>();
  st->w = 1.0 / factorial(d.m);
  st->h1 = -kEulerGamma;
  st->h2 = -kEulerGamma + harmonic(d.m);
  if (kind != EqKind::F0) st->psi_a = digamma(d.a);
  if (kind == EqKind::F2) st->psi_b = digamma(1.0 - d.b);
  const double m = static_cast<double>(d.m);
  return [st, kind, d, m]() {
    const double k = static_cast<double>(st->k);
    cplx out;
    cplx ratio = 1.0 / ((k + 1.0) * (m + k + 1.0));
    switch (kind) {
      case EqKind::F0:
        out = -(st->h1 + st->h2) * st->w;
        break;
      case EqKind::F1:
        out = (st->psi_a - st->h1 - st->h2) * st->w;
        ratio *= d.a + k;
        st->psi_a += 1.0 / (d.a + k);
        break;
      case EqKind::F2:
        out = (st->psi_a + st->psi_b - st->h1 - st->h2) * st->w;
        ratio *= (d.a + k) * (d.b + k);
        st->psi_a += 1.0 / (d.a + k);
        st->psi_b += 1.0 / (d.b + k);
        break;
    }
    st->w *= ratio;
    st->h1 += 1.0 / (k + 1.0);
    st->h2 += 1.0 / (m + k + 1.0);
    ++st->k;
    return out;
  };
}

JetResult principal_jet(const LaurentExpansion& e, cplx z) {
  Jet sum{};
  for (std::size_t i = 0; i < e.principal.size(); ++i) {
    const long k = static_cast<long>(i) + 1;
    sum = sum + e.principal[i] * jet_pow(z, cplx(static_cast<double>(e.power_shift - k), 0.0));
  }
  return exact_jet(sum);
}

void check_domain(const DSpec& spec, cplx z) {
  if (spec.kind == EqKind::F2 && std::abs(z) > kF2SeriesRadius) {
    fail(ErrorKind::Domain, "2F1 D series needs |z| <= 0.95");
  }
  if (z == cplx(0.0) && spec.m >= 1) fail(ErrorKind::PoleAtOrigin, "D_m has a pole at z = 0");
}

}  // namespace

DSpec dspec_from(const EquationParams& p) {
  long m = 0;
  if (!near_integer(alpha_of(p), kDegeneracyTolerance, m)) {
    fail(ErrorKind::InvalidArgument, "D is defined for integer alpha only");
  }
  DSpec s;
  s.kind = kind_of(p);
  s.m = m;
  if (const auto* q = std::get_if<Params1F1>(&p)) s.theta = q->theta;
  if (const auto* q = std::get_if<Params2F1>(&p)) {
    s.beta = q->beta;
    s.mu = q->mu;
  }
  return s;
}

EquationParams f_params(const DSpec& spec) {
  const cplx m(static_cast<double>(spec.m), 0.0);
  switch (spec.kind) {
    case EqKind::F0: return Params0F1{m};
    case EqKind::F1: return Params1F1{spec.theta, m};
    case EqKind::F2: return Params2F1{m, spec.beta, spec.mu};
  }
  fail(ErrorKind::InvalidArgument, "unknown equation kind");
}

void validate(const DSpec& spec) {
  const DParams d = d_params(spec);
  long n = 0;
  if (spec.kind == EqKind::F1 || spec.kind == EqKind::F2) {
    if (near_integer(d.a, kPoleTolerance, n) && n <= d.m) {
      fail(ErrorKind::ParameterSingular,
           "D: first numerator parameter is an integer <= m (digamma or Pochhammer pole)");
    }
  }
  if (spec.kind == EqKind::F2 && near_integer(d.b, kPoleTolerance, n)) {
    fail(ErrorKind::ParameterSingular, "D: second numerator parameter is an integer");
  }
}

double d_normalization_constant(long m) { return 2.0 * kEulerGamma - harmonic(m); }

std::vector<cplx> LaurentExpansion::tail_coeffs(long count) const {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(count));
  auto gen = tail_source();
  for (long k = 0; k < count; ++k) out.push_back(gen());
  return out;
}

LaurentExpansion d_expand(const DSpec& spec) {
  validate(spec);
  const DParams d = d_params(spec);
  LaurentExpansion e;
  e.power_shift = spec.m < 0 ? d.m : 0;
  for (long k = 1; k <= d.m; ++k) {
    cplx c = factorial(k - 1) / factorial(d.m - k);
    if (k % 2 == 0) c = -c;
    if (spec.kind != EqKind::F0) c *= pochhammer(d.a, -k);
    if (spec.kind == EqKind::F2) c *= pochhammer(d.b, -k);
    e.principal.push_back(c);
  }
  const EqKind kind = spec.kind;
  e.tail_source = [kind, d]() { return make_tail(kind, d); };
  return e;
}

JetResult d_eval_jet(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  check_domain(spec, z);
  const LaurentExpansion e = d_expand(spec);
  auto gen = e.tail_source();
  JetResult tail = sum_power_jet(gen, z, e.power_shift, 2, opt);
  return principal_jet(e, z) + tail;
}

EvalResult d_eval(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  check_domain(spec, z);
  const LaurentExpansion e = d_expand(spec);
  auto gen = e.tail_source();
  JetResult tail = sum_power_jet(gen, z, e.power_shift, 0, opt);
  return (principal_jet(e, z) + tail).as_eval();
}

JetResult log_solution_jet(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  const Jet lg = spec.kind == EqKind::F2 ? Jet{log_negated(z), 1.0 / z, -1.0 / (z * z)}
                                         : jet_log(z);
  const JetResult f = f_norm_jet(f_params(spec), z, opt);
  return lg * f + d_eval_jet(spec, z, opt);
}

EvalResult log_solution(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  const cplx lg = spec.kind == EqKind::F2 ? log_negated(z) : principal_log(z);
  return lg * f_norm(f_params(spec), z, opt) + d_eval(spec, z, opt);
}

EvalResult d2_norm_I(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  const Params2F1 p{cplx(static_cast<double>(spec.m), 0.0), spec.beta, spec.mu};
  return f2_prefactor_I(p) * d_eval(spec, z, opt);
}

JetResult d2_norm_I_jet(const DSpec& spec, cplx z, const SeriesOptions& opt) {
  const Params2F1 p{cplx(static_cast<double>(spec.m), 0.0), spec.beta, spec.mu};
  return f2_prefactor_I(p) * d_eval_jet(spec, z, opt);
}

}  // namespace hyperd
