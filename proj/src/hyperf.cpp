#include "hyperd/hyperf.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

struct Numerators {
  std::array<cplx, 2> a{};
  int count = 0;
};

Numerators numerators(const EquationParams& p) {
  Numerators out;
  if (const auto* q = std::get_if<Params1F1>(&p)) {
    out.a[0] = (1.0 + q->alpha + q->theta) / 2.0;
    out.count = 1;
  } else if (const auto* q = std::get_if<Params2F1>(&p)) {
    out.a[0] = (1.0 + q->alpha + q->beta - q->mu) / 2.0;
    out.a[1] = (1.0 + q->alpha + q->beta + q->mu) / 2.0;
    out.count = 2;
  }
  return out;
}

void check_f2_domain(const EquationParams& p, cplx z) {
  if (kind_of(p) == EqKind::F2 && std::abs(z) > kF2SeriesRadius) {
    fail(ErrorKind::Domain, "2F1 series needs |z| <= 0.95");
  }
}

}  // namespace

std::string to_string(EqKind kind) {
  switch (kind) {
    case EqKind::F0: return "0f1";
    case EqKind::F1: return "1f1";
    case EqKind::F2: return "2f1";
  }
  return "?";
}

std::string to_string(FunctionId id) {
  switch (id) {
    case FunctionId::FNorm: return "F";
    case FunctionId::SecondSolution: return "second";
    case FunctionId::DLogCompanion: return "D";
    case FunctionId::UInfinity: return "U";
    case FunctionId::F2F0Asymptotic: return "2F0";
    case FunctionId::FINorm: return "FI";
    case FunctionId::DINorm: return "DI";
  }
  return "?";
}

EqKind kind_of(const EquationParams& p) {
  switch (p.index()) {
    case 0: return EqKind::F0;
    case 1: return EqKind::F1;
    default: return EqKind::F2;
  }
}

cplx alpha_of(const EquationParams& p) {
  return std::visit([](const auto& q) { return q.alpha; }, p);
}

EquationParams with_alpha(const EquationParams& p, cplx alpha) {
  return std::visit(
      [alpha](auto q) -> EquationParams {
        q.alpha = alpha;
        return q;
      },
      p);
}

ClassicalParams to_classical(const EquationParams& p) {
  ClassicalParams c;
  const Numerators n = numerators(p);
  c.c = 1.0 + alpha_of(p);
  if (n.count >= 1) c.a = n.a[0];
  if (n.count >= 2) c.b = n.a[1];
  return c;
}

EquationParams from_classical(EqKind kind, const ClassicalParams& c) {
  const cplx alpha = c.c - 1.0;
  switch (kind) {
    case EqKind::F0: return Params0F1{alpha};
    case EqKind::F1: return Params1F1{2.0 * c.a - c.c, alpha};
    case EqKind::F2: return Params2F1{alpha, c.a + c.b - c.c, c.b - c.a};
  }
  fail(ErrorKind::InvalidArgument, "unknown equation kind");
}

bool is_degenerate(const EquationParams& p) {
  long n = 0;
  return near_integer(alpha_of(p), kDegeneracyTolerance, n);
}

EquationParams snap_degenerate(const EquationParams& p) {
  long n = 0;
  if (!near_integer(alpha_of(p), kDegeneracyTolerance, n)) return p;
  return with_alpha(p, cplx(static_cast<double>(n), 0.0));
}

EquationParams reflected(const EquationParams& p) {
  if (const auto* q = std::get_if<Params0F1>(&p)) return Params0F1{-q->alpha};
  if (const auto* q = std::get_if<Params1F1>(&p)) return Params1F1{q->theta, -q->alpha};
  const auto& q = std::get<Params2F1>(p);
  return Params2F1{-q.alpha, q.beta, -q.mu};
}

namespace {

// Coefficient stream of the normalized series, starting at n = max(0, -m)
// in the degenerate case.
class FCoeffStream {
 public:
  explicit FCoeffStream(const EquationParams& p) : num_(numerators(p)) {
    const cplx alpha = alpha_of(p);
    long m = 0;
    if (near_integer(alpha, 0.0, m)) {
      start_ = m < 0 ? -m : 0;
      c_ = 1.0 / (factorial(start_) * factorial(m + start_));
      for (int i = 0; i < num_.count; ++i) c_ *= pochhammer(num_.a[i], start_);
      shift_ = static_cast<double>(m + 1);
    } else {
      c_ = recip_gamma(1.0 + alpha);
      shift_ = 1.0 + alpha;
    }
    n_ = start_;
  }

  long start() const { return start_; }

  cplx operator()() {
    const cplx out = c_;
    const double dn = static_cast<double>(n_);
    cplx ratio = 1.0 / ((dn + 1.0) * (shift_ + dn));
    for (int i = 0; i < num_.count; ++i) ratio *= num_.a[i] + dn;
    c_ *= ratio;
    ++n_;
    return out;
  }

 private:
  Numerators num_;
  long start_ = 0;
  long n_ = 0;
  cplx c_{};
  cplx shift_{};
};

}  // namespace

JetResult f_norm_jet(const EquationParams& p_in, cplx z, const SeriesOptions& opt) {
  const EquationParams p = snap_degenerate(p_in);
  check_f2_domain(p, z);
  FCoeffStream stream(p);
  return sum_power_jet(stream, z, stream.start(), 2, opt);
}

EvalResult f_norm(const EquationParams& p_in, cplx z, const SeriesOptions& opt) {
  const EquationParams p = snap_degenerate(p_in);
  check_f2_domain(p, z);
  FCoeffStream stream(p);
  return sum_power_jet(stream, z, stream.start(), 0, opt).as_eval();
}

JetResult f_second_jet(const EquationParams& p_in, cplx z, const SeriesOptions& opt) {
  const EquationParams p = snap_degenerate(p_in);
  return jet_pow(z, -alpha_of(p)) * f_norm_jet(reflected(p), z, opt);
}

EvalResult f_second(const EquationParams& p_in, cplx z, const SeriesOptions& opt) {
  const EquationParams p = snap_degenerate(p_in);
  return principal_pow(z, -alpha_of(p)) * f_norm(reflected(p), z, opt);
}

EvalResult f2f0_asymptotic(cplx a, cplx b, cplx z, const SeriesOptions& opt) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Past n_lock the term ratio |(a+n)(b+n)z/(n+1)| is increasing, so the
  // first growing term there marks the end of the useful part. Before it the
  // terms may grow and shrink again.
  const double n_lock = std::ceil(std::abs(a) + std::abs(b)) + 1.0;
  EvalResult out;
  cplx term = 1.0;
  cplx sum = 0.0;
  double abs_sum = 0.0;
  double best = std::numeric_limits<double>::infinity();
  cplx best_sum = 0.0;
  double best_abs_sum = 0.0;
  long best_n = 0;
  for (long n = 0; n < opt.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const double mag = std::abs(term);
    if (term == cplx(0.0)) {
      // Terminated; the leading 1 carries no rounding.
      out.value = sum;
      out.err_estimate = 2.0 * eps * std::max(0.0, abs_sum - 1.0);
      out.terms_used = static_cast<int>(std::max<long>(n, 1));
      return out;
    }
    if (mag < best) {
      best = mag;
      best_sum = sum;
      best_abs_sum = abs_sum;
      best_n = n;
    }
    if (dn >= n_lock && mag <= opt.rel_tol * std::abs(sum)) {
      out.value = sum;
      out.err_estimate = mag + 2.0 * eps * abs_sum;
      out.terms_used = static_cast<int>(n);
      return out;
    }
    const cplx next = term * (a + dn) * (b + dn) * z / (dn + 1.0);
    if (dn >= n_lock && std::abs(next) >= mag) {
      if (best_n == 0 && std::abs(z) >= 1.0) {
        fail(ErrorKind::DivergedImmediately, "2F0: terms grow from the first one");
      }
      // Stop in front of the smallest term.
      out.value = best_sum;
      out.err_estimate = best + 2.0 * eps * best_abs_sum;
      out.terms_used = static_cast<int>(std::max<long>(best_n, 1));
      return out;
    }
    sum += term;
    abs_sum += mag;
    term = next;
  }
  out.value = sum;
  out.err_estimate = std::abs(term) + 2.0 * eps * abs_sum;
  out.terms_used = opt.max_terms;
  out.flags |= static_cast<unsigned>(Flag::TruncationMaxed);
  if (opt.throw_on_truncation) {
    fail(ErrorKind::NoConvergence, "2F0: smallest term not reached within max_terms");
  }
  return out;
}

cplx f2_prefactor_I(const Params2F1& p) {
  const cplx g1 = (1.0 + p.alpha + p.beta - p.mu) / 2.0;
  const cplx g2 = (1.0 + p.alpha - p.beta + p.mu) / 2.0;
  if (is_gamma_pole(g1) || is_gamma_pole(g2)) {
    fail(ErrorKind::ParameterSingular, "F^I prefactor: Gamma at a pole");
  }
  return gamma(g1) * gamma(g2);
}

EvalResult f2_norm_I(const Params2F1& p, cplx z, const SeriesOptions& opt) {
  return f2_prefactor_I(p) * f_norm(p, z, opt);
}

JetResult f2_norm_I_jet(const Params2F1& p, cplx z, const SeriesOptions& opt) {
  return f2_prefactor_I(p) * f_norm_jet(p, z, opt);
}

OperatorCoeffs operator_coeffs(const EquationParams& p, cplx z) {
  if (const auto* q = std::get_if<Params0F1>(&p)) return {z, q->alpha + 1.0, -1.0};
  if (const auto* q = std::get_if<Params1F1>(&p)) {
    return {z, 1.0 + q->alpha - z, -(1.0 + q->theta + q->alpha) / 2.0};
  }
  const auto& q = std::get<Params2F1>(p);
  const cplx s = q.alpha + q.beta + 1.0;
  return {z * (1.0 - z), (1.0 + q.alpha) * (1.0 - z) - (1.0 + q.beta) * z,
          (q.mu * q.mu - s * s) / 4.0};
}

cplx apply_operator(const EquationParams& p, cplx z, const Jet& f) {
  const OperatorCoeffs c = operator_coeffs(p, z);
  return c.c2 * f.d2 + c.c1 * f.d1 + c.c0 * f.v;
}

}  // namespace hyperd
