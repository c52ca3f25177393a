#ifndef HYPERD_SERIESCORE_HPP
#define HYPERD_SERIESCORE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>

#include "hyperd/error.hpp"
#include "hyperd/gammakit.hpp"

namespace hyperd {

enum class Flag : unsigned {
  TruncationMaxed = 1u << 0,
  NearPole = 1u << 1,
  OnBranchCut = 1u << 2,
};

inline constexpr unsigned operator|(Flag a, Flag b) {
  return static_cast<unsigned>(a) | static_cast<unsigned>(b);
}

std::string flags_to_string(unsigned flags);

struct EvalResult {
  cplx value{};
  double err_estimate = 0.0;  // absolute
  int terms_used = 1;
  unsigned flags = 0;

  bool has(Flag f) const { return (flags & static_cast<unsigned>(f)) != 0; }
};

// Value of a function together with its first two z-derivatives.
struct Jet {
  cplx v{};
  cplx d1{};
  cplx d2{};

  cplx operator[](int order) const { return order == 0 ? v : (order == 1 ? d1 : d2); }
};

inline Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator*(cplx s, const Jet& a) { return {s * a.v, s * a.d1, s * a.d2}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

inline Jet jet_constant(cplx c) { return {c, 0.0, 0.0}; }
inline Jet jet_identity(cplx z) { return {z, 1.0, 0.0}; }

struct JetResult {
  Jet value;
  std::array<double, 3> err{};  // absolute error estimate per derivative order
  int terms_used = 1;
  unsigned flags = 0;

  EvalResult as_eval() const { return {value.v, err[0], terms_used, flags}; }
};

inline JetResult exact_jet(const Jet& j) { return {j, {0.0, 0.0, 0.0}, 1, 0}; }

// Product g * f where g is known to working precision and f carries an
// error estimate; errors propagate through the Leibniz rule.
inline JetResult operator*(const Jet& g, const JetResult& f) {
  JetResult out;
  out.value = g * f.value;
  const double g0 = std::abs(g.v), g1 = std::abs(g.d1), g2 = std::abs(g.d2);
  out.err = {g0 * f.err[0], g1 * f.err[0] + g0 * f.err[1],
             g2 * f.err[0] + 2.0 * g1 * f.err[1] + g0 * f.err[2]};
  out.terms_used = f.terms_used;
  out.flags = f.flags;
  return out;
}

inline JetResult operator*(cplx s, const JetResult& f) { return jet_constant(s) * f; }

inline JetResult operator+(const JetResult& a, const JetResult& b) {
  JetResult out;
  out.value = a.value + b.value;
  for (int k = 0; k < 3; ++k) out.err[k] = a.err[k] + b.err[k];
  out.terms_used = a.terms_used + b.terms_used;
  out.flags = a.flags | b.flags;
  return out;
}

inline JetResult operator-(const JetResult& a, const JetResult& b) { return a + (-1.0) * b; }

// Product of two uncertain jets, first order in the errors.
inline JetResult product(const JetResult& a, const JetResult& b) {
  JetResult out = a.value * b;
  const JetResult other = b.value * JetResult{jet_constant(0.0), a.err, 0, a.flags};
  for (int k = 0; k < 3; ++k) out.err[k] += other.err[k];
  out.terms_used = a.terms_used + b.terms_used;
  out.flags |= a.flags;
  return out;
}

inline EvalResult operator*(cplx s, const EvalResult& r) {
  return {s * r.value, std::abs(s) * r.err_estimate, r.terms_used, r.flags};
}

inline EvalResult operator+(const EvalResult& a, const EvalResult& b) {
  return {a.value + b.value, a.err_estimate + b.err_estimate, a.terms_used + b.terms_used,
          a.flags | b.flags};
}

inline EvalResult operator-(const EvalResult& a, const EvalResult& b) { return a + (-1.0) * b; }

/// Default term budget; HYPERD_MAX_TERMS overrides the built-in 10 000.
int default_max_terms();

struct SeriesOptions {
  double rel_tol = 1e-14;
  int max_terms = default_max_terms();
  bool throw_on_truncation = true;
};

/// z^n by repeated multiplication; no branch cut.
cplx ipow(cplx z, long n);

/// Principal logarithm on C \ (-inf, 0]. Points exactly on the cut are
/// rejected with ErrorKind::BranchCut.
cplx principal_log(cplx z);

/// log(-z) on C \ [0, inf), the principal logarithm of -z.
cplx log_negated(cplx z);

/// z^a = exp(a log z) on the principal branch; a == 0 and integer a are
/// evaluated without a cut.
cplx principal_pow(cplx z, cplx a);

/// d^k/dz^k of z^a for k = 0, 1, 2.
Jet jet_pow(cplx z, cplx a);

/// log z with derivatives.
Jet jet_log(cplx z);

/// Sums sum_{n >= start} c_n z^n, where successive calls of `next` return
/// c_start, c_start+1, ... . Derivatives up to `order` are summed alongside
/// by term-wise differentiation. Stops once the last three consecutive terms
/// of every tracked component are below rel_tol times the partial sum.
template <class NextCoeff>
JetResult sum_power_jet(NextCoeff&& next, cplx z, long start, int order,
                        const SeriesOptions& opt = {}) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  JetResult out;
  cplx p0 = ipow(z, start);
  cplx p1 = start >= 1 ? ipow(z, start - 1) : cplx(0.0);
  cplx p2 = start >= 2 ? ipow(z, start - 2) : cplx(0.0);
  std::array<cplx, 3> sum{};
  std::array<double, 3> abs_sum{};
  std::array<double, 3> last_mag{};
  int consecutive = 0;
  long n = start;
  int used = 0;
  auto terms_at = [&](cplx c, long k, cplx q0, cplx q1, cplx q2) {
    const double dk = static_cast<double>(k);
    return std::array<cplx, 3>{c * q0, dk * c * q1, dk * (dk - 1.0) * c * q2};
  };
  bool converged = false;
  while (used < opt.max_terms) {
    const cplx c = next();
    const auto t = terms_at(c, n, p0, p1, p2);
    bool small = true;
    for (int k = 0; k <= order; ++k) {
      sum[k] += t[k];
      abs_sum[k] += std::abs(t[k]);
      last_mag[k] = std::abs(t[k]);
      if (std::abs(t[k]) > opt.rel_tol * std::abs(sum[k])) small = false;
    }
    ++used;
    p2 = p1;
    p1 = p0;
    p0 *= z;
    ++n;
    consecutive = small ? consecutive + 1 : 0;
    if (consecutive >= 3) {
      converged = true;
      break;
    }
  }
  out.terms_used = used;
  out.value = {sum[0], sum[1], sum[2]};
  if (converged) {
    const auto t = terms_at(next(), n, p0, p1, p2);
    for (int k = 0; k <= order; ++k) {
      const double omitted = std::abs(t[k]);
      double factor = 1.0;
      if (last_mag[k] > 0.0 && omitted < last_mag[k]) {
        factor = std::min(1.0 / (1.0 - omitted / last_mag[k]), 1e3);
      }
      out.err[k] = omitted * factor + 2.0 * eps * abs_sum[k];
    }
    return out;
  }
  out.flags |= static_cast<unsigned>(Flag::TruncationMaxed);
  for (int k = 0; k <= order; ++k) out.err[k] = last_mag[k] + 2.0 * eps * abs_sum[k];
  if (opt.throw_on_truncation) {
    fail(ErrorKind::NoConvergence,
         "series did not converge within " + std::to_string(opt.max_terms) + " terms");
  }
  return out;
}

/// Power series sum_{n >= 0} coeff(n) z^n with truncation error control.
/// err_estimate is the first omitted term (scaled by the observed geometric
/// tail ratio) plus a rounding bound.
EvalResult sum_power_series(const std::function<cplx(long)>& coeff, cplx z,
                            double rel_tol = 1e-14, int max_terms = default_max_terms());

}  // namespace hyperd

#endif  // HYPERD_SERIESCORE_HPP
