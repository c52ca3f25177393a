#ifndef HYPERD_ORACLE_HPP
#define HYPERD_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "hyperd/hyperd.hpp"
#include "hyperd/hyperf.hpp"

namespace hyperd {

enum class ResidualMethod { SeriesDeriv, FiniteDiff, Richardson };

std::string to_string(ResidualMethod m);

struct ResidualReport {
  double residual = 0.0;
  // residual / max(1, |c2 f''|, |c1 f'|, |c0 f|)
  double scaled = 0.0;
  ResidualMethod method = ResidualMethod::SeriesDeriv;
  double step = 0.0;          // FD step, 0 for series derivatives
  std::vector<double> steps;  // Richardson ladder
};

// A solution candidate. When `jet` is set its derivatives are used,
// otherwise `value` is differentiated numerically.
struct Evaluable {
  std::function<Jet(cplx)> jet;
  std::function<cplx(cplx)> value;
};

Evaluable evaluable_jet(std::function<JetResult(cplx)> f);
Evaluable evaluable_value(std::function<EvalResult(cplx)> f);

/// |(c2 d^2 + c1 d + c0) f|(z) for the operator of the equation with params p.
ResidualReport ode_residual(const Evaluable& f, const EquationParams& p, cplx z);

/// Jet of f from the 5-point stencil with h = 1e-4 max(1, |z|).
Jet fd_jet(const std::function<cplx(cplx)>& f, cplx z);
double fd_step(cplx z);

/// |operator(D) - rhs| where rhs is the inhomogeneity produced by the log
/// term: -(m/z) F - 2F', (1 - m/z) F - 2F', (A + B - m/z) F + 2(z - 1) F'.
/// Requires m >= 0.
ResidualReport inhom_residual(const DSpec& spec, cplx z, const SeriesOptions& opt = {});

/// Extra parameters of limit_alpha besides alpha.
struct LimitParams {
  cplx theta{};
  cplx beta{};
  cplx mu{};
};

inline constexpr double kLimitSteps[4] = {1e-2, 5e-3, 2.5e-3, 1.25e-3};

/// Generic-alpha connection formula for U evaluated at alpha with the bracket
/// formed before division by sin(pi alpha).
cplx connection_value(EqKind kind, cplx alpha, const LimitParams& rest, cplx z,
                      const SeriesOptions& opt = {});

/// U at integer alpha = m as the Richardson limit of connection_value along
/// alpha = m + h, h in kLimitSteps.
EvalResult limit_alpha(EqKind kind, long m, const LimitParams& rest, cplx z,
                       const SeriesOptions& opt = {});

/// d/dalpha of F with the other Lie-algebraic parameters held fixed.
cplx alpha_derivative_series(const EquationParams& p, cplx z, const SeriesOptions& opt = {});
cplx alpha_derivative_fd(const EquationParams& p, cplx z, double h);

inline constexpr double kAlphaFdStep = 1e-5;
inline constexpr double kRoutesAgreement = 1e-6;

/// Series route, checked against the central difference. Fails with
/// RoutesDisagree when they differ by more than 1e-6 (scaled by max(1, |value|)).
EvalResult alpha_derivative(const EquationParams& p, cplx z, const SeriesOptions& opt = {});

}  // namespace hyperd

#endif  // HYPERD_ORACLE_HPP
