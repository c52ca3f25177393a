#ifndef HYPERD_HYPERF_HPP
#define HYPERD_HYPERF_HPP

#include <string>
#include <variant>

#include "hyperd/gammakit.hpp"
#include "hyperd/seriescore.hpp"

namespace hyperd {

enum class EqKind { F0, F1, F2 };

std::string to_string(EqKind kind);

struct Params0F1 {
  cplx alpha;
};

struct Params1F1 {
  cplx theta;
  cplx alpha;
};

struct Params2F1 {
  cplx alpha;
  cplx beta;
  cplx mu;
};

using EquationParams = std::variant<Params0F1, Params1F1, Params2F1>;

// Classical parameters. Unused slots are zero: 0F1 uses only c, 1F1 uses a
// and c.
struct ClassicalParams {
  cplx a{};
  cplx b{};
  cplx c{};
};

enum class FunctionId { FNorm, SecondSolution, DLogCompanion, UInfinity, F2F0Asymptotic, FINorm, DINorm };

std::string to_string(FunctionId id);

EqKind kind_of(const EquationParams& p);
cplx alpha_of(const EquationParams& p);
EquationParams with_alpha(const EquationParams& p, cplx alpha);

ClassicalParams to_classical(const EquationParams& p);
EquationParams from_classical(EqKind kind, const ClassicalParams& c);

// Distance of alpha to the integers below which the degenerate code paths
// are taken.
inline constexpr double kDegeneracyTolerance = 1e-9;

bool is_degenerate(const EquationParams& p);

/// Snaps alpha to the nearest integer when it lies within the degeneracy band.
EquationParams snap_degenerate(const EquationParams& p);

// Upper bound on |z| for direct summation of the 2F1 series.
inline constexpr double kF2SeriesRadius = 0.95;

/// Normalized function: sum (a)_n (b)_n z^n / (Gamma(1+alpha+n) n!), with the
/// numerator Pochhammers present according to the equation kind. For integer
/// alpha = m the sum starts at n = max(0, -m).
EvalResult f_norm(const EquationParams& p, cplx z, const SeriesOptions& opt = {});
JetResult f_norm_jet(const EquationParams& p, cplx z, const SeriesOptions& opt = {});

/// Power-behaved second solution z^{-alpha} F with reflected parameters.
EvalResult f_second(const EquationParams& p, cplx z, const SeriesOptions& opt = {});
JetResult f_second_jet(const EquationParams& p, cplx z, const SeriesOptions& opt = {});

/// Parameters of the reflected function appearing in f_second.
EquationParams reflected(const EquationParams& p);

/// Divergent series sum (a)_n (b)_n z^n / n! summed to its smallest term.
EvalResult f2f0_asymptotic(cplx a, cplx b, cplx z, const SeriesOptions& opt = {});

/// Gamma((1+alpha+beta-mu)/2) Gamma((1+alpha-beta+mu)/2).
cplx f2_prefactor_I(const Params2F1& p);

/// F^I = f2_prefactor_I * F for the 2F1 equation.
EvalResult f2_norm_I(const Params2F1& p, cplx z, const SeriesOptions& opt = {});
JetResult f2_norm_I_jet(const Params2F1& p, cplx z, const SeriesOptions& opt = {});

/// Coefficients of the operator c2 f'' + c1 f' + c0 f whose kernel contains
/// the solutions of the equation with parameters p.
struct OperatorCoeffs {
  cplx c2, c1, c0;
};
OperatorCoeffs operator_coeffs(const EquationParams& p, cplx z);

/// Applies the operator to a jet.
cplx apply_operator(const EquationParams& p, cplx z, const Jet& f);

}  // namespace hyperd

#endif  // HYPERD_HYPERF_HPP
