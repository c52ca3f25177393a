#ifndef HYPERD_HYPERD_HPP
#define HYPERD_HYPERD_HPP

#include <functional>
#include <vector>

#include "hyperd/hyperf.hpp"
#include "hyperd/seriescore.hpp"

namespace hyperd {

// Logarithmic companion D of the degenerate (alpha = m) equation.
struct DSpec {
  EqKind kind = EqKind::F0;
  long m = 0;
  cplx theta{};  // 1F1 only
  cplx beta{};   // 2F1 only
  cplx mu{};     // 2F1 only
};

/// DSpec for degenerate params; fails with InvalidArgument when alpha is not
/// (within the degeneracy band of) an integer.
DSpec dspec_from(const EquationParams& p);

/// Parameters of the hosting F function, alpha = m.
EquationParams f_params(const DSpec& spec);

/// Throws ParameterSingular when a digamma argument or a principal-part
/// Pochhammer factor of D hits a pole.
void validate(const DSpec& spec);

/// The constant 2 gamma - H_m fixing D within D + const * F.
double d_normalization_constant(long m);

struct LaurentExpansion {
  // principal[k-1] is the coefficient of z^{-k}, k = 1..m.
  std::vector<cplx> principal;
  // Each call yields a fresh generator of d_0, d_1, ... .
  std::function<std::function<cplx()>()> tail_source;
  // For negative m the expansion at |m| is multiplied by z^{|m|}.
  long power_shift = 0;

  std::vector<cplx> tail_coeffs(long count) const;
};

LaurentExpansion d_expand(const DSpec& spec);

EvalResult d_eval(const DSpec& spec, cplx z, const SeriesOptions& opt = {});
JetResult d_eval_jet(const DSpec& spec, cplx z, const SeriesOptions& opt = {});

/// log z * F_m + D_m for 0F1 and 1F1, log(-z) * F_m + D_m for 2F1.
EvalResult log_solution(const DSpec& spec, cplx z, const SeriesOptions& opt = {});
JetResult log_solution_jet(const DSpec& spec, cplx z, const SeriesOptions& opt = {});

/// D^I = Gamma((1+m+beta-mu)/2) Gamma((1+m-beta+mu)/2) D for 2F1.
EvalResult d2_norm_I(const DSpec& spec, cplx z, const SeriesOptions& opt = {});
JetResult d2_norm_I_jet(const DSpec& spec, cplx z, const SeriesOptions& opt = {});

}  // namespace hyperd

#endif  // HYPERD_HYPERD_HPP
