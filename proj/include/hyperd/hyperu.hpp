#ifndef HYPERD_HYPERU_HPP
#define HYPERD_HYPERU_HPP

#include <array>
#include <optional>
#include <string>

#include "hyperd/hyperd.hpp"
#include "hyperd/hyperf.hpp"

namespace hyperd {

// Ways of computing the solutions with simple behaviour at infinity.
//   Connection       Gamma/sin combination of the two power solutions
//   LogPlusD         integer alpha: prefactor * (log F + D)
//   Asymptotic2F0    defining 2F0 expansion at infinity (0F1, 1F1)
//   KummerReflected  (1-z)^{-beta} U_{alpha,-beta,mu} (2F1)
//   InverseSeries    defining 2F1 series in 1/z (2F1)
//   Auto             LogPlusD for integer alpha, Connection otherwise,
//                    InverseSeries for 2F1 outside the unit disc
enum class URoute { Auto, Connection, LogPlusD, Asymptotic2F0, KummerReflected, InverseSeries };

std::string to_string(URoute route);
std::optional<URoute> parse_route(const std::string& name);

// Connection formulas are refused closer than this to an integer alpha.
inline constexpr double kConnectionBand = 1e-6;

EvalResult u0(cplx alpha, cplx z, URoute route = URoute::Auto, const SeriesOptions& opt = {});
EvalResult u1(cplx theta, cplx alpha, cplx z, URoute route = URoute::Auto,
              const SeriesOptions& opt = {});
EvalResult u2(cplx alpha, cplx beta, cplx mu, cplx z, URoute route = URoute::Auto,
              const SeriesOptions& opt = {});

// Jets are available for every route except Asymptotic2F0.
JetResult u0_jet(cplx alpha, cplx z, URoute route = URoute::Auto, const SeriesOptions& opt = {});
JetResult u1_jet(cplx theta, cplx alpha, cplx z, URoute route = URoute::Auto,
                 const SeriesOptions& opt = {});
JetResult u2_jet(cplx alpha, cplx beta, cplx mu, cplx z, URoute route = URoute::Auto,
                 const SeriesOptions& opt = {});

/// U for any equation kind.
EvalResult u_eval(const EquationParams& p, cplx z, URoute route = URoute::Auto,
                  const SeriesOptions& opt = {});
JetResult u_eval_jet(const EquationParams& p, cplx z, URoute route = URoute::Auto,
                     const SeriesOptions& opt = {});

/// The four Kummer-table expressions of U_{alpha,beta,mu}(z):
/// U, (-z)^{-alpha} U_{-alpha,beta,mu}, (1-z)^{-beta} U_{alpha,-beta,mu},
/// (-z)^{-alpha} (1-z)^{-beta} U_{-alpha,-beta,mu}.
std::array<EvalResult, 4> u2_kummer_forms(cplx alpha, cplx beta, cplx mu, cplx z,
                                          const SeriesOptions& opt = {});

/// exp(-+ i pi (-1-alpha-beta+mu)/2) U_{beta,alpha,mu}(1-z), upper sign for
/// Im z > 0. Fails with BranchCut on the real axis.
EvalResult u2_one_minus_z(cplx alpha, cplx beta, cplx mu, cplx z, const SeriesOptions& opt = {});

enum class BesselKind { I, J, K, H1, H2 };

std::string to_string(BesselKind kind);
std::optional<BesselKind> parse_bessel_kind(const std::string& name);

/// Integer-order Bessel-family functions through F_m and D_m at +-z^2/4.
EvalResult bessel(BesselKind kind, long m, cplx z, const SeriesOptions& opt = {});

}  // namespace hyperd

#endif  // HYPERD_HYPERU_HPP
