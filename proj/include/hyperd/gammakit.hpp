#ifndef HYPERD_GAMMAKIT_HPP
#define HYPERD_GAMMAKIT_HPP

#include <complex>

namespace hyperd {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Absolute distance to the nearest non-positive integer below which an
// argument of Gamma is treated as sitting on a pole.
inline constexpr double kPoleTolerance = 1e-9;

struct GammaValue {
  cplx value;
  bool is_pole = false;
};

// True when z is within kPoleTolerance of {0, -1, -2, ...}.
bool is_gamma_pole(cplx z) noexcept;

// Nearest integer to Re z when z is within `tol` of an integer, otherwise
// false. Used for degeneracy detection throughout the library.
bool near_integer(cplx z, double tol, long& n) noexcept;

// sin(pi z) and cos(pi z) with the real part reduced modulo 2 first, so that
// zeros at integers come out exact.
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

/// Gamma function. Lanczos approximation (g = 607/128) on Re z >= 1/2 and
/// reflection below. Throws ErrorKind::Pole at non-positive integers.
cplx gamma(cplx z);

/// 1/Gamma(z), entire. Exactly zero at the poles of Gamma.
cplx recip_gamma(cplx z);

/// d/dz 1/Gamma(z) = -psi(z)/Gamma(z). At z = -n this is (-1)^n n!.
cplx recip_gamma_derivative(cplx z);

/// Gamma together with the pole flag; never throws.
GammaValue gamma_value(cplx z);

/// Digamma psi(z) = Gamma'(z)/Gamma(z). Asymptotic expansion for |z| >= 10,
/// upward recurrence below, reflection for Re z < 1/2.
cplx digamma(cplx z);

/// Shifted harmonic number H_k(z) = sum_{j<k} 1/(z+j).
cplx harmonic(long k, cplx z);

/// Ordinary harmonic number H_k = H_k(1).
double harmonic(long k);

/// Pochhammer symbol (z)_k for integer k of either sign.
cplx pochhammer(cplx z, long k);

/// n! as a double (exact up to 22!).
double factorial(long n);

}  // namespace hyperd

#endif  // HYPERD_GAMMAKIT_HPP
