#include "hyperd/gammakit.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (P. Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

// B_{2k} / (2k), k = 1..8
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,      -1.0 / 120.0,        1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,     -691.0 / 32760.0,    1.0 / 12.0,  -3617.0 / 8160.0};

// Valid for Re z >= 1/2.
cplx lanczos_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

std::string describe(cplx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::ParameterSingular: return "ParameterSingular";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::RouteInapplicable: return "RouteInapplicable";
    case ErrorKind::DivergedImmediately: return "DivergedImmediately";
    case ErrorKind::UnknownRelation: return "UnknownRelation";
    case ErrorKind::Inapplicable: return "Inapplicable";
    case ErrorKind::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorKind::RoutesDisagree: return "RoutesDisagree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool near_integer(cplx z, double tol, long& n) noexcept {
  const double r = std::round(z.real());
  if (std::abs(z - cplx(r, 0.0)) <= tol) {
    n = static_cast<long>(r);
    return true;
  }
  return false;
}

bool is_gamma_pole(cplx z) noexcept {
  long n = 0;
  return near_integer(z, kPoleTolerance, n) && n <= 0;
}

cplx sin_pi(cplx z) {
  const double n = std::round(z.real());
  const double sign = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
  return sign * std::sin(cplx(kPi * (z.real() - n), kPi * z.imag()));
}

cplx cos_pi(cplx z) {
  const double n = std::round(z.real());
  const double sign = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
  return sign * std::cos(cplx(kPi * (z.real() - n), kPi * z.imag()));
}

cplx gamma(cplx z) {
  if (is_gamma_pole(z)) fail(ErrorKind::Pole, "gamma: pole at " + describe(z));
  if (z.real() < 0.5) return kPi / (sin_pi(z) * lanczos_gamma(1.0 - z));
  return lanczos_gamma(z);
}

cplx recip_gamma(cplx z) {
  if (is_gamma_pole(z)) return 0.0;
  if (z.real() < 0.5) return sin_pi(z) * lanczos_gamma(1.0 - z) / kPi;
  return 1.0 / lanczos_gamma(z);
}

cplx recip_gamma_derivative(cplx z) {
  long n = 0;
  if (near_integer(z, kPoleTolerance, n) && n <= 0) {
    const double f = factorial(-n);
    return (n % 2 == 0) ? f : -f;
  }
  return -digamma(z) * recip_gamma(z);
}

GammaValue gamma_value(cplx z) {
  if (is_gamma_pole(z)) return {cplx(0.0), true};
  return {gamma(z), false};
}

cplx digamma(cplx z) {
  if (is_gamma_pole(z)) fail(ErrorKind::Pole, "digamma: pole at " + describe(z));
  if (z.real() < 0.5 && std::abs(z.imag()) < 10.0) {
    return digamma(1.0 - z) - kPi * cos_pi(z) / sin_pi(z);
  }
  cplx shift = 0.0;
  while (std::abs(z) < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cplx inv2 = 1.0 / (z * z);
  cplx series = 0.0;
  cplx pw = inv2;
  for (double c : kDigammaAsym) {
    series += c * pw;
    pw *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

cplx harmonic(long k, cplx z) {
  cplx sum = 0.0;
  for (long j = 0; j < k; ++j) {
    const cplx d = z + static_cast<double>(j);
    if (std::abs(d) <= kPoleTolerance) {
      fail(ErrorKind::Pole, "harmonic: vanishing denominator at " + describe(z));
    }
    sum += 1.0 / d;
  }
  return sum;
}

double harmonic(long k) {
  double sum = 0.0;
  for (long j = 1; j <= k; ++j) sum += 1.0 / static_cast<double>(j);
  return sum;
}

cplx pochhammer(cplx z, long k) {
  cplx prod = 1.0;
  if (k >= 0) {
    for (long j = 0; j < k; ++j) prod *= z + static_cast<double>(j);
    return prod;
  }
  for (long j = k; j < 0; ++j) {
    const cplx d = z + static_cast<double>(j);
    if (std::abs(d) <= kPoleTolerance) {
      fail(ErrorKind::Pole, "pochhammer: vanishing factor at " + describe(z));
    }
    prod *= d;
  }
  return 1.0 / prod;
}

double factorial(long n) {
  double f = 1.0;
  for (long j = 2; j <= n; ++j) f *= static_cast<double>(j);
  return f;
}

}  // namespace hyperd
