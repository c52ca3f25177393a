#ifndef HYPERD_TESTS_TEST_UTIL_HPP
#define HYPERD_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <complex>

namespace testutil {

inline double absdiff(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

// |a - b| / max(1, |a|, |b|)
inline double scaled(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double relative(std::complex<double> a, std::complex<double> b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace testutil

#endif  // HYPERD_TESTS_TEST_UTIL_HPP
