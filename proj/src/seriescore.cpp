#include "hyperd/seriescore.hpp"

#include <cstdlib>
#include <string>

namespace hyperd {

namespace {

bool is_exact_integer(cplx a, long& n) {
  if (a.imag() != 0.0) return false;
  const double r = a.real();
  if (std::abs(r) > 1e9 || r != std::floor(r)) return false;
  n = static_cast<long>(r);
  return true;
}

}  // namespace

std::string flags_to_string(unsigned flags) {
  std::string out;
  auto add = [&](Flag f, const char* name) {
    if ((flags & static_cast<unsigned>(f)) == 0) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(Flag::TruncationMaxed, "TruncationMaxed");
  add(Flag::NearPole, "NearPole");
  add(Flag::OnBranchCut, "OnBranchCut");
  return out;
}

int default_max_terms() {
  static const int value = [] {
    if (const char* env = std::getenv("HYPERD_MAX_TERMS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < 100000000) return static_cast<int>(v);
    }
    return 10000;
  }();
  return value;
}

cplx ipow(cplx z, long n) {
  if (n < 0) {
    if (z == cplx(0.0)) fail(ErrorKind::Domain, "negative integer power of zero");
    return 1.0 / ipow(z, -n);
  }
  cplx result = 1.0;
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

cplx principal_log(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    fail(ErrorKind::BranchCut, "log: argument on the cut (-inf, 0]");
  }
  return std::log(z);
}

cplx log_negated(cplx z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    fail(ErrorKind::BranchCut, "log(-z): argument on the cut [0, inf)");
  }
  return std::log(-z);
}

cplx principal_pow(cplx z, cplx a) {
  if (a == cplx(0.0)) return 1.0;
  long n = 0;
  if (is_exact_integer(a, n)) return ipow(z, n);
  return std::exp(a * principal_log(z));
}

Jet jet_pow(cplx z, cplx a) {
  long n = 0;
  if (is_exact_integer(a, n)) {
    const double dn = static_cast<double>(n);
    const cplx p1 = n == 0 ? cplx(0.0) : dn * ipow(z, n - 1);
    const cplx p2 = (n == 0 || n == 1) ? cplx(0.0) : dn * (dn - 1.0) * ipow(z, n - 2);
    return {ipow(z, n), p1, p2};
  }
  const cplx v = principal_pow(z, a);
  return {v, a * v / z, a * (a - 1.0) * v / (z * z)};
}

Jet jet_log(cplx z) { return {principal_log(z), 1.0 / z, -1.0 / (z * z)}; }

EvalResult sum_power_series(const std::function<cplx(long)>& coeff, cplx z, double rel_tol,
                            int max_terms) {
  if (!(rel_tol > 0.0) || max_terms < 1) {
    fail(ErrorKind::InvalidArgument, "sum_power_series: need rel_tol > 0 and max_terms >= 1");
  }
  long n = 0;
  SeriesOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_terms = max_terms;
  return sum_power_jet([&] { return coeff(n++); }, z, 0, 0, opt).as_eval();
}

}  // namespace hyperd
