#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace hyperd::cli {

namespace {

std::optional<double> parse_real(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return cplx(*re, 0.0);
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    const auto v = parse_real(im_part);
    if (!v) return std::nullopt;
    im = *v;
  }
  double re = 0.0;
  if (!re_part.empty()) {
    const auto v = parse_real(re_part);
    if (!v) return std::nullopt;
    re = *v;
  }
  return cplx(re, im);
}

std::optional<std::vector<cplx>> parse_grid(std::string_view text) {
  struct Axis {
    double lo = 0.0, hi = 0.0;
    long n = 0;
  };
  auto parse_axis = [](std::string_view a) -> std::optional<Axis> {
    const auto c1 = a.find(':');
    if (c1 == std::string_view::npos) return std::nullopt;
    const auto c2 = a.find(':', c1 + 1);
    if (c2 == std::string_view::npos) return std::nullopt;
    const auto lo = parse_real(a.substr(0, c1));
    const auto hi = parse_real(a.substr(c1 + 1, c2 - c1 - 1));
    const auto n = parse_real(a.substr(c2 + 1));
    if (!lo || !hi || !n || *n < 1 || *n != std::floor(*n) || *n > 1e6) return std::nullopt;
    return Axis{*lo, *hi, static_cast<long>(*n)};
  };
  const auto comma = text.find(',');
  const auto re = parse_axis(text.substr(0, comma));
  if (!re) return std::nullopt;
  Axis im{0.0, 0.0, 1};
  if (comma != std::string_view::npos) {
    const auto a = parse_axis(text.substr(comma + 1));
    if (!a) return std::nullopt;
    im = *a;
  }
  auto node = [](const Axis& a, long i) {
    if (a.n == 1) return a.lo;
    return a.lo + (a.hi - a.lo) * static_cast<double>(i) / static_cast<double>(a.n - 1);
  };
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(re->n * im.n));
  for (long i = 0; i < re->n; ++i) {
    for (long j = 0; j < im.n; ++j) out.emplace_back(node(*re, i), node(im, j));
  }
  return out;
}

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace hyperd::cli
