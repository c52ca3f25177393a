#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "hyperd/error.hpp"
#include "hyperd/oracle.hpp"

namespace hyperd::suites {

namespace {

double scaled(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double relative(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

class Check {
 public:
  Check(std::string id, std::string suite, double tolerance) {
    rec_.id = std::move(id);
    rec_.suite = std::move(suite);
    rec_.tolerance = tolerance;
  }

  void point(const std::function<double()>& f) {
    try {
      double r = f();
      if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
      rec_.max_residual = std::max(rec_.max_residual, r);
      ++rec_.points;
    } catch (const Error& e) {
      if (rec_.error.empty()) rec_.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }

  CheckRecord done() const { return rec_; }

 private:
  CheckRecord rec_;
};

std::string fmt_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

const std::vector<cplx> kOffcut = {
    {0.3, 0.0},   {0.7, 0.0},  {1.5, 0.0},  {2.5, 0.0},   {0.5, 0.5},
    {-0.8, 0.6},  {1.2, -0.9}, {-1.5, 0.2}, {0.1, 1.1},   {3.0, 1.0},
};

const std::vector<cplx> kOffcut2F1 = {
    {-0.4, 0.0},  {-0.25, 0.0}, {-0.7, 0.0},  {-0.1, 0.3},  {0.3, 0.4},
    {0.5, -0.5},  {-0.6, -0.3}, {0.2, 0.2},   {0.6, 0.1},   {-0.85, 0.2},
};

const std::vector<cplx> kOuter2F1 = {
    {1.6, 0.5}, {-2.0, 0.0}, {-1.3, 1.1}, {0.2, 3.0}, {2.5, -1.5},
};

// Extra parameters at which the degenerate statements are exercised.
struct ParamCase {
  std::string tag;
  LimitParams rest;
};

std::vector<ParamCase> param_cases(EqKind kind) {
  switch (kind) {
    case EqKind::F0: return {{"", {}}};
    case EqKind::F1: {
      std::vector<ParamCase> out;
      for (double t : {0.3, 0.7, 1.9}) out.push_back({".theta=" + fmt_param(t), {t, 0.0, 0.0}});
      return out;
    }
    case EqKind::F2: {
      std::vector<ParamCase> out;
      for (auto [b, u] : {std::pair{0.3, 0.2}, std::pair{0.45, 0.1}}) {
        out.push_back({".beta=" + fmt_param(b) + ".mu=" + fmt_param(u), {0.0, b, u}});
      }
      return out;
    }
  }
  return {};
}

EquationParams make_params(EqKind kind, cplx alpha, const LimitParams& r) {
  switch (kind) {
    case EqKind::F0: return Params0F1{alpha};
    case EqKind::F1: return Params1F1{r.theta, alpha};
    case EqKind::F2: return Params2F1{alpha, r.beta, r.mu};
  }
  fail(ErrorKind::InvalidArgument, "unknown equation kind");
}

std::vector<EquationParams> generic_params(EqKind kind) {
  switch (kind) {
    case EqKind::F0:
      return {Params0F1{0.3}, Params0F1{-1.7}, Params0F1{cplx(2.5, 0.5)}, Params0F1{0.5}};
    case EqKind::F1:
      return {Params1F1{0.4, 0.3}, Params1F1{-1.3, -0.6}, Params1F1{1.9, cplx(1.5, 0.3)}};
    case EqKind::F2:
      return {Params2F1{0.3, 0.3, 0.2}, Params2F1{-0.6, 0.45, 0.1},
              Params2F1{1.4, 0.2, -0.35}};
  }
  return {};
}

std::vector<EquationParams> integer_params(EqKind kind) {
  std::vector<EquationParams> out;
  for (const ParamCase& c : param_cases(kind)) {
    for (long m = 0; m <= 4; ++m) {
      out.push_back(make_params(kind, cplx(static_cast<double>(m), 0.0), c.rest));
    }
  }
  return out;
}

const std::vector<cplx>& points_for(EqKind kind) {
  return kind == EqKind::F2 ? kOffcut2F1 : kOffcut;
}

const EqKind kKinds[] = {EqKind::F0, EqKind::F1, EqKind::F2};

// ---------------------------------------------------------------------------

void relations_suite(const std::vector<RelationRecord>& records, std::vector<CheckRecord>& out) {
  for (const RelationRecord& rec : records) {
    const SweepResult s = sweep_relation(rec);
    CheckRecord r;
    r.id = rec.id;
    r.suite = "relations";
    r.points = s.points;
    r.max_residual = s.max_scaled;
    r.tolerance = kRelationTolerance;
    r.error = s.error;
    out.push_back(r);
  }
}

// Integer-alpha U against its closed form prefactor * (log F + D), and
// against the alpha -> m limit of the connection formula.
void theorems_suite(std::vector<CheckRecord>& out) {
  for (EqKind kind : kKinds) {
    for (const ParamCase& c : param_cases(kind)) {
      const std::string base = "theorem." + to_string(kind) + c.tag;
      Check direct(base + ".logplusd", "theorems", 1e-9);
      Check limit(base + ".limit", "theorems", 1e-6);
      for (long m = 0; m <= 4; ++m) {
        const double dm = static_cast<double>(m);
        const double sign = m % 2 == 0 ? -1.0 : 1.0;
        const EquationParams p = make_params(kind, cplx(dm, 0.0), c.rest);
        const DSpec spec = dspec_from(p);
        for (cplx z : points_for(kind)) {
          direct.point([&] {
            const cplx u = u_eval(p, z).value;
            cplx pre, lg;
            switch (kind) {
              case EqKind::F0:
                pre = sign / kSqrtPi;
                lg = principal_log(z);
                break;
              case EqKind::F1:
                pre = sign * recip_gamma((1.0 - dm + c.rest.theta) / 2.0);
                lg = principal_log(z);
                break;
              case EqKind::F2:
                pre = sign * recip_gamma((1.0 - dm - c.rest.beta - c.rest.mu) / 2.0) *
                      recip_gamma((1.0 - dm + c.rest.beta - c.rest.mu) / 2.0);
                lg = log_negated(z);
                break;
            }
            const cplx rhs = pre * (lg * f_norm(p, z).value + d_eval(spec, z).value);
            return scaled(u, rhs);
          });
          limit.point([&] {
            const cplx u = u_eval(p, z).value;
            return scaled(u, limit_alpha(kind, m, c.rest, z).value);
          });
        }
      }
      out.push_back(direct.done());
      out.push_back(limit.done());
    }
  }
}

void ode_suite(std::vector<CheckRecord>& out) {
  constexpr double tol = 1e-8;
  for (EqKind kind : kKinds) {
    const std::string eq = to_string(kind);
    const auto& pts = points_for(kind);
    const auto generic = generic_params(kind);
    const auto integer = integer_params(kind);

    Check f("ode." + eq + ".F", "ode", tol);
    Check second("ode." + eq + ".second", "ode", tol);
    Check logsol("ode." + eq + ".log", "ode", tol);
    Check u("ode." + eq + ".U", "ode", tol);
    Check inhom("inhom." + eq + ".D", "ode", tol);

    for (cplx z : pts) {
      for (const EquationParams& p : generic) {
        f.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return f_norm_jet(p, w); }), p, z).scaled;
        });
        u.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return u_eval_jet(p, w); }), p, z).scaled;
        });
        // z^{-alpha} is taken on the principal branch.
        if (z.imag() == 0.0 && z.real() <= 0.0) continue;
        second.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return f_second_jet(p, w); }), p, z)
              .scaled;
        });
      }
      for (const EquationParams& p : integer) {
        const DSpec spec = dspec_from(p);
        f.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return f_norm_jet(p, w); }), p, z).scaled;
        });
        logsol.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return log_solution_jet(spec, w); }), p,
                              z)
              .scaled;
        });
        u.point([&] {
          return ode_residual(evaluable_jet([&](cplx w) { return u_eval_jet(p, w); }), p, z).scaled;
        });
        inhom.point([&] { return inhom_residual(spec, z).scaled; });
      }
    }
    if (kind == EqKind::F2) {
      for (cplx z : kOuter2F1) {
        for (const auto* set : {&generic, &integer}) {
          for (const EquationParams& p : *set) {
            u.point([&] {
              return ode_residual(evaluable_jet([&](cplx w) { return u_eval_jet(p, w); }), p, z)
                  .scaled;
            });
          }
        }
      }
    }
    out.push_back(f.done());
    out.push_back(second.done());
    out.push_back(logsol.done());
    out.push_back(u.done());
    out.push_back(inhom.done());
  }
}

cplx bessel_series(bool modified, long m, cplx z) {
  const cplx h = z / 2.0;
  const cplx q = modified ? h * h : -h * h;
  cplx term = ipow(h, m) / factorial(m);
  cplx sum = 0.0;
  for (long k = 0; k < 500; ++k) {
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) break;
    term *= q / (static_cast<double>(k + 1) * static_cast<double>(k + 1 + m));
  }
  return sum;
}

void bessel_suite(std::vector<CheckRecord>& out) {
  const std::vector<cplx> grid = {{0.5, 0.0}, {1.0, 0.0}, {2.5, 0.0},
                                  {1.0, 0.5}, {3.0, -1.0}, {0.7, 2.0}};
  for (long m = 0; m <= 1; ++m) {
    Check k("bessel.K" + std::to_string(m) + ".quadrature", "bessel", 1e-8);
    k.point([&] {
      const cplx v = bessel(BesselKind::K, m, 1.0).value;
      return std::abs(v - bessel_k_quadrature(static_cast<double>(m), 1.0));
    });
    out.push_back(k.done());
  }
  Check iseries("bessel.I.series", "bessel", 1e-12);
  Check jseries("bessel.J.series", "bessel", 1e-12);
  Check hankel("bessel.hankel-sum", "bessel", 1e-9);
  Check route("bessel.K.u-route", "bessel", 1e-12);
  for (long m = 0; m <= 4; ++m) {
    for (cplx z : grid) {
      iseries.point(
          [&] { return scaled(bessel(BesselKind::I, m, z).value, bessel_series(true, m, z)); });
      jseries.point(
          [&] { return scaled(bessel(BesselKind::J, m, z).value, bessel_series(false, m, z)); });
      hankel.point([&] {
        const cplx sum = bessel(BesselKind::H1, m, z).value + bessel(BesselKind::H2, m, z).value;
        return scaled(sum, 2.0 * bessel(BesselKind::J, m, z).value);
      });
    }
    // K_m(z) = (sqrt(pi)/2) (z/2)^m U_m(z^2/4).
    for (cplx z : grid) {
      route.point([&] {
        const cplx viaU = kSqrtPi / 2.0 * ipow(z / 2.0, m) *
                          u0(static_cast<double>(m), z * z / 4.0).value;
        return scaled(bessel(BesselKind::K, m, z).value, viaU);
      });
    }
  }
  out.push_back(iseries.done());
  out.push_back(jseries.done());
  out.push_back(hankel.done());
  out.push_back(route.done());
}

void identities_suite(std::vector<CheckRecord>& out) {
  {
    Check g("identity.gamma", "identities", 1e-12);
    for (long m = 0; m <= 10; ++m) {
      g.point([&] {
        const double dm = static_cast<double>(m);
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        const cplx lhs = sign * gamma(1.0 + 2.0 * dm) / (kSqrtPi * gamma(1.0 + dm));
        const cplx rhs = std::pow(4.0, dm) * recip_gamma(0.5 - dm);
        return relative(lhs, rhs);
      });
    }
    out.push_back(g.done());
  }

  // F_m and z^{-m} F_{-m} are proportional at integer alpha.
  {
    Check c0("identity.degenerate.0f1", "identities", 1e-11);
    Check c1("identity.degenerate.1f1", "identities", 1e-11);
    Check c2[4] = {{"identity.degenerate.2f1.plus-beta", "identities", 1e-11},
                   {"identity.degenerate.2f1.minus-beta", "identities", 1e-11},
                   {"identity.degenerate.2f1.plus-mu", "identities", 1e-11},
                   {"identity.degenerate.2f1.minus-mu", "identities", 1e-11}};
    for (long m = 1; m <= 3; ++m) {
      const double dm = static_cast<double>(m);
      for (cplx z : kOffcut) {
        c0.point([&] {
          const cplx lhs = f_norm(Params0F1{dm}, z).value;
          return scaled(lhs, ipow(z, -m) * f_norm(Params0F1{-dm}, z).value);
        });
        for (double t : {0.3, 0.7, 1.9}) {
          c1.point([&] {
            const cplx lhs = pochhammer((t - dm + 1.0) / 2.0, m) * f_norm(Params1F1{t, dm}, z).value;
            return scaled(lhs, ipow(z, -m) * f_norm(Params1F1{t, -dm}, z).value);
          });
        }
      }
      for (cplx z : kOffcut2F1) {
        for (auto [b, u] : {std::pair{0.3, 0.2}, std::pair{0.45, 0.1}}) {
          const double sign = m % 2 == 0 ? 1.0 : -1.0;
          auto poch = [&](double x) { return pochhammer((1.0 - dm + x) / 2.0, m); };
          const cplx coeff[4] = {poch(b - u) * poch(b + u), poch(-b - u) * poch(-b + u),
                                 sign * poch(b + u) * poch(-b + u),
                                 sign * poch(b - u) * poch(-b - u)};
          for (int i = 0; i < 4; ++i) {
            c2[i].point([&] {
              const cplx lhs = ipow(z, -m) * f_norm(Params2F1{-dm, b, -u}, z).value;
              return scaled(lhs, coeff[i] * f_norm(Params2F1{dm, b, u}, z).value);
            });
          }
        }
      }
    }
    out.push_back(c0.done());
    out.push_back(c1.done());
    for (const Check& c : c2) out.push_back(c.done());
  }

  // Tail and principal-part coefficient recursions of D.
  for (EqKind kind : kKinds) {
    const std::string eq = to_string(kind);
    Check tail("identity.recursion." + eq + ".tail", "identities", 1e-12);
    Check principal("identity.recursion." + eq + ".principal", "identities", 1e-14);
    for (const ParamCase& c : param_cases(kind)) {
      for (long m = 0; m <= 4; ++m) {
        const double dm = static_cast<double>(m);
        const DSpec spec = dspec_from(make_params(kind, cplx(dm, 0.0), c.rest));
        const LaurentExpansion e = d_expand(spec);
        const std::vector<cplx> d = e.tail_coeffs(31);
        const cplx A = kind == EqKind::F1 ? (1.0 + dm + c.rest.theta) / 2.0
                                          : (1.0 + dm + c.rest.beta - c.rest.mu) / 2.0;
        const cplx B = (1.0 + dm + c.rest.beta + c.rest.mu) / 2.0;
        for (long k = 0; k < 30; ++k) {
          tail.point([&] {
            const double dk = static_cast<double>(k);
            cplx rhs;
            switch (kind) {
              case EqKind::F0:
                rhs = (d[k] - (dm + 2.0 * dk + 2.0) / (factorial(m + k + 1) * factorial(k + 1))) /
                      ((dk + 1.0) * (dk + dm + 1.0));
                break;
              case EqKind::F1:
                rhs = ((dk + A) * d[k] + pochhammer(A, k) /
                                             (factorial(m + k + 1) * factorial(k + 1)) *
                                             ((dk + 1.0) * (dm + dk + 1.0) -
                                              (A + dk) * (dm + 2.0 * dk + 2.0))) /
                      ((dk + 1.0) * (dk + dm + 1.0));
                break;
              case EqKind::F2:
                rhs = ((A + dk) * (B + dk) * d[k] +
                       pochhammer(A, k) * pochhammer(B, k) / (factorial(k) * factorial(m + k)) *
                           ((1.0 + c.rest.beta + dm + 2.0 * dk) -
                            (A + dk) * (B + dk) / ((1.0 + dm + dk) * (dk + 1.0)) *
                                (2.0 * dk + dm + 2.0))) /
                      ((dk + 1.0) * (dk + 1.0 + dm));
                break;
            }
            return relative(d[k + 1], rhs);
          });
        }
        if (m == 0) continue;
        principal.point([&] {
          // d_{-1} and the two-term recursion in k.
          cplx expect = 1.0 / factorial(m - 1);
          if (kind == EqKind::F1) expect /= (dm - 1.0 + c.rest.theta) / 2.0;
          if (kind == EqKind::F2) {
            expect *= 2.0 / (dm - 1.0 + c.rest.beta - c.rest.mu);
            expect *= 2.0 / (dm - 1.0 + c.rest.beta + c.rest.mu);
          }
          double worst = relative(e.principal[0], expect);
          for (long k = 2; k <= m; ++k) {
            const double dk = static_cast<double>(k);
            cplx ratio = -(dk - 1.0) * (dm + 1.0 - dk);
            if (kind != EqKind::F0) ratio /= A - dk;
            if (kind == EqKind::F2) ratio /= B - dk;
            expect *= ratio;
            worst = std::max(worst, relative(e.principal[k - 1], expect));
          }
          return worst;
        });
      }
    }
    out.push_back(tail.done());
    out.push_back(principal.done());
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "theorems", "ode", "bessel",
                                                 "identities"};
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckRecord> run_suite(const std::string& name,
                                   const std::vector<RelationRecord>& records) {
  std::vector<CheckRecord> out;
  const bool all = name == "all";
  if (all || name == "relations") relations_suite(records, out);
  if (all || name == "theorems") theorems_suite(out);
  if (all || name == "ode") ode_suite(out);
  if (all || name == "bessel") bessel_suite(out);
  if (all || name == "identities") identities_suite(out);
  std::sort(out.begin(), out.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return out;
}

double bessel_k_quadrature(double nu, double x) {
  // The integrand decays like exp(-x e^t / 2); beyond t = 8 it is below 1e-300
  // for x >= 1/2, and the trapezoidal rule converges geometrically.
  const double h = 1.0 / 64.0;
  const int n = 8 * 64;
  double sum = 0.5 * std::exp(-x);
  for (int i = 1; i <= n; ++i) {
    const double t = h * i;
    sum += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
  }
  return sum * h;
}

const std::vector<cplx>& offcut_points() { return kOffcut; }
const std::vector<cplx>& offcut_points_2f1() { return kOffcut2F1; }

}  // namespace hyperd::suites
