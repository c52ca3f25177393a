#include "hyperd/relations.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "hyperd/error.hpp"

namespace hyperd {

namespace {

// ---------------------------------------------------------------------------
// Coefficient expressions. Polynomials in a, t, b, u (alpha or m, theta,
// beta, mu), z and w = 1/z, parsed from the relation table below.

using Exps = std::array<int, 6>;
using Poly = std::map<Exps, double>;

Poly poly_const(double c) { return Poly{{Exps{}, c}}; }

Poly poly_add(const Poly& x, const Poly& y, double sign) {
  Poly out = x;
  for (const auto& [e, c] : y) out[e] += sign * c;
  return out;
}

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      Exps e{};
      for (int i = 0; i < 6; ++i) e[i] = ex[i] + ey[i];
      out[e] += cx * cy;
    }
  }
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw std::logic_error("trailing input in coefficient: " + s_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) {
        p = poly_add(p, term(), 1.0);
      } else if (eat('-')) {
        p = poly_add(p, term(), -1.0);
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      if (eat('*')) {
        p = poly_mul(p, factor());
      } else if (eat('/')) {
        const Poly d = factor();
        if (d.size() != 1 || d.begin()->first != Exps{}) {
          throw std::logic_error("division by a non-constant in coefficient: " + s_);
        }
        p = poly_mul(p, poly_const(1.0 / d.begin()->second));
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    skip();
    if (eat('-')) return poly_mul(poly_const(-1.0), factor());
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) throw std::logic_error("missing ')' in coefficient: " + s_);
      return p;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return poly_const(v);
    }
    static const std::string symbols = "atbuzw";
    if (pos_ < s_.size()) {
      const auto k = symbols.find(s_[pos_]);
      if (k != std::string::npos) {
        ++pos_;
        Exps e{};
        e[k] = 1;
        return Poly{{e, 1.0}};
      }
    }
    throw std::logic_error("bad coefficient expression: " + s_);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Table entries.

struct TermSpec {
  bool lhs;
  Target target;
  std::array<int, 4> shift;
  int deriv;
  const char* coeff;
};

TermSpec L(int deriv, const char* coeff, Target t, std::array<int, 4> shift = {}) {
  return {true, t, shift, deriv, coeff};
}

TermSpec R(int deriv, const char* coeff, Target t, std::array<int, 4> shift = {}) {
  return {false, t, shift, deriv, coeff};
}

// Shift helpers: (alpha, theta) for 1F1, (alpha, beta, mu) for 2F1.
std::array<int, 4> s0(int da) { return {da, 0, 0, 0}; }
std::array<int, 4> s1(int da, int dt) { return {da, dt, 0, 0}; }
std::array<int, 4> s2(int da, int db, int du) { return {da, 0, db, du}; }

bool is_d_target(Target t) {
  return t == Target::D || t == Target::DI || t == Target::L || t == Target::LI;
}

std::string target_name(Target t) {
  switch (t) {
    case Target::F: return "F";
    case Target::D: return "D";
    case Target::FI: return "FI";
    case Target::DI: return "DI";
    case Target::L: return "L";
    case Target::LI: return "LI";
  }
  return "?";
}

std::string describe_shift(const std::array<int, 4>& s) {
  static const char* names[4] = {"a", "t", "b", "u"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (s[i] == 0) continue;
    if (!out.empty()) out += ",";
    out += names[i];
    out += (s[i] > 0 ? "+" : "");
    out += std::to_string(s[i]);
  }
  return out;
}

std::string make_signature(const std::vector<LinearTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    std::string piece = target_name(t.target);
    const std::string sh = describe_shift(t.shift);
    if (!sh.empty()) piece += "[" + sh + "]";
    if (out.find(piece) != std::string::npos) continue;
    if (!out.empty()) out += " ";
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling.

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

cplx disc_point(std::mt19937_64& rng, double rmin, double rmax) {
  const double r = uniform(rng, rmin, rmax);
  const double phi = uniform(rng, -kPi, kPi);
  return std::polar(r, phi);
}

long pick_int(std::mt19937_64& rng, long lo, long hi) {
  const double u = unit_uniform(rng);
  return lo + static_cast<long>(u * static_cast<double>(hi - lo + 1));
}

double z_radius(EqKind kind) { return kind == EqKind::F2 ? 0.6 : 2.0; }

PointSampler generic_sampler(EqKind kind) {
  return [kind](std::mt19937_64& rng, RelParams& p, cplx& z) {
    p.alpha = uniform(rng, kind == EqKind::F2 ? -1.5 : -2.5, 2.5);
    p.theta = uniform(rng, -2.0, 2.0);
    p.beta = uniform(rng, -0.9, 0.9);
    p.mu = uniform(rng, -0.9, 0.9);
    z = disc_point(rng, 0.05, z_radius(kind));
  };
}

PointSampler integer_sampler(EqKind kind) {
  return [kind](std::mt19937_64& rng, RelParams& p, cplx& z) {
    p.alpha = static_cast<double>(pick_int(rng, 0, 4));
    p.theta = uniform(rng, -2.0, 2.0);
    p.beta = uniform(rng, -0.9, 0.9);
    p.mu = uniform(rng, -0.9, 0.9);
    z = disc_point(rng, 0.05, z_radius(kind));
  };
}

// ---------------------------------------------------------------------------
// Evaluation of linear terms.

cplx eval_coeff(const RelationRecord& rec, const std::vector<Monomial>& coeff, const RelParams& p,
                cplx z) {
  const std::array<cplx, 6> vars = {p.alpha, p.theta, p.beta, p.mu, z, 1.0 / z};
  cplx sum = 0.0;
  for (const auto& mono : coeff) {
    cplx v = rec.constants.at(mono.index);
    for (int i = 0; i < 6; ++i) {
      for (int k = 0; k < mono.exps[i]; ++k) v *= vars[i];
    }
    sum += v;
  }
  return sum;
}

RelParams shifted(const RelParams& p, const std::array<int, 4>& s) {
  return {p.alpha + static_cast<double>(s[0]), p.theta + static_cast<double>(s[1]),
          p.beta + static_cast<double>(s[2]), p.mu + static_cast<double>(s[3])};
}

DSpec dspec_of(EqKind kind, const RelParams& p) {
  long m = 0;
  if (!near_integer(p.alpha, kDegeneracyTolerance, m)) {
    fail(ErrorKind::Inapplicable, "D-type term needs integer alpha");
  }
  DSpec s;
  s.kind = kind;
  s.m = m;
  s.theta = p.theta;
  s.beta = p.beta;
  s.mu = p.mu;
  return s;
}

Params2F1 f2_of(const RelParams& p) { return {p.alpha, p.beta, p.mu}; }

JetResult eval_target(Target t, EqKind kind, const RelParams& p, cplx z, const SeriesOptions& opt) {
  switch (t) {
    case Target::F: return f_norm_jet(equation_params(kind, p), z, opt);
    case Target::D: return d_eval_jet(dspec_of(kind, p), z, opt);
    case Target::FI: return f2_norm_I_jet(f2_of(p), z, opt);
    case Target::DI: return d2_norm_I_jet(dspec_of(kind, p), z, opt);
    case Target::L: return log_solution_jet(dspec_of(kind, p), z, opt);
    case Target::LI: return f2_prefactor_I(f2_of(p)) * log_solution_jet(dspec_of(kind, p), z, opt);
  }
  fail(ErrorKind::InvalidArgument, "unknown target");
}

bool linear_applicable(const RelationRecord& rec, const RelParams& p, cplx z) {
  if (rec.kind == EqKind::F2 && std::abs(z) > kF2SeriesRadius) return false;
  if (z == cplx(0.0)) return false;
  for (const auto& t : rec.terms) {
    const RelParams q = shifted(p, t.shift);
    try {
      if (is_d_target(t.target)) {
        long m = 0;
        if (!near_integer(q.alpha, kDegeneracyTolerance, m) || m < 0) return false;
        validate(dspec_of(rec.kind, q));
        if (t.target == Target::L && z.imag() == 0.0 && z.real() <= 0.0) return false;
        if (t.target == Target::LI && z.imag() == 0.0 && z.real() >= 0.0) return false;
      }
      if (t.target == Target::FI || t.target == Target::DI || t.target == Target::LI) {
        f2_prefactor_I(f2_of(q));
      }
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

RelationSides linear_sides(const RelationRecord& rec, const RelParams& p, cplx z,
                           const SeriesOptions& opt) {
  RelationSides sides;
  for (const auto& t : rec.terms) {
    const JetResult j = eval_target(t.target, rec.kind, shifted(p, t.shift), z, opt);
    const cplx v = eval_coeff(rec, t.coeff, p, z) * j.value[t.deriv];
    (t.lhs ? sides.lhs : sides.rhs) += v;
  }
  return sides;
}

// ---------------------------------------------------------------------------
// Catalog construction.

struct CatalogBuilder {
  std::vector<RelationRecord> records;

  void linear(const std::string& id, EqKind kind, Family family, const std::string& anchor,
              std::initializer_list<TermSpec> specs) {
    RelationRecord rec;
    rec.id = id;
    rec.kind = kind;
    rec.family = family;
    rec.anchor = anchor;
    bool uses_d = false;
    for (const auto& s : specs) {
      LinearTerm t;
      t.lhs = s.lhs;
      t.target = s.target;
      t.shift = s.shift;
      t.deriv = s.deriv;
      for (const auto& [e, c] : ExprParser(s.coeff).parse()) {
        if (c == 0.0) continue;
        t.coeff.push_back({e, rec.constants.size()});
        rec.constants.push_back(c);
      }
      uses_d = uses_d || is_d_target(s.target);
      rec.terms.push_back(std::move(t));
    }
    rec.signature = make_signature(rec.terms);
    rec.sampler = uses_d ? integer_sampler(kind) : generic_sampler(kind);
    records.push_back(std::move(rec));
  }

  void custom(const std::string& id, EqKind kind, Family family, const std::string& anchor,
              const std::string& signature, std::vector<double> constants,
              std::function<RelationSides(const RelationRecord&, const RelParams&, cplx,
                                          const SeriesOptions&)>
                  eval,
              PointSampler sampler, std::function<bool(const RelParams&, cplx)> extra = {}) {
    RelationRecord rec;
    rec.id = id;
    rec.kind = kind;
    rec.family = family;
    rec.anchor = anchor;
    rec.signature = signature;
    rec.constants = std::move(constants);
    rec.custom = std::move(eval);
    rec.sampler = std::move(sampler);
    rec.extra_applicable = std::move(extra);
    records.push_back(std::move(rec));
  }
};

void add_0f1(CatalogBuilder& b) {
  const EqKind k = EqKind::F0;
  const char* rec_anchor = "0F1 recurrence relations";
  b.linear("f0.recurF.raise", k, Family::RecurrenceF, rec_anchor,
           {L(1, "1", Target::F), R(0, "1", Target::F, s0(1))});
  b.linear("f0.recurF.lower", k, Family::RecurrenceF, rec_anchor,
           {L(1, "z", Target::F), L(0, "a", Target::F), R(0, "1", Target::F, s0(-1))});
  b.linear("f0.recurD.raise", k, Family::RecurrenceD, rec_anchor,
           {L(1, "1", Target::D), R(0, "1", Target::D, s0(1)), R(0, "-w", Target::F)});
  b.linear("f0.recurD.lower", k, Family::RecurrenceD, rec_anchor,
           {L(1, "z", Target::D), L(0, "a", Target::D), R(0, "1", Target::D, s0(-1)),
            R(0, "-1", Target::F)});
  // m D_m = D_{m-1} - z D_{m+1}
  b.linear("f0.contiguity", k, Family::Contiguity, "0F1 contiguity relation for D",
           {L(0, "a", Target::D), R(0, "1", Target::D, s0(-1)), R(0, "-z", Target::D, s0(1))});
}

void add_1f1(CatalogBuilder& b) {
  const EqKind k = EqKind::F1;
  const char* f_anchor = "1F1 recurrence relations for F";
  const char* d_anchor = "1F1 recurrence relations for D";
  b.linear("f1.recurF.raise", k, Family::RecurrenceF, f_anchor,
           {L(1, "1", Target::F), R(0, "(1+a+t)/2", Target::F, s1(1, 1))});
  b.linear("f1.recurF.raise-shifted", k, Family::RecurrenceF, f_anchor,
           {L(1, "1", Target::F), L(0, "-1", Target::F),
            R(0, "(-1-a+t)/2", Target::F, s1(1, -1))});
  b.linear("f1.recurF.lower-shifted", k, Family::RecurrenceF, f_anchor,
           {L(1, "z", Target::F), L(0, "a-z", Target::F), R(0, "1", Target::F, s1(-1, -1))});
  b.linear("f1.recurF.lower", k, Family::RecurrenceF, f_anchor,
           {L(1, "z", Target::F), L(0, "a", Target::F), R(0, "1", Target::F, s1(-1, 1))});
  b.linear("f1.recurF.z-raise-theta2", k, Family::RecurrenceF, f_anchor,
           {L(1, "z", Target::F), L(0, "(1+a+t)/2", Target::F),
            R(0, "(1+a+t)/2", Target::F, s1(0, 2))});
  b.linear("f1.recurF.z-lower-theta2", k, Family::RecurrenceF, f_anchor,
           {L(1, "z", Target::F), L(0, "(1+a-t)/2-z", Target::F),
            R(0, "(1+a-t)/2", Target::F, s1(0, -2))});

  b.linear("f1.recurD.raise", k, Family::RecurrenceD, d_anchor,
           {L(1, "1", Target::D), R(0, "(1+t+a)/2", Target::D, s1(1, 1)), R(0, "-w", Target::F)});
  b.linear("f1.recurD.raise-shifted", k, Family::RecurrenceD, d_anchor,
           {L(1, "1", Target::D), L(0, "-1", Target::D),
            R(0, "(-1+t-a)/2", Target::D, s1(1, -1)), R(0, "-w", Target::F)});
  b.linear("f1.recurD.lower-shifted", k, Family::RecurrenceD, d_anchor,
           {L(1, "z", Target::D), L(0, "a-z", Target::D), R(0, "1", Target::D, s1(-1, -1)),
            R(0, "-1", Target::F)});
  b.linear("f1.recurD.lower", k, Family::RecurrenceD, d_anchor,
           {L(1, "z", Target::D), L(0, "a", Target::D), R(0, "1", Target::D, s1(-1, 1)),
            R(0, "-1", Target::F)});
  b.linear("f1.recurD.z-raise-theta2", k, Family::RecurrenceD, d_anchor,
           {L(1, "z", Target::D), L(0, "(1+a+t)/2", Target::D),
            R(0, "(1+a+t)/2", Target::D, s1(0, 2)), R(0, "-1", Target::F)});
  b.linear("f1.recurD.z-lower-theta2", k, Family::RecurrenceD, d_anchor,
           {L(1, "z", Target::D), L(0, "(1+a-t)/2-z", Target::D),
            R(0, "(1+a-t)/2", Target::D, s1(0, -2)), R(0, "-1", Target::F)});

  const char* c_anchor = "1F1 contiguous relations for D";
  b.linear("f1.contiguity.m", k, Family::Contiguity, c_anchor,
           {L(0, "1", Target::D), R(0, "(1+a+t)/2", Target::D, s1(1, 1)),
            R(0, "(1+a-t)/2", Target::D, s1(1, -1))});
  b.linear("f1.contiguity.z", k, Family::Contiguity, c_anchor,
           {L(0, "z", Target::D), R(0, "1", Target::D, s1(-1, 1)),
            R(0, "-1", Target::D, s1(-1, -1))});
  b.linear("f1.contiguity.theta", k, Family::Contiguity, c_anchor,
           {L(0, "t+z", Target::D), R(0, "(1+a+t)/2", Target::D, s1(0, 2)),
            R(0, "-(1+a-t)/2", Target::D, s1(0, -2))});
}

// The twelve 2F1 ladders share their left-hand operators between F^I and D^I;
// the D^I versions carry an extra F^I term on the right.
struct F2Ladder {
  const char* key;
  const char* deriv_coeff;
  const char* value_coeff;
  const char* rhs_coeff;
  std::array<int, 4> shift;
  const char* f_term;  // coefficient of F^I on the right of the D^I version
};

const std::array<F2Ladder, 12>& f2_ladders() {
  static const std::array<F2Ladder, 12> table = {{
      {"a+b+", "1", "0", "(1+a+b+u)/2", s2(1, 1, 0), "-w"},
      {"a-b-", "z-z*z", "a*(1-z)-b*z", "(-1+a+b-u)/2", s2(-1, -1, 0), "-(1-z)"},
      {"a+b-", "1-z", "-b", "(1+a-b-u)/2", s2(1, -1, 0), "-(w-1)"},
      {"a-b+", "z", "a", "(-1+a-b+u)/2", s2(-1, 1, 0), "-1"},
      {"b+u+", "z", "(1+a+b+u)/2", "(1+a+b+u)/2", s2(0, 1, 1), "-1"},
      {"b+u-", "z", "(1+a+b-u)/2", "(-1+a-b+u)/2", s2(0, 1, -1), "-1"},
      {"b-u+", "z-z*z", "-b+(1+a+b+u)/2*(1-z)", "(-1+a+b-u)/2", s2(0, -1, 1), "-(1-z)"},
      {"b-u-", "z-z*z", "-b+(1+a+b-u)/2*(1-z)", "(1+a-b-u)/2", s2(0, -1, -1), "-(1-z)"},
      {"a+u+", "z-1", "(1+a+b+u)/2", "(1+a+b+u)/2", s2(1, 0, 1), "-(1-w)"},
      {"a+u-", "z-1", "(1+a+b-u)/2", "(1+a-b-u)/2", s2(1, 0, -1), "-(1-w)"},
      {"a-u+", "z-z*z", "a-(1+a+b+u)/2*z", "(-1+a+b-u)/2", s2(-1, 0, 1), "-(1-z)"},
      {"a-u-", "z-z*z", "a-(1+a+b-u)/2*z", "(-1+a-b+u)/2", s2(-1, 0, -1), "-(1-z)"},
  }};
  return table;
}

void add_2f1(CatalogBuilder& b) {
  const EqKind k = EqKind::F2;
  for (const auto& l : f2_ladders()) {
    b.linear(std::string("f2.recurFI.") + l.key, k, Family::RecurrenceF,
             "2F1 recurrence relations for F^I",
             {L(1, l.deriv_coeff, Target::FI), L(0, l.value_coeff, Target::FI),
              R(0, l.rhs_coeff, Target::FI, l.shift)});
  }
  for (const auto& l : f2_ladders()) {
    b.linear(std::string("f2.recurDI.") + l.key, k, Family::RecurrenceD,
             "2F1 recurrence relations for D^I",
             {L(1, l.deriv_coeff, Target::DI), L(0, l.value_coeff, Target::DI),
              R(0, l.rhs_coeff, Target::DI, l.shift), R(0, l.f_term, Target::FI)});
  }
  const char* c_anchor = "2F1 contiguous relations for D^I";
  b.linear("f2.contiguity.m.b+", k, Family::Contiguity, c_anchor,
           {L(0, "a", Target::DI), R(0, "(-1+a-b+u)/2", Target::DI, s2(-1, 1, 0)),
            R(0, "-(1+a+b+u)/2*z", Target::DI, s2(1, 1, 0))});
  b.linear("f2.contiguity.m.b-", k, Family::Contiguity, c_anchor,
           {L(0, "a*(1-z)", Target::DI), R(0, "(-1+a+b-u)/2", Target::DI, s2(-1, -1, 0)),
            R(0, "-(1+a-b-u)/2*z", Target::DI, s2(1, -1, 0))});
  b.linear("f2.contiguity.u.b+", k, Family::Contiguity, c_anchor,
           {L(0, "u", Target::DI), R(0, "(1+a+b+u)/2", Target::DI, s2(0, 1, 1)),
            R(0, "-(-1+a-b+u)/2", Target::DI, s2(0, 1, -1))});
  b.linear("f2.contiguity.u.b-", k, Family::Contiguity, c_anchor,
           {L(0, "u*(1-z)", Target::DI), R(0, "(-1+a+b-u)/2", Target::DI, s2(0, -1, 1)),
            R(0, "-(1+a-b-u)/2", Target::DI, s2(0, -1, -1))});
  // The source prints the last index triple of this one as (m+1, mu, beta-1);
  // the relation holds with (m+1, beta, mu-1).
  b.linear("f2.contiguity.u.m+", k, Family::Contiguity, c_anchor,
           {L(0, "u", Target::DI), R(0, "(1+a+b+u)/2", Target::DI, s2(1, 0, 1)),
            R(0, "-(1+a-b-u)/2", Target::DI, s2(1, 0, -1))});
  b.linear("f2.contiguity.u.m-", k, Family::Contiguity, c_anchor,
           {L(0, "u*z", Target::DI), R(0, "(-1+a-b+u)/2", Target::DI, s2(-1, 0, -1)),
            R(0, "-(-1+a+b-u)/2", Target::DI, s2(-1, 0, 1))});
}

// ---------------------------------------------------------------------------
// Kummer and quadratic relations.

cplx cpow(cplx base, cplx e) { return principal_pow(base, e); }

bool away_from_integers(cplx x, double tol) {
  long n = 0;
  return !near_integer(x, tol, n);
}

PointSampler f2_sampler(bool integer_alpha, double rmin, double rmax) {
  return [=](std::mt19937_64& rng, RelParams& p, cplx& z) {
    p.alpha = integer_alpha ? static_cast<double>(pick_int(rng, 0, 3)) : uniform(rng, -0.45, 2.5);
    p.beta = uniform(rng, -0.9, 0.9);
    p.mu = uniform(rng, -0.9, 0.9);
    z = disc_point(rng, rmin, rmax);
  };
}

double f2_arg_limit() { return 0.9; }

void add_kummer(CatalogBuilder& b) {
  // F_{a,b,u} = (1-z)^{-b} F_{a,-b,u}
  b.custom(
      "f2.kummer.pow", EqKind::F2, Family::Kummer, "Kummer-table relation for F", "F F[b->-b]",
      {-1.0, -1.0},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = f_norm(Params2F1{p.alpha, p.beta, p.mu}, z, opt).value;
        const cplx rhs = cpow(1.0 - z, c[0] * p.beta) *
                         f_norm(Params2F1{p.alpha, c[1] * p.beta, p.mu}, z, opt).value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(false, 0.05, 0.6));
  // D_{m,b,u} = (1-z)^{-b} D_{m,-b,u}
  b.custom(
      "f2.kummer.powD", EqKind::F2, Family::Kummer, "Kummer-table relation for D",
      "D D[b->-b]", {-1.0, -1.0},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const DSpec lhs_spec = dspec_of(EqKind::F2, p);
        DSpec rhs_spec = lhs_spec;
        rhs_spec.beta = c[1] * p.beta;
        const cplx lhs = d_eval(lhs_spec, z, opt).value;
        const cplx rhs = cpow(1.0 - z, c[0] * p.beta) * d_eval(rhs_spec, z, opt).value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(true, 0.05, 0.6), [](const RelParams& p, cplx) {
        DSpec s = dspec_of(EqKind::F2, p);
        validate(s);
        s.beta = -s.beta;
        validate(s);
        return true;
      });
}

void add_quadratic(CatalogBuilder& b) {
  // Gamma(1+a) F_a(z^2) = e^{-2z} Gamma(1+2a) F_{0,2a}(4z), constants (2, -2, 4)
  b.custom(
      "q.double1", EqKind::F0, Family::Quadratic, "quadratic transformation 0F1 -> 1F1",
      "F0[a](z^2) F1[0,2a](4z)", {2.0, -2.0, 4.0},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = gamma(1.0 + p.alpha) * f_norm(Params0F1{p.alpha}, z * z, opt).value;
        const cplx rhs = std::exp(c[1] * z) * gamma(1.0 + c[0] * p.alpha) *
                         f_norm(Params1F1{0.0, c[0] * p.alpha}, c[2] * z, opt).value;
        return RelationSides{lhs, rhs};
      },
      [](std::mt19937_64& rng, RelParams& p, cplx& z) {
        p.alpha = uniform(rng, -0.45, 2.5);
        z = disc_point(rng, 0.05, 1.0);
      });

  // U_a(z^2) = 2 * 4^a e^{-2z} U_{0,2a}(4z), constants (2, 4, -2, 4, 2)
  b.custom(
      "q.double2", EqKind::F0, Family::Quadratic, "quadratic transformation of U",
      "U0[a](z^2) U1[0,2a](4z)", {2.0, 4.0, -2.0, 4.0, 2.0},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = u0(p.alpha, z * z, URoute::Auto, opt).value;
        const cplx rhs = c[0] * cpow(c[1], p.alpha) * std::exp(c[2] * z) *
                         u1(0.0, c[4] * p.alpha, c[3] * z, URoute::Auto, opt).value;
        return RelationSides{lhs, rhs};
      },
      [](std::mt19937_64& rng, RelParams& p, cplx& z) {
        if (unit_uniform(rng) < 0.3) {
          p.alpha = static_cast<double>(pick_int(rng, 0, 2));
        } else {
          p.alpha = uniform(rng, -0.9, 1.9);
        }
        z = cplx(uniform(rng, 0.1, 1.5), uniform(rng, -1.0, 1.0));
      },
      [](const RelParams& p, cplx z) {
        if (z.real() <= 0.0) return false;
        const bool integer = !away_from_integers(p.alpha, kDegeneracyTolerance);
        return integer || (away_from_integers(p.alpha, 1e-3) && away_from_integers(2.0 * p.alpha, 1e-3));
      });

  // D_m(z^2) = 2(-4)^m sqrt(pi)/Gamma(1/2-m) e^{-2z} (log 4 F_{0,2m}(4z) + D_{0,2m}(4z))
  b.custom(
      "q.double5", EqKind::F0, Family::Quadratic, "doubling relation between D_m and D_{0,2m}",
      "D0[m](z^2) F1[0,2m](4z) D1[0,2m](4z)", {2.0, -4.0, -2.0, 4.0, 4.0},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const DSpec lhs_spec = dspec_of(EqKind::F0, p);
        const long m = lhs_spec.m;
        DSpec rhs_spec;
        rhs_spec.kind = EqKind::F1;
        rhs_spec.m = 2 * m;
        rhs_spec.theta = 0.0;
        const cplx lhs = d_eval(lhs_spec, z * z, opt).value;
        const cplx w = c[4] * z;
        const cplx bracket = std::log(cplx(c[3])) * f_norm(f_params(rhs_spec), w, opt).value +
                             d_eval(rhs_spec, w, opt).value;
        const cplx rhs = c[0] * ipow(cplx(c[1]), m) * kSqrtPi *
                         recip_gamma(0.5 - static_cast<double>(m)) * std::exp(c[2] * z) * bracket;
        return RelationSides{lhs, rhs};
      },
      [](std::mt19937_64& rng, RelParams& p, cplx& z) {
        p.alpha = static_cast<double>(pick_int(rng, 0, 3));
        z = disc_point(rng, 0.1, 1.0);
      },
      [](const RelParams& p, cplx) {
        return !away_from_integers(p.alpha, kDegeneracyTolerance) && p.alpha.real() >= 0.0;
      });

  // Gamma(1+2a) F_{2a,b,-b}(z) = (2/(2-z))^{1/2+a+b} Gamma(1+a) F_{a,b,-1/2}(z^2/(2-z)^2)
  b.custom(
      "q.sasa", EqKind::F2, Family::Quadratic, "doubling relation, argument z^2/(2-z)^2",
      "F[2a,b,-b](z) F[a,b,-1/2](z^2/(2-z)^2)", {2.0, 2.0, 2.0, 0.5, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx a2 = c[0] * p.alpha;
        const cplx lhs = gamma(1.0 + a2) * f_norm(Params2F1{a2, p.beta, -p.beta}, z, opt).value;
        const cplx s = c[2] - z;
        const cplx rhs = cpow(c[1] / s, c[3] + p.alpha + p.beta) * gamma(1.0 + p.alpha) *
                         f_norm(Params2F1{p.alpha, p.beta, c[4]}, z * z / (s * s), opt).value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(false, 0.05, 0.6));

  // ... = (1-z)^{-1/4-a/2-b/2} Gamma(1+a) F_{a,-1/2,-b}(z^2/(4(z-1)))
  b.custom(
      "q.sasa2", EqKind::F2, Family::Quadratic, "doubling relation, argument z^2/(4(z-1))",
      "F[2a,b,-b](z) F[a,-1/2,-b](z^2/(4(z-1)))", {-0.25, -0.5, -0.5, 4.0, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx a2 = 2.0 * p.alpha;
        const cplx lhs = gamma(1.0 + a2) * f_norm(Params2F1{a2, p.beta, -p.beta}, z, opt).value;
        const cplx w = z * z / (c[3] * (z - 1.0));
        const cplx rhs = cpow(1.0 - z, c[0] + c[1] * p.alpha + c[2] * p.beta) *
                         gamma(1.0 + p.alpha) *
                         f_norm(Params2F1{p.alpha, c[4], -p.beta}, w, opt).value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(false, 0.05, 0.6));

  // F_{b,b,2a}(z) = F_{b,-1/2,a}(4z(1-z))
  b.custom(
      "q.sasa1", EqKind::F2, Family::Quadratic, "doubling relation, argument 4z(1-z)",
      "F[b,b,2a](z) F[b,-1/2,a](4z(1-z))", {2.0, 4.0, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = f_norm(Params2F1{p.beta, p.beta, c[0] * p.alpha}, z, opt).value;
        const cplx rhs =
            f_norm(Params2F1{p.beta, c[2], p.alpha}, c[1] * z * (1.0 - z), opt).value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(false, 0.02, 0.18),
      [](const RelParams&, cplx z) { return std::abs(4.0 * z * (1.0 - z)) <= f2_arg_limit(); });

  // ... = (1-2z)^{-1/2-b-a} F_{b,a,-1/2}(4z(z-1)/(1-2z)^2)
  b.custom(
      "q.sasa5", EqKind::F2, Family::Quadratic, "doubling relation, argument 4z(z-1)/(1-2z)^2",
      "F[b,b,2a](z) F[b,a,-1/2](4z(z-1)/(1-2z)^2)", {-0.5, 2.0, 4.0, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = f_norm(Params2F1{p.beta, p.beta, 2.0 * p.alpha}, z, opt).value;
        const cplx s = 1.0 - c[1] * z;
        const cplx rhs = cpow(s, c[0] - p.beta - p.alpha) *
                         f_norm(Params2F1{p.beta, p.alpha, c[3]}, c[2] * z * (z - 1.0) / (s * s),
                                opt)
                             .value;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(false, 0.02, 0.12), [](const RelParams&, cplx z) {
        const cplx s = 1.0 - 2.0 * z;
        return std::abs(4.0 * z * (z - 1.0) / (s * s)) <= f2_arg_limit();
      });

  // U_{2a,b,-b}(z) = (4(1-z))^{-1/4-a/2-b/2} U_{a,-1/2,-b}(z^2/(4(z-1))), Re z < 0
  b.custom(
      "q.uu0", EqKind::F2, Family::Quadratic, "doubling relation for U",
      "U[2a,b,-b](z) U[a,-1/2,-b](z^2/(4(z-1)))", {2.0, 4.0, -0.25, -0.5, -0.5, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const cplx lhs = u2(c[0] * p.alpha, p.beta, -p.beta, z, URoute::Auto, opt).value;
        const cplx w = z * z / (c[1] * (z - 1.0));
        const cplx rhs = cpow(c[1] * (1.0 - z), c[2] + c[3] * p.alpha + c[4] * p.beta) *
                         u2(p.alpha, c[5], -p.beta, w, URoute::Auto, opt).value;
        return RelationSides{lhs, rhs};
      },
      [](std::mt19937_64& rng, RelParams& p, cplx& z) {
        p.alpha = uniform(rng, 0.05, 1.95);
        p.beta = uniform(rng, -0.9, 0.9);
        z = cplx(uniform(rng, -0.55, -0.05), uniform(rng, -0.3, 0.3));
      },
      [](const RelParams& p, cplx z) {
        return z.real() < 0.0 && away_from_integers(p.alpha, 1e-3) &&
               away_from_integers(2.0 * p.alpha, 1e-3);
      });

  // D_{2m,b,-b}(z) = m!/(2(2m)!) (1-z)^{-1/4-m/2-b/2}
  //                  (D_{m,-1/2,-b}(w) - log(4(1-z)) F_{m,-1/2,-b}(w)), w = z^2/(4(z-1))
  b.custom(
      "q.sasa3", EqKind::F2, Family::Quadratic, "doubling relation for D",
      "D[2m,b,-b](z) D[m,-1/2,-b](w) F[m,-1/2,-b](w)", {2.0, -0.25, -0.5, -0.5, 4.0, 4.0, -0.5},
      [](const RelationRecord& r, const RelParams& p, cplx z, const SeriesOptions& opt) {
        const auto& c = r.constants;
        const long m = dspec_of(EqKind::F2, p).m;
        DSpec lhs_spec;
        lhs_spec.kind = EqKind::F2;
        lhs_spec.m = 2 * m;
        lhs_spec.beta = p.beta;
        lhs_spec.mu = -p.beta;
        DSpec rhs_spec;
        rhs_spec.kind = EqKind::F2;
        rhs_spec.m = m;
        rhs_spec.beta = c[6];
        rhs_spec.mu = -p.beta;
        const cplx w = z * z / (c[5] * (z - 1.0));
        const cplx lhs = d_eval(lhs_spec, z, opt).value;
        const cplx bracket = d_eval(rhs_spec, w, opt).value -
                             principal_log(c[4] * (1.0 - z)) * f_norm(f_params(rhs_spec), w, opt).value;
        const double dm = static_cast<double>(m);
        const cplx rhs = factorial(m) / (c[0] * factorial(2 * m)) *
                         cpow(1.0 - z, c[1] + c[2] * dm + c[3] * p.beta) * bracket;
        return RelationSides{lhs, rhs};
      },
      f2_sampler(true, 0.05, 0.6), [](const RelParams& p, cplx) {
        const long m = dspec_of(EqKind::F2, p).m;
        if (m < 0) return false;
        DSpec a;
        a.kind = EqKind::F2;
        a.m = 2 * m;
        a.beta = p.beta;
        a.mu = -p.beta;
        validate(a);
        DSpec b2;
        b2.kind = EqKind::F2;
        b2.m = m;
        b2.beta = -0.5;
        b2.mu = -p.beta;
        validate(b2);
        return true;
      });
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::RecurrenceF: return "RecurrenceF";
    case Family::RecurrenceD: return "RecurrenceD";
    case Family::Contiguity: return "Contiguity";
    case Family::Kummer: return "Kummer";
    case Family::Quadratic: return "Quadratic";
  }
  return "?";
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RelParams rel_params(const EquationParams& p) {
  RelParams r;
  r.alpha = alpha_of(p);
  if (const auto* q = std::get_if<Params1F1>(&p)) r.theta = q->theta;
  if (const auto* q = std::get_if<Params2F1>(&p)) {
    r.beta = q->beta;
    r.mu = q->mu;
  }
  return r;
}

EquationParams equation_params(EqKind kind, const RelParams& r) {
  switch (kind) {
    case EqKind::F0: return Params0F1{r.alpha};
    case EqKind::F1: return Params1F1{r.theta, r.alpha};
    case EqKind::F2: return Params2F1{r.alpha, r.beta, r.mu};
  }
  fail(ErrorKind::InvalidArgument, "unknown equation kind");
}

bool RelationRecord::is_ladder() const {
  if (family != Family::RecurrenceF && family != Family::RecurrenceD) return false;
  return std::any_of(terms.begin(), terms.end(), [](const LinearTerm& t) {
    return !t.lhs && t.shift != std::array<int, 4>{};
  });
}

std::vector<RelationRecord> make_catalog() {
  CatalogBuilder b;
  add_0f1(b);
  add_1f1(b);
  add_2f1(b);
  add_kummer(b);
  add_quadratic(b);
  std::sort(b.records.begin(), b.records.end(),
            [](const RelationRecord& x, const RelationRecord& y) { return x.id < y.id; });
  return std::move(b.records);
}

const std::vector<RelationRecord>& catalog() {
  static const std::vector<RelationRecord> records = make_catalog();
  return records;
}

const RelationRecord* find_relation_in(const std::vector<RelationRecord>& records,
                                       const std::string& id) {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const RelationRecord& find_relation(const std::string& id) {
  const RelationRecord* r = find_relation_in(catalog(), id);
  if (r == nullptr) fail(ErrorKind::UnknownRelation, "unknown relation: " + id);
  return *r;
}

bool is_applicable(const RelationRecord& rec, const RelParams& p, cplx z) {
  try {
    if (!rec.terms.empty() && !linear_applicable(rec, p, z)) return false;
    if (rec.extra_applicable && !rec.extra_applicable(p, z)) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

RelationCheck evaluate_relation(const RelationRecord& rec, const RelParams& p, cplx z,
                                const SeriesOptions& opt) {
  if (!is_applicable(rec, p, z)) {
    fail(ErrorKind::Inapplicable, rec.id + ": point outside the applicability domain");
  }
  const RelationSides s = rec.custom ? rec.custom(rec, p, z, opt) : linear_sides(rec, p, z, opt);
  RelationCheck out;
  out.lhs = s.lhs;
  out.rhs = s.rhs;
  out.residual = std::abs(s.lhs - s.rhs);
  out.scaled = out.residual / std::max({1.0, std::abs(s.lhs), std::abs(s.rhs)});
  return out;
}

double check_relation(const std::string& id, const EquationParams& p, cplx z,
                      const SeriesOptions& opt) {
  const RelationRecord& rec = find_relation(id);
  if (kind_of(p) != rec.kind) {
    fail(ErrorKind::Inapplicable, id + ": parameters belong to another equation");
  }
  return evaluate_relation(rec, rel_params(p), z, opt).residual;
}

double check_quadratic(const std::string& id, const EquationParams& p, cplx z,
                       const SeriesOptions& opt) {
  const RelationRecord& rec = find_relation(id);
  if (rec.family != Family::Quadratic) {
    fail(ErrorKind::Inapplicable, id + " is not a quadratic relation");
  }
  return check_relation(id, p, z, opt);
}

EvalResult apply_ladder(const RelationRecord& rec, const RelParams& p, cplx z,
                        const SeriesOptions& opt) {
  if (!rec.is_ladder()) fail(ErrorKind::Inapplicable, rec.id + " is not a ladder relation");
  if (!is_applicable(rec, p, z)) {
    fail(ErrorKind::Inapplicable, rec.id + ": point outside the applicability domain");
  }
  const LinearTerm* ladder = nullptr;
  for (const auto& t : rec.terms) {
    if (!t.lhs && t.shift != std::array<int, 4>{}) {
      ladder = &t;
      break;
    }
  }
  EvalResult acc;
  acc.terms_used = 0;
  for (const auto& t : rec.terms) {
    if (&t == ladder) continue;
    const JetResult j = eval_target(t.target, rec.kind, shifted(p, t.shift), z, opt);
    const cplx c = eval_coeff(rec, t.coeff, p, z) * (t.lhs ? 1.0 : -1.0);
    acc = acc + EvalResult{c * j.value[t.deriv], std::abs(c) * j.err[t.deriv], j.terms_used,
                           j.flags};
  }
  const cplx c = eval_coeff(rec, ladder->coeff, p, z);
  if (c == cplx(0.0)) fail(ErrorKind::Inapplicable, rec.id + ": ladder coefficient vanishes");
  return (1.0 / c) * acc;
}

EvalResult apply_ladder(const std::string& id, const EquationParams& p, cplx z,
                        const SeriesOptions& opt) {
  const RelationRecord& rec = find_relation(id);
  if (kind_of(p) != rec.kind) {
    fail(ErrorKind::Inapplicable, id + ": parameters belong to another equation");
  }
  return apply_ladder(rec, rel_params(p), z, opt);
}

RelationRecord log_solution_variant(const RelationRecord& rec) {
  if (rec.family != Family::RecurrenceF) {
    fail(ErrorKind::Inapplicable, rec.id + " is not an F recurrence");
  }
  RelationRecord out = rec;
  out.id = rec.id + ".log";
  for (auto& t : out.terms) {
    if (t.target == Target::F) t.target = Target::L;
    if (t.target == Target::FI) t.target = Target::LI;
  }
  out.sampler = integer_sampler(rec.kind);
  return out;
}

std::vector<GridPoint> relation_grid(const RelationRecord& rec, int count) {
  std::mt19937_64 rng(fnv1a(rec.id) ^ (0x9E3779B97F4A7C15ull * static_cast<unsigned>(kGridVersion)));
  std::vector<GridPoint> out;
  const int max_draws = count * 200;
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < count; ++draw) {
    GridPoint g;
    rec.sampler(rng, g.params, g.z);
    if (is_applicable(rec, g.params, g.z)) out.push_back(g);
  }
  return out;
}

SweepResult sweep_relation(const RelationRecord& rec, const SeriesOptions& opt) {
  SweepResult res;
  res.id = rec.id;
  const auto grid = relation_grid(rec);
  if (static_cast<int>(grid.size()) < kGridPoints) {
    res.error = "only " + std::to_string(grid.size()) + " applicable grid points";
  }
  for (const auto& g : grid) {
    try {
      const RelationCheck c = evaluate_relation(rec, g.params, g.z, opt);
      if (!(c.scaled <= res.max_scaled)) {
        res.max_scaled = std::isfinite(c.scaled) ? c.scaled : std::numeric_limits<double>::infinity();
        res.worst = g;
      }
    } catch (const Error& e) {
      res.error = std::string(to_string(e.kind())) + ": " + e.what();
      res.worst = g;
      break;
    }
    ++res.points;
  }
  return res;
}

}  // namespace hyperd
