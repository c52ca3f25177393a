#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "hyperd/error.hpp"
#include "hyperd/hyperd.hpp"
#include "hyperd/hyperf.hpp"
#include "hyperd/hyperu.hpp"
#include "hyperd/relations.hpp"
#include "suites.hpp"

namespace {

using namespace hyperd;
using cli::json_number;
using cli::json_string;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct ParamOptions {
  std::optional<std::string> alpha, m, theta, beta, mu, a, b, c;
};

struct PointOptions {
  std::vector<std::string> z;
  std::optional<std::string> grid;
};

struct NumericOptions {
  std::optional<double> rel_tol;
  std::optional<int> max_terms;
  std::string route = "auto";
};

void add_param_options(CLI::App* cmd, ParamOptions& p) {
  cmd->add_option("--alpha", p.alpha, "alpha (complex literal)");
  cmd->add_option("--m", p.m, "integer alpha");
  cmd->add_option("--theta", p.theta, "theta (1f1)");
  cmd->add_option("--beta", p.beta, "beta (2f1)");
  cmd->add_option("--mu", p.mu, "mu (2f1)");
  cmd->add_option("--a", p.a, "classical a");
  cmd->add_option("--b", p.b, "classical b");
  cmd->add_option("--c", p.c, "classical c");
}

void add_point_options(CLI::App* cmd, PointOptions& p) {
  cmd->add_option("--z", p.z, "evaluation point, e.g. 0.5+0.25i (repeatable)");
  cmd->add_option("--z-grid", p.grid, "grid re0:re1:n,im0:im1:m");
}

void add_numeric_options(CLI::App* cmd, NumericOptions& n) {
  cmd->add_option("--rel-tol", n.rel_tol, "series truncation tolerance");
  cmd->add_option("--max-terms", n.max_terms, "series term cap (default HYPERD_MAX_TERMS or 10000)");
  cmd->add_option("--route", n.route, "U route: auto, connection, logplusd, asymptotic, kummer, inverse");
}

cplx complex_arg(const std::string& name, const std::string& text) {
  const auto v = cli::parse_complex(text);
  if (!v) fail(ErrorKind::InvalidArgument, "--" + name + ": not a complex literal: " + text);
  return *v;
}

EqKind parse_eq(const std::string& name) {
  if (name == "0f1") return EqKind::F0;
  if (name == "1f1") return EqKind::F1;
  if (name == "2f1") return EqKind::F2;
  fail(ErrorKind::InvalidArgument, "--eq must be 0f1, 1f1 or 2f1");
}

EquationParams build_params(EqKind kind, const ParamOptions& o) {
  const bool lie = o.alpha || o.m || o.theta || o.beta || o.mu;
  const bool classical = o.a || o.b || o.c;
  if (lie && classical) {
    fail(ErrorKind::InvalidArgument, "Lie-algebraic and classical parameters are mutually exclusive");
  }
  if (classical) {
    if (!o.c) fail(ErrorKind::InvalidArgument, "classical parameters need --c");
    if (kind != EqKind::F0 && !o.a) fail(ErrorKind::InvalidArgument, "--a is required");
    if (kind == EqKind::F2 && !o.b) fail(ErrorKind::InvalidArgument, "--b is required");
    if (kind == EqKind::F0 && (o.a || o.b)) fail(ErrorKind::InvalidArgument, "0f1 takes only --c");
    if (kind == EqKind::F1 && o.b) fail(ErrorKind::InvalidArgument, "1f1 takes --a and --c");
    ClassicalParams c;
    c.c = complex_arg("c", *o.c);
    if (o.a) c.a = complex_arg("a", *o.a);
    if (o.b) c.b = complex_arg("b", *o.b);
    return from_classical(kind, c);
  }
  if (o.alpha && o.m) fail(ErrorKind::InvalidArgument, "give either --alpha or --m");
  cplx alpha;
  if (o.m) {
    const cplx v = complex_arg("m", *o.m);
    long n = 0;
    if (!near_integer(v, 0.0, n)) fail(ErrorKind::InvalidArgument, "--m must be an integer");
    alpha = v;
  } else if (o.alpha) {
    alpha = complex_arg("alpha", *o.alpha);
  } else {
    fail(ErrorKind::InvalidArgument, "missing --alpha or --m");
  }
  if (kind != EqKind::F1 && o.theta) fail(ErrorKind::InvalidArgument, "--theta belongs to 1f1");
  if (kind != EqKind::F2 && (o.beta || o.mu)) {
    fail(ErrorKind::InvalidArgument, "--beta and --mu belong to 2f1");
  }
  switch (kind) {
    case EqKind::F0: return Params0F1{alpha};
    case EqKind::F1: return Params1F1{o.theta ? complex_arg("theta", *o.theta) : cplx{}, alpha};
    case EqKind::F2:
      return Params2F1{alpha, o.beta ? complex_arg("beta", *o.beta) : cplx{},
                       o.mu ? complex_arg("mu", *o.mu) : cplx{}};
  }
  fail(ErrorKind::InvalidArgument, "unknown equation kind");
}

std::vector<cplx> build_points(const PointOptions& o) {
  std::vector<cplx> out;
  for (const std::string& s : o.z) out.push_back(complex_arg("z", s));
  if (o.grid) {
    const auto g = cli::parse_grid(*o.grid);
    if (!g) fail(ErrorKind::InvalidArgument, "--z-grid: expected re0:re1:n,im0:im1:m");
    out.insert(out.end(), g->begin(), g->end());
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "no points: give --z or --z-grid");
  return out;
}

SeriesOptions build_series(const NumericOptions& n) {
  SeriesOptions opt;
  if (n.rel_tol) {
    if (!(*n.rel_tol > 0.0)) fail(ErrorKind::InvalidArgument, "--rel-tol must be positive");
    opt.rel_tol = *n.rel_tol;
  }
  if (n.max_terms) {
    if (*n.max_terms < 1) fail(ErrorKind::InvalidArgument, "--max-terms must be positive");
    opt.max_terms = *n.max_terms;
  }
  return opt;
}

URoute build_route(const NumericOptions& n) {
  const auto r = parse_route(n.route);
  if (!r) fail(ErrorKind::InvalidArgument, "unknown route: " + n.route);
  return *r;
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {"F", "second", "D", "U", "2F0", "FI", "DI",
                                                 "I", "J",      "K", "H1", "H2"};
  return names;
}

void check_function(const std::string& func) {
  for (const auto& n : function_names()) {
    if (n == func) return;
  }
  fail(ErrorKind::InvalidArgument, "unknown function: " + func);
}

long integer_alpha(const EquationParams& p) {
  long m = 0;
  if (!near_integer(alpha_of(p), kDegeneracyTolerance, m)) {
    fail(ErrorKind::InvalidArgument, "this function needs integer alpha");
  }
  return m;
}

EvalResult evaluate(const std::string& func, const EquationParams& p, cplx z, URoute route,
                    const SeriesOptions& opt) {
  const EqKind kind = kind_of(p);
  if (func == "F") return f_norm(p, z, opt);
  if (func == "second") return f_second(p, z, opt);
  if (func == "D") return d_eval(dspec_from(p), z, opt);
  if (func == "U") return u_eval(p, z, route, opt);
  if (func == "FI" || func == "DI") {
    if (kind != EqKind::F2) fail(ErrorKind::InvalidArgument, func + " is defined for 2f1");
    if (func == "FI") return f2_norm_I(std::get<Params2F1>(p), z, opt);
    return d2_norm_I(dspec_from(p), z, opt);
  }
  if (func == "2F0") {
    const cplx alpha = alpha_of(p);
    if (kind == EqKind::F0) return f2f0_asymptotic(0.5 + alpha, 0.5 - alpha, z, opt);
    if (kind == EqKind::F1) {
      const cplx theta = std::get<Params1F1>(p).theta;
      return f2f0_asymptotic((1.0 + alpha + theta) / 2.0, (1.0 - alpha + theta) / 2.0, z, opt);
    }
    fail(ErrorKind::InvalidArgument, "2F0 is defined for 0f1 and 1f1");
  }
  if (kind != EqKind::F0) fail(ErrorKind::InvalidArgument, func + " is defined for 0f1");
  const auto bk = parse_bessel_kind(func);
  return bessel(*bk, integer_alpha(p), z, opt);
}

std::string complex_json(cplx v) {
  return "[" + json_number(v.real()) + ", " + json_number(v.imag()) + "]";
}

std::string params_json(const EquationParams& p) {
  std::ostringstream s;
  const EqKind kind = kind_of(p);
  s << "\"params\": {\"alpha\": " << complex_json(alpha_of(p));
  if (kind == EqKind::F1) s << ", \"theta\": " << complex_json(std::get<Params1F1>(p).theta);
  if (kind == EqKind::F2) {
    s << ", \"beta\": " << complex_json(std::get<Params2F1>(p).beta)
      << ", \"mu\": " << complex_json(std::get<Params2F1>(p).mu);
  }
  const ClassicalParams c = to_classical(p);
  s << "}, \"classical\": {";
  if (kind != EqKind::F0) s << "\"a\": " << complex_json(c.a) << ", ";
  if (kind == EqKind::F2) s << "\"b\": " << complex_json(c.b) << ", ";
  s << "\"c\": " << complex_json(c.c) << "}";
  return s.str();
}

void print_error(const Error& e) {
  std::cerr << "{\"error\": {\"kind\": " << json_string(to_string(e.kind()))
            << ", \"message\": " << json_string(e.what()) << "}}\n";
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << "{\"error\": {\"kind\": " << json_string(kind)
            << ", \"message\": " << json_string(message) << "}}\n";
}

// ---------------------------------------------------------------------------

struct EvalRequest {
  std::string eq;
  std::vector<std::string> funcs;
  ParamOptions params;
  PointOptions points;
  NumericOptions numeric;
  std::string format;
};

int cmd_eval(const EvalRequest& req) {
  const std::string& func = req.funcs.front();
  check_function(func);
  const EqKind kind = parse_eq(req.eq);
  const EquationParams p = build_params(kind, req.params);
  const std::vector<cplx> zs = build_points(req.points);
  const SeriesOptions opt = build_series(req.numeric);
  const URoute route = build_route(req.numeric);

  std::vector<EvalResult> values;
  values.reserve(zs.size());
  for (cplx z : zs) values.push_back(evaluate(func, p, z, route, opt));

  std::ostringstream out;
  if (req.format == "csv") {
    out << "z_re,z_im,value_re,value_im,err_estimate,terms_used,flags\n";
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const EvalResult& r = values[i];
      out << cli::csv_number(zs[i].real()) << ',' << cli::csv_number(zs[i].imag()) << ','
          << cli::csv_number(r.value.real()) << ',' << cli::csv_number(r.value.imag()) << ','
          << cli::csv_number(r.err_estimate) << ',' << r.terms_used << ','
          << flags_to_string(r.flags) << '\n';
    }
  } else {
    out << "{\"command\": \"eval\", \"eq\": " << json_string(req.eq)
        << ", \"func\": " << json_string(func) << ", \"route\": " << json_string(req.numeric.route)
        << ", " << params_json(p) << ", \"records\": [";
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const EvalResult& r = values[i];
      out << (i == 0 ? "\n" : ",\n") << "  {\"z_re\": " << json_number(zs[i].real())
          << ", \"z_im\": " << json_number(zs[i].imag())
          << ", \"value_re\": " << json_number(r.value.real())
          << ", \"value_im\": " << json_number(r.value.imag())
          << ", \"err_estimate\": " << json_number(r.err_estimate)
          << ", \"terms_used\": " << r.terms_used
          << ", \"flags\": " << json_string(flags_to_string(r.flags)) << "}";
    }
    out << "\n]}\n";
  }
  std::cout << out.str();
  return kExitOk;
}

// Plot-ready table of several functions over the same points; cells of
// points where a function is undefined stay empty (null in JSON).
int cmd_table(const EvalRequest& req) {
  for (const auto& f : req.funcs) check_function(f);
  const EqKind kind = parse_eq(req.eq);
  const EquationParams p = build_params(kind, req.params);
  const std::vector<cplx> zs = build_points(req.points);
  const SeriesOptions opt = build_series(req.numeric);
  const URoute route = build_route(req.numeric);

  std::vector<std::vector<std::optional<EvalResult>>> cells(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (const auto& f : req.funcs) {
      try {
        cells[i].push_back(evaluate(f, p, zs[i], route, opt));
      } catch (const Error&) {
        cells[i].push_back(std::nullopt);
      }
    }
  }
  std::ostringstream out;
  if (req.format == "json") {
    out << "{\"command\": \"table\", \"eq\": " << json_string(req.eq) << ", " << params_json(p)
        << ", \"columns\": [\"z_re\", \"z_im\"";
    for (const auto& f : req.funcs) {
      out << ", " << json_string(f + "_re") << ", " << json_string(f + "_im") << ", "
          << json_string(f + "_err");
    }
    out << "], \"rows\": [";
    for (std::size_t i = 0; i < zs.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << "  [" << json_number(zs[i].real()) << ", "
          << json_number(zs[i].imag());
      for (const auto& c : cells[i]) {
        if (c) {
          out << ", " << json_number(c->value.real()) << ", " << json_number(c->value.imag())
              << ", " << json_number(c->err_estimate);
        } else {
          out << ", null, null, null";
        }
      }
      out << "]";
    }
    out << "\n]}\n";
  } else {
    out << "z_re,z_im";
    for (const auto& f : req.funcs) out << ',' << f << "_re," << f << "_im," << f << "_err";
    out << '\n';
    for (std::size_t i = 0; i < zs.size(); ++i) {
      out << cli::csv_number(zs[i].real()) << ',' << cli::csv_number(zs[i].imag());
      for (const auto& c : cells[i]) {
        if (c) {
          out << ',' << cli::csv_number(c->value.real()) << ','
              << cli::csv_number(c->value.imag()) << ',' << cli::csv_number(c->err_estimate);
        } else {
          out << ",,,";
        }
      }
      out << '\n';
    }
  }
  std::cout << out.str();
  return kExitOk;
}

struct VerifyRequest {
  std::string suite = "all";
  std::optional<std::string> id;
  std::string format = "json";
  std::optional<std::string> mutate;
};

// ID:INDEX[:DELTA] adds DELTA (default 0.25) to one stored constant.
void apply_mutation(std::vector<RelationRecord>& records, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) {
    fail(ErrorKind::InvalidArgument, "--mutate expects ID:INDEX[:DELTA]");
  }
  auto it = std::find_if(records.begin(), records.end(),
                         [&](const RelationRecord& r) { return r.id == parts[0]; });
  if (it == records.end()) fail(ErrorKind::UnknownRelation, "unknown relation: " + parts[0]);
  std::size_t index = 0;
  double delta = 0.25;
  try {
    index = std::stoul(parts[1]);
    if (parts.size() == 3) delta = std::stod(parts[2]);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "--mutate: bad index or delta");
  }
  if (index >= it->constants.size()) {
    fail(ErrorKind::InvalidArgument, "--mutate: constant index out of range");
  }
  it->constants[index] += delta;
}

int cmd_verify(const VerifyRequest& req) {
  std::vector<RelationRecord> records = make_catalog();
  if (req.mutate) apply_mutation(records, *req.mutate);

  std::vector<suites::CheckRecord> results;
  if (req.id) {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const RelationRecord& r) { return r.id == *req.id; });
    if (it != records.end()) {
      results = suites::run_suite("relations", {*it});
    } else {
      for (auto& r : suites::run_suite("all", records)) {
        if (r.id == *req.id) results.push_back(r);
      }
      if (results.empty()) fail(ErrorKind::UnknownRelation, "unknown check id: " + *req.id);
    }
  } else {
    if (!suites::is_suite(req.suite)) fail(ErrorKind::InvalidArgument, "unknown suite: " + req.suite);
    results = suites::run_suite(req.suite, records);
  }

  double max_residual = 0.0;
  std::vector<std::string> failures;
  for (const auto& r : results) {
    max_residual = std::max(max_residual, r.max_residual);
    if (!r.passed()) failures.push_back(r.id);
  }

  std::ostringstream out;
  if (req.format == "csv") {
    out << "id,suite,points,max_residual,tolerance,passed,error\n";
    for (const auto& r : results) {
      out << r.id << ',' << r.suite << ',' << r.points << ',' << cli::csv_number(r.max_residual)
          << ',' << cli::csv_number(r.tolerance) << ',' << (r.passed() ? "true" : "false") << ','
          << json_string(r.error) << '\n';
    }
  } else {
    out << "{\"relations_checked\": " << results.size()
        << ", \"max_residual\": " << json_number(max_residual) << ", \"failures\": [";
    for (std::size_t i = 0; i < failures.size(); ++i) {
      out << (i == 0 ? "" : ", ") << json_string(failures[i]);
    }
    out << "], \"records\": [";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      out << (i == 0 ? "\n" : ",\n") << "  {\"id\": " << json_string(r.id)
          << ", \"suite\": " << json_string(r.suite) << ", \"points\": " << r.points
          << ", \"max_residual\": " << json_number(r.max_residual)
          << ", \"tolerance\": " << json_number(r.tolerance)
          << ", \"passed\": " << (r.passed() ? "true" : "false")
          << ", \"error\": " << (r.error.empty() ? "null" : json_string(r.error)) << "}";
    }
    out << "\n]}\n";
  }
  std::cout << out.str();
  return failures.empty() ? kExitOk : kExitFailed;
}

int cmd_catalog(const std::string& format) {
  const auto& records = catalog();
  std::ostringstream out;
  if (format == "csv") {
    out << "id,eq,family,signature,constants\n";
    for (const auto& r : records) {
      out << r.id << ',' << to_string(r.kind) << ',' << to_string(r.family) << ','
          << json_string(r.signature) << ',' << r.constants.size() << '\n';
    }
  } else {
    out << "{\"relations\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      out << (i == 0 ? "\n" : ",\n") << "  {\"id\": " << json_string(r.id)
          << ", \"eq\": " << json_string(to_string(r.kind))
          << ", \"family\": " << json_string(to_string(r.family))
          << ", \"anchor\": " << json_string(r.anchor)
          << ", \"signature\": " << json_string(r.signature) << ", \"constants\": [";
      for (std::size_t k = 0; k < r.constants.size(); ++k) {
        out << (k == 0 ? "" : ", ") << json_number(r.constants[k]);
      }
      out << "]}";
    }
    out << "\n]}\n";
  }
  std::cout << out.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate hypergeometric functions: evaluation and identity checks"};
  app.require_subcommand(1);

  EvalRequest eval_req;
  std::string eval_func;
  auto* eval = app.add_subcommand("eval", "evaluate one function at points");
  eval->add_option("--eq", eval_req.eq, "0f1, 1f1 or 2f1")->required();
  eval->add_option("--func", eval_func, "F, second, D, U, 2F0, FI, DI, I, J, K, H1, H2")
      ->required();
  add_param_options(eval, eval_req.params);
  add_point_options(eval, eval_req.points);
  add_numeric_options(eval, eval_req.numeric);
  eval_req.format = "json";
  eval->add_option("--format", eval_req.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  EvalRequest table_req;
  auto* table = app.add_subcommand("table", "tabulate functions over points");
  table->add_option("--eq", table_req.eq, "0f1, 1f1 or 2f1")->required();
  table->add_option("--func", table_req.funcs, "functions (repeatable)")->required();
  add_param_options(table, table_req.params);
  add_point_options(table, table_req.points);
  add_numeric_options(table, table_req.numeric);
  table_req.format = "csv";
  table->add_option("--format", table_req.format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyRequest verify_req;
  auto* verify = app.add_subcommand("verify", "check identities and defining equations");
  verify->add_option("--suite", verify_req.suite,
                     "all, relations, theorems, ode, bessel, identities");
  verify->add_option("--id", verify_req.id, "single relation key or check id");
  verify->add_option("--format", verify_req.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--mutate", verify_req.mutate)->group("");

  std::string catalog_format = "json";
  auto* cat = app.add_subcommand("catalog", "list the relation catalog");
  cat->add_option("--format", catalog_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (eval->parsed()) {
      eval_req.funcs = {eval_func};
      return cmd_eval(eval_req);
    }
    if (table->parsed()) return cmd_table(table_req);
    if (verify->parsed()) return cmd_verify(verify_req);
    if (cat->parsed()) return cmd_catalog(catalog_format);
  } catch (const Error& e) {
    print_error(e);
    return kExitError;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return kExitError;
  }
  return kExitError;
}
