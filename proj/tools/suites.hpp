#ifndef HYPERD_TOOLS_SUITES_HPP
#define HYPERD_TOOLS_SUITES_HPP

#include <string>
#include <vector>

#include "hyperd/relations.hpp"

namespace hyperd::suites {

// One verified statement: the largest residual over its points against the
// tolerance that applies to it.
struct CheckRecord {
  std::string id;
  std::string suite;
  int points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string error;

  bool passed() const { return error.empty() && points > 0 && max_residual <= tolerance; }
};

// relations, theorems, ode, bessel, identities
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" runs every suite). The relations suite sweeps
/// `records`, which lets callers check a modified catalog.
std::vector<CheckRecord> run_suite(const std::string& name,
                                   const std::vector<RelationRecord>& records);

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoidal rule.
double bessel_k_quadrature(double nu, double x);

// Point sets shared with the tests.
const std::vector<cplx>& offcut_points();     // off (-inf, 0], for 0F1 and 1F1
const std::vector<cplx>& offcut_points_2f1();  // off [0, inf), |z| <= 0.9

}  // namespace hyperd::suites

#endif  // HYPERD_TOOLS_SUITES_HPP
