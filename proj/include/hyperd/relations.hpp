#ifndef HYPERD_RELATIONS_HPP
#define HYPERD_RELATIONS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperd/hyperd.hpp"
#include "hyperd/hyperf.hpp"
#include "hyperd/hyperu.hpp"

namespace hyperd {

enum class Family { RecurrenceF, RecurrenceD, Contiguity, Kummer, Quadratic };

std::string to_string(Family f);

// Functions a linear relation can be built from. L and LI are the log
// solutions log z F + D (log(-z) F^I + D^I for 2F1).
enum class Target { F, D, FI, DI, L, LI };

// Parameter tuple shared by all equation kinds. For D-type targets alpha
// holds the integer m.
struct RelParams {
  cplx alpha{};
  cplx theta{};
  cplx beta{};
  cplx mu{};
};

RelParams rel_params(const EquationParams& p);
EquationParams equation_params(EqKind kind, const RelParams& r);

// Monomial a^i t^j b^k u^l z^p w^q (w = 1/z) whose coefficient is stored in
// RelationRecord::constants[index].
struct Monomial {
  std::array<int, 6> exps{};
  std::size_t index = 0;
};

struct LinearTerm {
  bool lhs = true;
  Target target = Target::F;
  std::array<int, 4> shift{};  // (alpha, theta, beta, mu)
  int deriv = 0;
  std::vector<Monomial> coeff;
};

struct RelationSides {
  cplx lhs{};
  cplx rhs{};
};

struct RelationRecord;

// Draws one candidate (params, z) point; the record's applicability check
// decides whether it is used.
using PointSampler = std::function<void(std::mt19937_64& rng, RelParams& p, cplx& z)>;

struct RelationRecord {
  std::string id;
  EqKind kind = EqKind::F0;
  Family family = Family::RecurrenceF;
  std::string anchor;     // where the identity lives in the source text
  std::string signature;  // parameter shifts involved
  std::vector<double> constants;

  // Linear relations (recurrences and contiguities).
  std::vector<LinearTerm> terms;

  // Kummer and quadratic relations.
  std::function<RelationSides(const RelationRecord&, const RelParams&, cplx,
                              const SeriesOptions&)>
      custom;

  // Extra applicability condition on top of the automatic one.
  std::function<bool(const RelParams&, cplx)> extra_applicable;

  PointSampler sampler;

  bool is_ladder() const;
};

/// Fresh copy of the full catalog (61 records, ordered by key).
std::vector<RelationRecord> make_catalog();

/// Shared immutable catalog.
const std::vector<RelationRecord>& catalog();

const RelationRecord& find_relation(const std::string& id);
const RelationRecord* find_relation_in(const std::vector<RelationRecord>& records,
                                       const std::string& id);

struct RelationCheck {
  cplx lhs{};
  cplx rhs{};
  double residual = 0.0;  // |lhs - rhs|
  double scaled = 0.0;    // residual / max(1, |lhs|, |rhs|)
};

/// Both sides of a record at a point. Throws Inapplicable when the point is
/// outside the record's applicability domain.
RelationCheck evaluate_relation(const RelationRecord& rec, const RelParams& p, cplx z,
                                const SeriesOptions& opt = {});

bool is_applicable(const RelationRecord& rec, const RelParams& p, cplx z);

/// |LHS - RHS| of the relation `id`.
double check_relation(const std::string& id, const EquationParams& p, cplx z,
                      const SeriesOptions& opt = {});

/// Same for the quadratic/doubling family.
double check_quadratic(const std::string& id, const EquationParams& p, cplx z,
                       const SeriesOptions& opt = {});

/// Evaluates the shifted function of a ladder relation from the unshifted
/// one: the first right-hand term carrying a parameter shift is solved for.
EvalResult apply_ladder(const std::string& id, const EquationParams& p, cplx z,
                        const SeriesOptions& opt = {});
EvalResult apply_ladder(const RelationRecord& rec, const RelParams& p, cplx z,
                        const SeriesOptions& opt = {});

/// The F-recurrence `rec` with F (F^I) replaced by the log solution
/// log z F + D (log(-z) F^I + D^I), sampled at integer alpha. The D-type
/// recurrences are derived from exactly this statement.
RelationRecord log_solution_variant(const RelationRecord& rec);

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double unit_uniform(std::mt19937_64& rng);

inline constexpr int kGridVersion = 1;
inline constexpr int kGridPoints = 25;
inline constexpr double kRelationTolerance = 1e-8;

struct GridPoint {
  RelParams params;
  cplx z{};
};

/// The fixed pseudo-random grid of applicable points for a record.
std::vector<GridPoint> relation_grid(const RelationRecord& rec, int count = kGridPoints);

struct SweepResult {
  std::string id;
  int points = 0;
  double max_scaled = 0.0;
  GridPoint worst{};
  std::string error;  // non-empty when the sweep itself failed

  bool passed() const { return error.empty() && max_scaled <= kRelationTolerance; }
};

SweepResult sweep_relation(const RelationRecord& rec, const SeriesOptions& opt = {});

}  // namespace hyperd

#endif  // HYPERD_RELATIONS_HPP
