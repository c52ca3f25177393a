#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hyperd/error.hpp"
#include "hyperd/relations.hpp"
#include "reference/reference_values.hpp"
#include "test_util.hpp"

using namespace hyperd;
using testutil::absdiff;
using testutil::relative;

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  CHECK(cat.size() == 61);
  std::set<std::string> ids;
  for (const auto& r : cat) {
    CHECK(ids.insert(r.id).second);
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.constants.empty());
  }
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](const RelationRecord& a, const RelationRecord& b) { return a.id < b.id; }));
  for (const char* id : {"q.sasa3", "q.double5", "f2.kummer.pow", "f0.contiguity"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("unknown relation id") {
  try {
    find_relation("no.such.relation");
    FAIL("expected UnknownRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownRelation);
  }
}

TEST_CASE("recurrence and contiguity spot checks") {
  CHECK(check_relation("f0.contiguity", Params0F1{1.0}, 0.4) <= 1e-10);
  CHECK(check_relation("f0.recurD.raise", Params0F1{0.0}, 0.5) <= 1e-10);
  CHECK(check_relation("f2.kummer.pow", Params2F1{0.2, 0.3, 0.4}, 0.3) <= 1e-11);
}

TEST_CASE("doubling relations") {
  CHECK(check_quadratic("q.double1", Params0F1{0.3}, 0.2) <= 1e-11);
  CHECK(check_quadratic("q.double5", Params0F1{1.0}, 0.15) <= 1e-9);
  CHECK(check_quadratic("q.sasa3", Params2F1{1.0, 0.3, 0.0}, -0.2) <= 1e-8);
}

TEST_CASE("ladders") {
  const auto f = apply_ladder("f0.recurF.raise", Params0F1{0.3}, 0.7);
  CHECK(absdiff(f.value, ref::F0_a13_z07) <= 1e-10);
  const auto g = apply_ladder("f1.recurF.z-raise-theta2", Params1F1{0.4, 0.2}, 0.3);
  CHECK(absdiff(g.value, ref::F1_t24_a02_z03) <= 1e-10);
  CHECK(find_relation("f0.recurF.raise").is_ladder());
  CHECK_FALSE(find_relation("q.sasa3").is_ladder());
}

TEST_CASE("fixed grids are reproducible") {
  const auto& rec = find_relation("f1.recurF.raise");
  const auto a = relation_grid(rec);
  const auto b = relation_grid(rec);
  REQUIRE(a.size() == static_cast<std::size_t>(kGridPoints));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].z == b[i].z);
    CHECK(a[i].params.alpha == b[i].params.alpha);
    CHECK(is_applicable(rec, a[i].params, a[i].z));
  }
}

TEST_CASE("every catalogued relation passes its sweep") {
  for (const auto& rec : catalog()) {
    const SweepResult r = sweep_relation(rec);
    INFO(rec.id << " " << r.error << " " << r.max_scaled);
    CHECK(r.passed());
    CHECK(r.points == kGridPoints);
  }
}

TEST_CASE("a corrupted constant is detected") {
  auto cat = make_catalog();
  RelationRecord* rec = nullptr;
  for (auto& r : cat) {
    if (r.id == "q.sasa3") rec = &r;
  }
  REQUIRE(rec != nullptr);
  rec->constants[0] += 0.25;
  CHECK_FALSE(sweep_relation(*rec).passed());
}

TEST_CASE("log-solution variant of an F recurrence") {
  const RelationRecord v = log_solution_variant(find_relation("f0.recurF.raise"));
  const SweepResult r = sweep_relation(v);
  INFO(r.error);
  CHECK(r.passed());
}

TEST_CASE("uniform draws are in [0, 1)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit_uniform(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
