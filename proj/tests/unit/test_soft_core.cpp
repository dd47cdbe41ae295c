#include <doctest.h>

#include <cmath>
#include <functional>

#include "softhybrid/error.hpp"
#include "softhybrid/measures.hpp"
#include "softhybrid/oracle.hpp"
#include "softhybrid/soft_set.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace softhybrid;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("universe and parameter space validation") {
  CHECK_THROWS_AS(Universe({"x1", "x1"}), Error);
  CHECK_THROWS_AS(ParameterSpace({"e1", ""}), Error);
  Universe u({"x1", "x2"});
  CHECK(u.size() == 2);
  CHECK(u.find("x2") == Index{1});
  CHECK(!u.find("x9"));
}

TEST_CASE("grade validation clamps inside tolerance and rejects outside") {
  CHECK(checked_grade(1.0 + 1e-10, "g") == 1.0);
  CHECK(checked_grade(-1e-10, "g") == 0.0);
  CHECK(checked_grade(0.5, "g") == 0.5);
  CHECK_THROWS_AS(checked_grade(1.2, "g"), Error);
  CHECK_THROWS_AS(checked_grade(-0.1, "g"), Error);
  CHECK_THROWS_AS(checked_grade(std::nan(""), "g"), Error);
}

TEST_CASE("make_set validates labels, variants and support") {
  UniversePtr u = fixtures::classic_universe();
  PSpacePtr p = fixtures::classic_pspace();

  SUBCASE("valid soft set") {
    SoftHybridSet s = make_set(Variant::soft, {{"e1", 1}, {"e2", 1}, {"e4", 1}},
                               {{"e1", {{"x3", 1}, {"x4", 1}}},
                                {"e2", {{"x1", 1}}},
                                {"e4", {{"x2", 1}, {"x4", 1}}}},
                               u, p);
    CHECK(s.param_grade(0) == 1.0);
    CHECK(s.value_grade(0, 2) == 1.0);
    CHECK(s.value_grade(0, 0) == 0.0);
  }
  SUBCASE("soft variant rejects fuzzy value grades") {
    CHECK(kind_of([&] {
            make_set(Variant::soft, {{"e1", 1}}, {{"e1", {{"x1", 0.5}}}}, u, p);
          }) == ErrorKind::VariantViolation);
  }
  SUBCASE("fuzzy-soft variant rejects fuzzy parameter grades") {
    CHECK(kind_of([&] {
            make_set(Variant::fuzzy_soft, {{"e1", 0.4}}, {}, u, p);
          }) == ErrorKind::VariantViolation);
  }
  SUBCASE("value set at zero-grade parameter is a support violation") {
    CHECK(kind_of([&] {
            make_set(Variant::fpfs, {{"e2", 0.0}}, {{"e2", {{"x1", 1}}}}, u, p);
          }) == ErrorKind::SupportViolation);
  }
  SUBCASE("unknown labels") {
    CHECK(kind_of([&] { make_set(Variant::fpfs, {{"e9", 1}}, {}, u, p); }) ==
          ErrorKind::UnknownLabel);
    CHECK(kind_of([&] {
            make_set(Variant::fpfs, {{"e1", 1}}, {{"e1", {{"x9", 1}}}}, u, p);
          }) == ErrorKind::UnknownLabel);
  }
  SUBCASE("grade out of range names the coordinate") {
    try {
      make_set(Variant::fpfs, {{"e1", 1}}, {{"e1", {{"x1", 1.2}}}}, u, p);
      FAIL("expected GradeOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GradeOutOfRange);
      CHECK(std::string(e.what()).find("x1") != std::string::npos);
    }
  }
  SUBCASE("explicit zeros are dropped, empty value set at supported parameter ok") {
    SoftHybridSet s = make_set(Variant::fpfs, {{"e1", 0.4}, {"e2", 0.0}},
                               {{"e1", {{"x1", 0.0}}}}, u, p);
    CHECK(s.param_grades().size() == 1);
    CHECK(s.value_grades().empty());
  }
}

TEST_CASE("absolute and null") {
  UniversePtr u = fixtures::classic_universe();
  PSpacePtr p = fixtures::classic_pspace();
  SoftHybridSet abs = absolute(u, p, Variant::soft);
  SoftHybridSet nil = null_set(u, p, Variant::soft);

  CHECK(pair_eq(cardinality(abs), {4, 20}));
  CHECK(pair_eq(cardinality(nil), {0, 0}));
  CHECK(equals(nil, complement(abs)));
  CHECK(equals(abs, complement(nil)));
  CHECK(nil.is_null());
}

TEST_CASE("complement uses grid semantics on both coordinates") {
  auto u = std::make_shared<const Universe>(std::vector<std::string>{"x1"});
  auto p = std::make_shared<const ParameterSpace>(std::vector<std::string>{"e1", "e2"});
  SoftHybridSet s = make_set(Variant::fpfs, {{"e1", 0.4}}, {}, u, p);
  SoftHybridSet c = complement(s);
  CHECK(c.param_grade(0) == doctest::Approx(0.6));
  CHECK(c.param_grade(1) == 1.0);
  // the empty value layer complements to the full grid
  CHECK(c.value_grade(0, 0) == 1.0);
  CHECK(c.value_grade(1, 0) == 1.0);
}

TEST_CASE("complement keeps value rows at parameters that lose their grade") {
  UniversePtr u = fixtures::classic_universe();
  PSpacePtr p = fixtures::classic_pspace();
  SoftHybridSet s = fixtures::example_workspace().at("F_A_s");
  SoftHybridSet c = complement(s);
  // e1 had grade 1: the complement grade is 0 but the complemented values stay
  CHECK(c.param_grade(0) == 0.0);
  CHECK(c.value_grade(0, 0) == 1.0);  // x1 was absent
  CHECK(c.value_grade(0, 2) == 0.0);  // x3 was present
  CHECK(equals(complement(c), s));
}

TEST_CASE("involution holds for random sets of every variant") {
  for (std::size_t k = 0; k < 400; ++k) {
    SoftHybridSet s = generators::any_set(11, k);
    CHECK(equals(complement(complement(s)), s));
  }
}

TEST_CASE("union and intersection fixtures") {
  Workspace ws = fixtures::example_workspace();
  const SoftHybridSet& f = ws.at("F_A_fs");
  const SoftHybridSet& g = ws.at("G_B_fs");

  SoftHybridSet inter = intersection_of(f, g);
  auto e2 = ws.pspace()->find("e2");
  REQUIRE(e2);
  CHECK(inter.value_grade(*e2, 0) == doctest::Approx(0.1));  // x1
  CHECK(inter.value_grade(*e2, 2) == 0.0);                   // x3 dropped
  CHECK(inter.value_grade(*e2, 3) == doctest::Approx(0.3));  // x4

  SoftHybridSet nil = null_set(ws.universe(), ws.pspace());
  CHECK(equals(union_of(f, nil), f));

  const SoftHybridSet& a = ws.at("F_A_fpfs");
  const SoftHybridSet& b = ws.at("G_B_fpfs");
  CardinalPair lhs = pair_add(cardinality(union_of(a, b)),
                              cardinality(intersection_of(a, b)));
  CardinalPair rhs = pair_add(CardinalPair{0.6, 1.5}, CardinalPair{1.2, 1.5});
  CHECK(pair_eq(lhs, rhs));
  CHECK(pair_eq(pair_add(cardinality(a), cardinality(b)), rhs));
}

TEST_CASE("union and intersection variants join to the least constrained") {
  Workspace ws = fixtures::example_workspace();
  CHECK(union_of(ws.at("F_A_s"), ws.at("G_B_s")).variant() == Variant::soft);
  CHECK(union_of(ws.at("F_A_fs"), ws.at("G_B_s")).variant() == Variant::fuzzy_soft);
  CHECK(union_of(ws.at("F_A_fs"), ws.at("F_A_fps")).variant() == Variant::fpfs);
  CHECK(intersection_of(ws.at("F_A_fps"), ws.at("G_B_s")).variant() ==
        Variant::fp_soft);
}

TEST_CASE("mixed spaces are rejected") {
  Workspace ws = fixtures::example_workspace();
  auto u2 = std::make_shared<const Universe>(std::vector<std::string>{"y1"});
  auto p2 = std::make_shared<const ParameterSpace>(std::vector<std::string>{"d1"});
  SoftHybridSet other = make_set(Variant::fpfs, {{"d1", 0.5}}, {}, u2, p2);
  CHECK_THROWS_AS(union_of(ws.at("F_A_s"), other), Error);
  CHECK_THROWS_AS(similarity(ws.at("F_A_s"), other), Error);
  CHECK_THROWS_AS(is_subset(ws.at("F_A_s"), other), Error);
}

TEST_CASE("products live over the support product space") {
  Workspace ws = fixtures::example_workspace();
  const SoftHybridSet& f = ws.at("F_A_fps");  // support {e2,e3,e4}
  const SoftHybridSet& g = ws.at("G_B_fps");  // support {e1,e2,e3}

  SoftHybridSet v = or_product(f, g);
  CHECK(v.pspace().size() == 9);
  CHECK(v.pspace().param(0) == "(e2,e1)");
  CHECK(v.pspace().param(8) == "(e4,e3)");

  SUBCASE("and_product with the absolute set replicates the left value sets") {
    SoftHybridSet abs = absolute(ws.universe(), ws.pspace());
    SoftHybridSet prod = and_product(f, abs);
    // every (e,t) row equals f's row at e
    CHECK(prod.pspace().size() == 3 * 4);
    for (Index row = 0; row < 4; ++row) {
      for (Index x = 0; x < 5; ++x) {
        auto e2 = *ws.pspace()->find("e2");
        CHECK(prod.value_grade(row, x) == f.value_grade(e2, x));
      }
    }
  }

  SUBCASE("reduce_left equals and_product with the absolute restricted to the right support") {
    std::map<std::string, double> params;
    std::map<std::string, std::map<std::string, double>> values;
    for (const auto& [e, grade] : g.param_grades()) {
      std::string label = ws.pspace()->param(e);
      params[label] = 1.0;
      for (const auto& item : ws.universe()->items()) values[label][item] = 1.0;
    }
    SoftHybridSet restricted =
        make_set(Variant::fpfs, params, values, ws.universe(), ws.pspace());
    CHECK(equals(reduce_left(f, g), and_product(f, restricted)));
  }

  SUBCASE("intersection of the two reductions is the and-product") {
    CHECK(equals(intersection_of(reduce_left(f, g), reduce_right(f, g)),
                 and_product(f, g)));
  }

  SUBCASE("reduction multiplies the value-side cardinality by the other support") {
    CardinalPair base = cardinality(f);
    CardinalPair red = cardinality(reduce_left(f, g));
    CHECK(red.b == doctest::Approx(base.b * 3.0));
  }
}

TEST_CASE("products with a null operand live over an empty product space") {
  Workspace ws = fixtures::example_workspace();
  SoftHybridSet nil = null_set(ws.universe(), ws.pspace());
  const SoftHybridSet& f = ws.at("F_A_fpfs");

  SoftHybridSet a = and_product(f, nil);
  CHECK(a.pspace().size() == 0);
  CHECK(a.is_null());
  CHECK(pair_eq(cardinality(a), {0, 0}));
  CHECK(pair_eq(depth(a), {0, 0}));
  MeasurePair e = entropy(a, EvaluationDomain::grid);
  CHECK(e.p == 0.0);
  CHECK(e.v == 0.0);

  CardinalPair lhs = pair_add(cardinality(or_product(f, nil)),
                              cardinality(and_product(f, nil)));
  CardinalPair rhs = pair_add(cardinality(reduce_left(f, nil)),
                              cardinality(reduce_right(f, nil)));
  CHECK(pair_eq(lhs, rhs));
}

TEST_CASE("subset and equality") {
  Workspace ws = fixtures::example_workspace();
  CHECK(is_subset(ws.at("F_A_s"), ws.at("G_B_s")));
  CHECK(!is_subset(ws.at("F_A_fs"), ws.at("G_B_fs")));  // 0.8 at (e2,x3) vs 0
  SoftHybridSet nil = null_set(ws.universe(), ws.pspace());
  for (const auto& [name, s] : ws.sets()) {
    CHECK(is_subset(nil, s));
  }
  CHECK(equals(ws.at("F_A_s"), ws.at("F_A_s")));
  CHECK(!equals(ws.at("F_A_s"), ws.at("G_B_s")));
}

TEST_CASE("pair arithmetic and partial order") {
  CHECK(pair_eq(pair_add({1, 2}, {3, 4}), {4, 6}));
  CHECK(pair_leq({3, 5}, {4, 20}));
  CHECK(!pair_leq({3, 5}, {2, 9}));
  CHECK(!pair_leq({2, 9}, {3, 5}));
  CHECK(pair_eq({0.1 + 0.2, 1}, {0.3, 1}));
}

TEST_CASE("lattice laws hold for random pairs") {
  for (std::size_t k = 0; k < 200; ++k) {
    auto [s, t] = generators::any_pair(23, k);
    SoftHybridSet r = generators::any_set(29, k);

    CHECK(equals(union_of(s, t), union_of(t, s)));
    CHECK(equals(intersection_of(s, t), intersection_of(t, s)));
    CHECK(equals(union_of(s, s), s));
    CHECK(equals(intersection_of(s, s), s));
    CHECK(equals(union_of(s, intersection_of(s, t)), s));
    CHECK(equals(intersection_of(s, union_of(s, t)), s));
    if (r.same_spaces(s)) {
      CHECK(equals(union_of(union_of(s, t), r), union_of(s, union_of(t, r))));
      CHECK(equals(intersection_of(intersection_of(s, t), r),
                   intersection_of(s, intersection_of(t, r))));
    }
  }
}

TEST_CASE("cardinality is monotone under inclusion") {
  for (std::size_t k = 0; k < 300; ++k) {
    SoftHybridSet t = generators::any_set(31, k);
    SoftHybridSet s = generators::subset_of(1000 + k, t);
    REQUIRE(is_subset(s, t));
    CHECK(pair_leq(cardinality(s), cardinality(t)));
    // mirrored statement for complements: T <= S implies S^c <= T^c
    CHECK(is_subset(complement(t), complement(s)));
    CHECK(pair_leq(cardinality(complement(t)), cardinality(complement(s))));
  }
}

TEST_CASE("two distinct soft sets can share a cardinality pair") {
  auto u = std::make_shared<const Universe>(std::vector<std::string>{"x1", "x2", "x3"});
  auto p = std::make_shared<const ParameterSpace>(std::vector<std::string>{"e1", "e2"});
  SoftHybridSet s1 = make_set(Variant::soft, {{"e1", 1}, {"e2", 1}},
                              {{"e1", {{"x1", 1}, {"x2", 1}}}, {"e2", {{"x3", 1}}}},
                              u, p);
  SoftHybridSet s2 = make_set(Variant::soft, {{"e1", 1}, {"e2", 1}},
                              {{"e1", {{"x1", 1}}}, {"e2", {{"x2", 1}, {"x3", 1}}}},
                              u, p);
  CHECK(pair_eq(cardinality(s1), {2, 3}));
  CHECK(pair_eq(cardinality(s2), {2, 3}));
  CHECK(!equals(s1, s2));
}

TEST_CASE("cardinality modularity for unions, intersections and products") {
  for (std::size_t k = 0; k < 300; ++k) {
    auto [s, t] = generators::any_pair(37, k);
    auto rep1 = oracle::check_identity("cardinality-modularity", {s, t});
    CHECK(rep1.holds);
    auto rep2 = oracle::check_identity("cardinality-modularity-complement", {s, t});
    CHECK(rep2.holds);
    auto rep3 = oracle::check_identity("product-modularity", {s, t});
    CHECK(rep3.holds);
    auto rep4 = oracle::check_identity("product-modularity-complement", {s, t});
    CHECK(rep4.holds);
  }
}

TEST_CASE("null characterization and cardinality bound") {
  UniversePtr u = fixtures::classic_universe();
  PSpacePtr p = fixtures::classic_pspace();
  for (std::size_t k = 0; k < 300; ++k) {
    SoftHybridSet s = generators::any_set(41, k);
    CardinalPair c = cardinality(s);
    bool zero = std::abs(c.a) <= kTol && std::abs(c.b) <= kTol;
    CHECK(zero == equals(s, null_set(s.universe_ptr(), s.pspace_ptr())));
    double m = double(s.param_count());
    CHECK(pair_leq(c, {m, m * double(s.item_count())}));
  }
  CHECK(pair_eq(cardinality(null_set(u, p)), {0, 0}));
}
