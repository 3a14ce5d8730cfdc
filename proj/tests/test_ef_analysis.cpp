#include "doctest.h"

#include "efpoly/ef_analysis.hpp"
#include "efpoly/errors.hpp"
#include "efpoly/lp.hpp"
#include "efpoly/model_gen.hpp"
#include "efpoly/polyhedron.hpp"
#include "efpoly/random_models.hpp"
#include "efpoly/redundancy.hpp"
#include "efpoly/worked_examples.hpp"

using namespace efpoly;

namespace {

HPoly unit_square(const std::string& cls) {
  return HPoly(VarSpace::of_class(cls, 2),
               {{{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::LessEq, 1}, {{0, -1}, Sense::LessEq, 0}});
}

// Reference W for the coupled pair, over (x, w, u).
HPoly expected_w() {
  const VarSpace s = VarSpace::of_class("x", 2).concat(VarSpace::of_class("w", 3)).concat(VarSpace::of_class("u", 2));
  std::vector<Constraint> rows = {
      {{14, 7, 0, 0, 0, 0, 0}, Sense::LessEq, 42},
      {{-1, 2, 5, -6, 7, -1, 0}, Sense::LessEq, 0},
      {{3, -4, -10, 9, -8, 0, -1}, Sense::LessEq, 0},
      {{0, 0, 36, -2, 0, 0, 0}, Sense::LessEq, 46},
      {{0, 0, Rational(59, 2), 0, Rational(1, 2), 0, 0}, Sense::LessEq, 42},
  };
  for (std::size_t j = 0; j < 7; ++j) {
    RatVector e(7);
    e[j] = -1;
    rows.push_back({e, Sense::LessEq, 0});
  }
  return HPoly(s, rows);
}

}  // namespace

TEST_CASE("independent_spaces examples") {
  CHECK(independent_spaces(indep_p(), indep_q()));
  const HPoly w = construct_mutual_augmentation(coupled_p1(), coupled_p2(), coupled_spec());
  CHECK_FALSE(independent_spaces(coupled_p1(), w));
  CHECK(independent_spaces(gen_mst_edmonds(3).poly, gen_mst_martin_reduced(3)));
  CHECK_FALSE(independent_spaces(gen_mst_edmonds(3).poly, gen_mst_martin(3)));
  CHECK(independent_spaces(enumerate_vertices(indep_p()), indep_q()));
  // an empty side skips the projection cross-check
  HPoly empty(VarSpace::of_class("z", 1), {{{1}, Sense::LessEq, -1}, {{-1}, Sense::LessEq, 0}});
  CHECK(independent_spaces(empty, indep_p()));
}

TEST_CASE("check_augmentation examples") {
  Rng rng(17);
  const BlockInstance inst = random_block_instance(rng);
  auto good = check_augmentation(inst.x, inst.k1);
  CHECK(good.holds);
  CHECK(good.reason == AugmentationCheck::Reason::Holds);

  auto missing = check_augmentation(inst.y, inst.k1);
  CHECK_FALSE(missing.holds);
  CHECK(missing.reason == AugmentationCheck::Reason::NotByConstruction);

  auto cut = check_augmentation(inst.l, inst.k1);
  CHECK_FALSE(cut.holds);
  REQUIRE(cut.reason == AugmentationCheck::Reason::CutsBase);
  CHECK(contains(inst.l, cut.witness));
  CHECK_FALSE(contains(inst.k1, cut.witness));

  // base plus one strictly cutting row
  const HPoly sq = unit_square("x");
  const HPoly lifted = sq.embed(VarSpace::of_class("x", 2).concat(VarSpace::of_class("v", 1)));
  const HPoly cutting = lifted.with_rows({{{1, 1, 0}, Sense::LessEq, 1}});
  auto c2 = check_augmentation(sq, cutting);
  REQUIRE(c2.reason == AugmentationCheck::Reason::CutsBase);
  CHECK(contains(sq, c2.witness));
  CHECK(c2.witness[0] + c2.witness[1] > Rational(1));

  // rows may come back scaled by a positive factor, never a negative one
  const HPoly scaled = HPoly(sq.space(), {{{2, 0}, Sense::LessEq, 2}, {{-1, 0}, Sense::LessEq, 0},
                                          {{0, 3}, Sense::LessEq, 3}, {{0, -1}, Sense::LessEq, 0}});
  CHECK(check_augmentation(sq, scaled).holds);
  const HPoly flipped = HPoly(sq.space(), {{{-1, 0}, Sense::GreaterEq, -1}, {{-1, 0}, Sense::LessEq, 0},
                                           {{0, 1}, Sense::LessEq, 1}, {{0, -1}, Sense::LessEq, 0}});
  CHECK(check_augmentation(sq, flipped).holds);  // >= is stored as the same <= row

  HPoly empty(VarSpace::of_class("x", 1), {{{1}, Sense::LessEq, -1}, {{-1}, Sense::LessEq, 0}});
  CHECK_THROWS_AS(check_augmentation(empty, empty), EmptyPolyhedron);
}

TEST_CASE("construct_mutual_augmentation reproduces the reference W") {
  const HPoly w = construct_mutual_augmentation(coupled_p1(), coupled_p2(), coupled_spec());
  CHECK(w == expected_w());
  CHECK(check_augmentation(coupled_p1(), w).holds);
  CHECK(check_augmentation(coupled_p2(), w).holds);
  CHECK(check_ef(coupled_p1(), w, 1).def1 == true);
  CHECK(check_ef(coupled_p2(), w, 1).def1 == true);
}

TEST_CASE("construct_mutual_augmentation: zero coupling is a product") {
  const HPoly p1 = coupled_p1(), p2 = coupled_p2();
  AugmentationSpec spec{RatMatrix(1, 2), RatMatrix(1, 3), RatMatrix::identity(3), RatMatrix::identity(5)};
  const HPoly w = construct_mutual_augmentation(p1, p2, spec);
  const VarSpace s = w.space();
  HPoly product = p1.embed(s).with_rows(p2.embed(s).rows()).with_rows({{{0, 0, 0, 0, 0, -1}, Sense::LessEq, 0}});
  CHECK(poly_equal(w, product));
}

TEST_CASE("construct_mutual_augmentation: random coupling of two unit squares") {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const HPoly a = unit_square("x"), b = unit_square("y");
    const auto q = static_cast<std::size_t>(rng.integer(1, 3));
    CHECK_NOTHROW(construct_mutual_augmentation(a, b, random_augmentation_spec(rng, a, b, q)));
  }
}

TEST_CASE("construct_mutual_augmentation errors") {
  const HPoly p1 = coupled_p1(), p2 = coupled_p2();
  AugmentationSpec spec = coupled_spec();
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, p1, spec), PreconditionViolation);
  HPoly empty(VarSpace::of_class("w", 3), {{{1, 0, 0}, Sense::LessEq, -1}, {{-1, 0, 0}, Sense::LessEq, 0}});
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, empty, spec), EmptyPolyhedron);

  AugmentationSpec neg = spec;
  neg.c1 = RatMatrix::from_rows({{-7}});
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, p2, neg), PreconditionViolation);
  AugmentationSpec offdiag = spec;
  offdiag.c2 = RatMatrix::from_rows({{2, 1}, {0, 1}});
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, p2, offdiag), PreconditionViolation);
  AugmentationSpec wrong = spec;
  wrong.c1 = RatMatrix::identity(2);
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, p2, wrong), DimensionMismatch);
  AugmentationSpec narrow = spec;
  narrow.b1 = RatMatrix(2, 3);
  CHECK_THROWS_AS(construct_mutual_augmentation(p1, p2, narrow), DimensionMismatch);
}

TEST_CASE("check_ef on the independent pair") {
  auto d1 = check_ef(indep_p(), indep_q_lifted(), 1);
  CHECK(d1.def1 == false);
  REQUIRE(d1.projection);
  CHECK(d1.projection->describe() == "FullSpace(2)");

  auto d2 = check_ef(indep_p(), indep_q(), 2, indep_map());
  CHECK(d2.holds(2));
  CHECK(*d2.def2 == indep_map());

  auto d3 = check_ef(indep_p(), indep_q(), 3);
  CHECK(d3.def3 == false);
  CHECK_FALSE(contains(indep_p(), d3.counterexample));

  // VPoly target, and a map that does not work
  CHECK(check_ef(enumerate_vertices(indep_p()), indep_q(), 2, indep_map()).holds(2));
  AffineMapSpec bad(VarSpace::of_class("y", 2), VarSpace::of_class("x", 2), RatMatrix::identity(2));
  auto d2b = check_ef(indep_p(), indep_q(), 2, bad);
  CHECK(d2b.def2_checked);
  CHECK_FALSE(d2b.holds(2));
}

TEST_CASE("check_ef errors") {
  CHECK_THROWS_AS(check_ef(indep_p(), indep_q(), 2), PreconditionViolation);
  CHECK_THROWS_AS(check_ef(indep_p(), indep_q(), 4), PreconditionViolation);
  HPoly ray(VarSpace::of_class("y", 2), {{{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::Equal, 0}});
  CHECK_THROWS_AS(check_ef(indep_p(), ray, 2, indep_map()), UnboundedPolyhedron);
  AffineMapSpec wrong(VarSpace::of_class("z", 2), VarSpace::of_class("x", 2), RatMatrix::identity(2));
  CHECK_THROWS_AS(check_ef(indep_p(), indep_q(), 2, wrong), DimensionMismatch);
}

TEST_CASE("check_ef on overlapping spaces: all three definitions agree") {
  const HPoly w = construct_mutual_augmentation(coupled_p1(), coupled_p2(), coupled_spec());
  for (int d : {1, 3}) CHECK(check_ef(coupled_p1(), w, d).holds(d));
  // W itself is unbounded in u, so definition 2 cannot be evaluated on it
  RatMatrix pick(2, 7);
  pick(0, 0) = 1;
  pick(1, 1) = 1;
  CHECK_THROWS_AS(check_ef(coupled_p1(), w, 2, AffineMapSpec(w.space(), coupled_p1().space(), pick)),
                  UnboundedPolyhedron);

  // a bounded lift: the coordinate projection is a definition-2 witness
  Rng rng(12);
  auto [p1, p2] = random_lifted_pair(rng, true);
  RatMatrix coord(p1.dim(), p2.dim());
  for (std::size_t j = 0; j < p1.dim(); ++j) coord(j, j) = 1;
  for (int d : {1, 3}) CHECK(check_ef(p1, p2, d).holds(d));
  CHECK(check_ef(p1, p2, 2, AffineMapSpec(p2.space(), p1.space(), coord)).holds(2));

  // a strictly smaller lift: def 1 and def 3 both reject
  const HPoly smaller = w.with_rows({{{1, 0, 0, 0, 0, 0, 0}, Sense::LessEq, 1}});
  auto v1 = check_ef(coupled_p1(), smaller, 1);
  auto v3 = check_ef(coupled_p1(), smaller, 3);
  CHECK(v1.def1 == false);
  CHECK(v3.def3 == false);
  CHECK(contains(coupled_p1(), v3.counterexample));
  CHECK(v3.counterexample[0] > Rational(1));
}

TEST_CASE("classify_relationship examples") {
  auto ill = classify_relationship(indep_p(), indep_q(), {indep_map()});
  CHECK(ill.tag == RelationTag::IllDefined);
  CHECK(ill.q_of_p.def2.has_value());
  CHECK(ill.q_of_p.def1 == false);
  CHECK(ill.q_of_p.def3 == false);

  Rng rng(5);
  const BlockInstance inst = random_block_instance(rng);
  auto wd = classify_relationship(inst.x, inst.k1, {});
  CHECK(wd.tag == RelationTag::WellDefinedEF);
  CHECK(wd.caveat.empty());

  auto none = classify_relationship(unit_square("x"), unit_square("y"), {});
  CHECK(none.tag == RelationTag::NoRelation);
  CHECK_FALSE(none.caveat.empty());

  // a witness in the reverse direction counts too
  AffineMapSpec back(VarSpace::of_class("x", 2), VarSpace::of_class("y", 2), RatMatrix::from_rows({{1, 0}, {0, 0}}));
  const HPoly seg(VarSpace::of_class("y", 2), {{{1, 0}, Sense::LessEq, 1}, {{-1, 0}, Sense::LessEq, 0}, {{0, 1}, Sense::Equal, 0}});
  CHECK(classify_relationship(seg, unit_square("x"), {back}).tag == RelationTag::IllDefined);
  auto rev = classify_relationship(unit_square("x"), seg, {back});
  CHECK(rev.tag == RelationTag::IllDefined);
  CHECK(rev.p_of_q.def2.has_value());
  AffineMapSpec id(VarSpace::of_class("x", 2), VarSpace::of_class("y", 2), RatMatrix::identity(2));
  CHECK(classify_relationship(seg, unit_square("x"), {id}).tag == RelationTag::NoRelation);
}

TEST_CASE("overlap_augmentation_invariance examples") {
  Rng rng(77);
  auto [p1, p2] = random_lifted_pair(rng, true);
  CHECK(check_ef(p1, p2, 1).def1 == true);
  // p3 = p2 plus a redundant row
  const HPoly p3 = p2.with_rows({p2.row(p2.num_rows() - 1)});
  CHECK(overlap_augmentation_invariance(p1, p2, p3));
  CHECK(overlap_augmentation_invariance(p1, p2, random_augmentation(rng, p2, "v", 2)));

  auto [q1, q2] = random_lifted_pair(rng, false);
  CHECK(overlap_augmentation_invariance(q1, q2, random_augmentation(rng, q2, "v", 1)));

  CHECK_THROWS_AS(overlap_augmentation_invariance(unit_square("z"), p2, p3), PreconditionViolation);
  const HPoly cut = p2.with_rows({{RatVector(p2.dim(), 0), Sense::LessEq, -1}});
  CHECK_THROWS_AS(overlap_augmentation_invariance(p1, p2, cut), PreconditionViolation);
}

TEST_CASE("random augmentations are augmentations") {
  Rng rng(90);
  for (int t = 0; t < 15; ++t) {
    const HPoly base = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), 2);
    const HPoly aug = random_augmentation(rng, base, "v", static_cast<std::size_t>(rng.integer(1, 2)));
    CHECK(check_augmentation(base, aug).holds);
  }
}

TEST_CASE("independent pairs never extend each other under definitions 1 and 3") {
  Rng rng(2024);
  for (int t = 0; t < 15; ++t) {
    const HPoly x = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), 2, "x");
    const HPoly w = random_polytope(rng, static_cast<std::size_t>(rng.integer(1, 3)), 2, "w");
    CHECK(independent_spaces(x, w));
    for (const auto& [target, cand] : {std::pair{x, w}, std::pair{w, x}}) {
      auto v1 = check_ef(target, cand, 1);
      CHECK(v1.projection->is_full_space());
      CHECK(v1.def1 == false);
      auto v3 = check_ef(target, cand, 3);
      CHECK(v3.def3 == false);
      CHECK_FALSE(contains(target, v3.counterexample));
    }
  }
}

TEST_CASE("definitions 1 and 3 agree on minimal lifts with a nonzero target block") {
  Rng rng(606);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const auto p = static_cast<std::size_t>(rng.integer(1, 2));
    const auto q = static_cast<std::size_t>(rng.integer(1, 2));
    const HPoly joint = remove_row_redundancy(random_polytope(rng, p + q, 3, "t"));
    const VarSpace s = VarSpace::of_class("x", p).concat(VarSpace::of_class("u", q));
    const HPoly cand(s, joint.a(), joint.b(), joint.senses());
    if (cand.block(s.positions_of_classes({"x"})).is_zero() || !redundancy_report(cand).minimal) continue;
    ++checked;
    const HPoly target = rng.coin() ? project(cand, {"x"}).poly : random_polytope(rng, p, 1, "x");
    const bool d1 = *check_ef(target, cand, 1).def1;
    CHECK(d1 == *check_ef(target, cand, 3).def3);
  }
  CHECK(checked >= 10);
}
