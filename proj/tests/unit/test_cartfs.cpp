#include <doctest.h>

#include <algorithm>

#include "fibcat/error.hpp"
#include "fibcat/pullback.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace testing;

namespace {

// Object x is injective when every extension problem along a left map has
// exactly one solution. Scans the raw table.
bool oracle_injective(const ClassPair& cp, ObjId x) {
  const Category& c = *cp.carrier;
  for (MorId e = 0; e < c.morphism_count(); ++e) {
    if (!cp.left.contains(e)) continue;
    for (MorId g = 0; g < c.morphism_count(); ++g) {
      if (c.source(g) != c.source(e) || c.target(g) != x) continue;
      int n = 0;
      for (MorId d = 0; d < c.morphism_count(); ++d)
        if (c.source(d) == c.target(e) && c.target(d) == x && c.compose(d, e) == g) ++n;
      if (n != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("trivial systems are cartesian") {
  for (CategoryPtr c : {builders::walking_arrow(), builders::walking_isomorphism(), builders::finite_sets(2)}) {
    CHECK_NOTHROW(cartesian(ClassPair::iso_all(c)));
    CHECK_NOTHROW(cartesian(ClassPair::all_iso(c)));
  }
}

TEST_CASE("stability witnesses are pullbacks with the promised classes") {
  ArrowFixture fx = arrow_fixture();
  CartesianFS cfs = cartesian(fx.declared);
  const Category& c = cfs.carrier();
  CHECK_FALSE(cfs.stability_witnesses().empty());
  for (const auto& [key, sq] : cfs.stability_witnesses()) {
    auto [e, m] = key;
    CHECK(is_pullback(c, m, e, sq));
    CHECK(cfs.left(sq.p1));
    CHECK(cfs.right(sq.p2));
  }
  CHECK_THROWS_AS(cfs.stability_witness(mor(c, "f01>f12_0:f01,f12_0"), c.identity(0)), Error);
}

TEST_CASE("left-left/right-right squares are pullbacks") {
  ArrowFixture fx = arrow_fixture();
  CartesianFS cfs = cartesian(fx.declared);
  Report r = check_lr_squares_are_pullbacks(cfs);
  CHECK(r.verdict);
  // Regression baseline from the first verified run.
  CHECK(r.count_of("squares") == 703);

  // Independent recount; every such square passes the cone oracle.
  const Category& c = cfs.carrier();
  const ClassPair& cp = fx.declared;
  std::int64_t squares = 0, pullbacks = 0;
  for (MorId e1 = 0; e1 < c.morphism_count(); ++e1) {
    if (!cp.left.contains(e1)) continue;
    for (MorId m1 = 0; m1 < c.morphism_count(); ++m1) {
      if (!cp.right.contains(m1) || c.source(m1) != c.source(e1)) continue;
      for (MorId e2 = 0; e2 < c.morphism_count(); ++e2) {
        if (!cp.left.contains(e2) || c.source(e2) != c.target(m1)) continue;
        for (MorId m2 = 0; m2 < c.morphism_count(); ++m2) {
          if (!cp.right.contains(m2) || c.source(m2) != c.target(e1) || c.target(m2) != c.target(e2)) continue;
          if (c.compose(e2, m1) != c.compose(m2, e1)) continue;
          ++squares;
          if (oracle_pullback_square(c, e1, e2, m1, m2)) ++pullbacks;
        }
      }
    }
  }
  CHECK(squares == 703);
  CHECK(pullbacks == squares);

  CartesianFS trivial = cartesian(ClassPair::iso_all(builders::walking_arrow()));
  Report t = check_lr_squares_are_pullbacks(trivial);
  CHECK(t.verdict);
  CHECK(t.count_of("squares") > 0);
}

TEST_CASE("injective objects") {
  CategoryPtr sets = builders::finite_sets(2);
  auto iso_all = ClassPair::iso_all(sets);
  CHECK(injective_objects(iso_all) == std::vector<ObjId>{0, 1, 2});

  CategoryPtr two = builders::walking_arrow();
  CHECK(injective_objects(ClassPair::all_iso(two)) == std::vector<ObjId>{obj(*two, "b")});

  ArrowFixture fx = arrow_fixture();
  const Category& c = *fx.arrows.category;
  std::vector<ObjId> inj = injective_objects(fx.declared);
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const bool listed = std::find(inj.begin(), inj.end(), x) != inj.end();
    CHECK(listed == oracle_injective(fx.declared, x));
    // Exactly the arrows isomorphic to identities, i.e. the bijections.
    CHECK(listed == oracle_iso(*fx.sets, fx.arrows.arrow_of_object[x]));
  }
  CHECK(inj.size() == 4);
}

TEST_CASE("replacements") {
  CategoryPtr sets = builders::finite_sets(2);
  InjectivesReport a = enough_injectives(ClassPair::iso_all(sets));
  CHECK(a.total());
  for (ObjId x = 0; x < sets->object_count(); ++x) CHECK(*a.replacement[x] == sets->identity(x));

  ArrowFixture fx = arrow_fixture();
  const Category& c = *fx.arrows.category;
  const Category& base = *fx.sets;
  InjectivesReport r = enough_injectives(fx.declared);
  REQUIRE(r.total());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    MorId rx = *r.replacement[x];
    CHECK(fx.declared.left.contains(rx));
    MorId p = fx.arrows.arrow_of_object[x];
    MorId target_arrow = fx.arrows.arrow_of_object[c.target(rx)];
    if (oracle_iso(base, p)) {
      CHECK(c.is_identity(rx));
    } else {
      // The vertical square into id_{S_b}.
      CHECK(target_arrow == base.identity(base.target(p)));
      CHECK(base.is_identity(fx.arrows.square[rx].second));
    }
  }
}

TEST_CASE("no injectives on the parallel pair under (All, Iso)") {
  CategoryPtr pair = builders::parallel_pair();
  ClassPair cp = ClassPair::all_iso(pair);
  CHECK(injective_objects(cp).empty());
  InjectivesReport r = enough_injectives(cp);
  CHECK(r.lacking == std::vector<ObjId>{0, 1});
  Report refl = check_reflective(cartesian(cp));
  CHECK(refl.verdict);  // both sides fail together
}

TEST_CASE("injective lemmas and reflectivity") {
  ArrowFixture fx = arrow_fixture();
  CartesianFS cfs = cartesian(fx.declared);
  CHECK(lemma_injectives(cfs).verdict);
  CHECK(check_reflective(cfs).verdict);
  CartesianFS sets = cartesian(ClassPair::iso_all(builders::finite_sets(2)));
  CHECK(lemma_injectives(sets).verdict);
  CHECK(check_reflective(sets).verdict);
}

TEST_CASE("dropping a map between injectives breaks the first lemma") {
  ArrowFixture fx = arrow_fixture();
  const Category& c = *fx.arrows.category;
  ClassPair mutated = fx.declared;
  MorId dropped = mor(c, "id0>id1:f01,f01");
  mutated.right.erase(dropped);
  Report r = lemma_injectives(mutated);
  CHECK_FALSE(r.verdict);
  const Report* between = r.find("maps-between-injectives-are-right");
  REQUIRE(between);
  CHECK(between->witnesses == std::vector<std::string>{"id0>id1:f01,f01"});
}
