#include <doctest.h>

#include "fibcat/error.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/pullback.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace testing;

namespace {

CategoryDescription two_description() {
  CategoryDescription d;
  d.objects = {"a", "b"};
  d.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}};
  d.identities = {{"a", "id_a"}, {"b", "id_b"}};
  d.compose = {{"id_a", "id_a", "id_a"}, {"id_b", "id_b", "id_b"}, {"u", "id_a", "u"}, {"id_b", "u", "u"}};
  return d;
}

template <class F>
Error caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorKind::InternalConsistency, "unreachable");
}

}  // namespace

TEST_CASE("terminal and walking arrow validate") {
  CategoryDescription one;
  one.objects = {"*"};
  one.morphisms = {{"id_*", "*", "*"}};
  one.identities = {{"*", "id_*"}};
  one.compose = {{"id_*", "id_*", "id_*"}};
  Category c1 = Category::validate(one);
  CHECK(c1.object_count() == 1);
  CHECK(c1.morphism_count() == 1);

  Category c2 = Category::validate(two_description());
  CHECK(c2.object_count() == 2);
  CHECK(c2.morphism_count() == 3);
  CHECK(c2.compose(c2.morphism("u"), c2.morphism("id_a")) == c2.morphism("u"));
  CHECK(c2 == *builders::walking_arrow());
}

TEST_CASE("identity law violation names u") {
  CategoryDescription d = two_description();
  d.compose[2].result = "id_b";
  Error e = caught([&] { Category::validate(d); });
  CHECK(e.kind() == ErrorKind::AxiomViolation);
  CHECK(e.clause().find("identity") != std::string::npos);
  REQUIRE_FALSE(e.witnesses().empty());
  CHECK(e.witnesses().front() == "u");
}

TEST_CASE("missing composite violates totality, unknown names are malformed") {
  CategoryDescription d = two_description();
  d.compose.pop_back();
  Error missing = caught([&] { Category::validate(d); });
  CHECK(missing.kind() == ErrorKind::AxiomViolation);
  CHECK(missing.clause().find("composite") != std::string::npos);
  CategoryDescription e = two_description();
  e.morphisms.push_back({"v", "a", "c"});
  CHECK(caught([&] { Category::validate(e); }).kind() == ErrorKind::MalformedInput);
}

TEST_CASE("associativity holds on every composable triple of the set skeleton") {
  CategoryPtr c = builders::finite_sets(2);
  CHECK(c->object_count() == 3);
  CHECK(c->morphism_count() == 11);
  for (MorId f = 0; f < c->morphism_count(); ++f)
    for (MorId g : c->outgoing(c->target(f)))
      for (MorId h : c->outgoing(c->target(g)))
        CHECK(c->compose(h, c->compose(g, f)) == c->compose(c->compose(h, g), f));
}

TEST_CASE("isomorphisms") {
  CategoryPtr two = builders::walking_arrow();
  CHECK(two->is_isomorphism(two->identity(0)));
  CHECK_FALSE(two->is_isomorphism(mor(*two, "u")));
  CategoryPtr sets = builders::finite_sets(2);
  MorId swap = mor(*sets, "f22_10");
  CHECK(sets->is_isomorphism(swap));
  CHECK(sets->inverse(swap) == swap);
  // Inverses agree with the table oracle and are unique.
  for (MorId f = 0; f < sets->morphism_count(); ++f) {
    CHECK(sets->is_isomorphism(f) == oracle_iso(*sets, f));
    int inverses = 0;
    for (MorId g : sets->hom(sets->target(f), sets->source(f)))
      if (sets->is_identity(sets->compose(g, f)) && sets->is_identity(sets->compose(f, g))) ++inverses;
    CHECK(inverses <= 1);
  }
}

TEST_CASE("opposite is an involution") {
  CategoryPtr sets = builders::finite_sets(2);
  Category op = sets->opposite();
  CHECK(op.source(mor(op, "f12_0")) == obj(op, "S2"));
  CHECK(op.opposite() == *sets);
}

TEST_CASE("functor validation") {
  CategoryPtr two = builders::walking_arrow();
  CategoryPtr one = builders::terminal_category();
  Functor id = Functor::validate(two, two, {0, 1}, {0, 1, 2});
  CHECK(id == Functor::identity(two));
  Functor bang = builders::functor_by_name(two, one, {{"a", "*"}, {"b", "*"}}, {{"u", "id_*"}});
  CHECK(bang(1) == 0);
  Error e = caught([&] {
    builders::functor_by_name(two, two, {{"a", "b"}, {"b", "a"}}, {{"u", "u"}, {"id_a", "id_b"}, {"id_b", "id_a"}});
  });
  CHECK(e.kind() == ErrorKind::AxiomViolation);
  CHECK(e.clause().find("source") != std::string::npos);
  CHECK(e.witnesses().front() == "u");
}

TEST_CASE("equivalence report") {
  CategoryPtr sets = builders::finite_sets(2);
  CHECK(check_equivalence(Functor::identity(sets)).verdict());

  // 𝟚 → 𝟙 → 𝟚 constant at a: faithful, not full, misses b.
  CategoryPtr two = builders::walking_arrow();
  Functor constant = builders::functor_by_name(two, two, {{"a", "a"}, {"b", "a"}}, {{"u", "id_a"}});
  EquivalenceReport r = check_equivalence(constant);
  CHECK(r.faithful);
  CHECK_FALSE(r.full);
  CHECK_FALSE(r.essentially_surjective);
  CHECK_FALSE(r.full_witness.empty());
}

TEST_CASE("natural isomorphism search") {
  CategoryPtr sets = builders::finite_sets(2);
  Functor id = Functor::identity(sets);
  auto eta = find_natural_isomorphism(id, id);
  REQUIRE(eta);
  for (ObjId x = 0; x < sets->object_count(); ++x) CHECK(sets->is_isomorphism((*eta)[x]));

  std::vector<MorId> comps{sets->identity(0), sets->identity(1), mor(*sets, "f22_10")};
  Error e = caught([&] { NaturalTransformation::validate(id, id, comps); });
  CHECK(e.kind() == ErrorKind::NotNatural);
  comps[2] = mor(*sets, "f12_0");
  CHECK(caught([&] { NaturalTransformation::validate(id, id, comps); }).kind() == ErrorKind::MalformedInput);
}

TEST_CASE("pullbacks") {
  CategoryPtr two = builders::walking_arrow();
  MorId u = mor(*two, "u");
  auto idp = pullback(*two, two->identity(0), two->identity(0));
  REQUIRE(idp);
  CHECK(idp->apex == 0);
  CHECK(idp->p1 == two->identity(0));
  CHECK(idp->p2 == two->identity(0));

  auto uu = pullback(*two, u, u);
  REQUIRE(uu);
  CHECK(uu->apex == obj(*two, "a"));
  CHECK(uu->p1 == two->identity(0));
  CHECK(uu->p2 == two->identity(0));

  CategoryPtr sets = builders::finite_sets(2);
  MorId bang = mor(*sets, "f21_00");
  CHECK_FALSE(pullback(*sets, bang, bang).has_value());
  CHECK(all_pullbacks(*sets, bang, bang).empty());
}

TEST_CASE("every returned pullback is certified and minimal") {
  CategoryPtr sets = builders::finite_sets(2);
  const Category& c = *sets;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.incoming(c.target(f))) {
      auto all = all_pullbacks(c, f, g);
      auto first = pullback(c, f, g);
      CHECK(first.has_value() == !all.empty());
      if (!first) continue;
      CHECK(*first == all.front());
      // The oracle's square test, applied to (p2 : P → B over f : A → C).
      CHECK(oracle_pullback_square(c, first->p1, g, first->p2, f));
      for (const auto& sq : all) CHECK(std::make_tuple(first->apex, first->p1, first->p2) <=
                                       std::make_tuple(sq.apex, sq.p1, sq.p2));
    }
}

TEST_CASE("full subcategory keeps names and order") {
  CategoryPtr sets = builders::finite_sets(2);
  FullSubcategory sub = full_subcategory(sets, {2, 1});
  CHECK(sub.category->object_name(0) == "S2");
  CHECK(sub.category->morphism_count() == 4 + 1 + 2 + 1);
  CHECK(sub.inclusion(0) == 2);
}
