#include <doctest.h>

#include "fibcat/error.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace testing;

namespace {

// Fillers by table scan.
int oracle_fillers(const Category& c, const LiftingProblem& p) {
  int n = 0;
  for (MorId d = 0; d < c.morphism_count(); ++d)
    if (c.source(d) == c.target(p.e) && c.target(d) == c.source(p.m) && c.compose(d, p.e) == p.top &&
        c.compose(p.m, d) == p.bottom)
      ++n;
  return n;
}

bool oracle_orthogonal(const Category& c, MorId e, MorId m) {
  for (MorId top = 0; top < c.morphism_count(); ++top) {
    if (c.source(top) != c.source(e) || c.target(top) != c.source(m)) continue;
    for (MorId bottom = 0; bottom < c.morphism_count(); ++bottom) {
      if (c.source(bottom) != c.target(e) || c.target(bottom) != c.target(m)) continue;
      if (c.compose(m, top) != c.compose(bottom, e)) continue;
      if (oracle_fillers(c, {e, m, top, bottom}) != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("orthogonality on the walking arrow") {
  CategoryPtr two = builders::walking_arrow();
  CHECK(check_orthogonality(ClassPair::iso_all(two)).verdict);
  CHECK(check_orthogonality(ClassPair::all_iso(two)).verdict);

  ClassPair all_all{two, MorphismSet::all(3), MorphismSet::all(3)};
  OrthogonalityReport r = check_orthogonality(all_all);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.offending);
  // The square u, u with identity sides has no diagonal b → a.
  CHECK(r.offending->e == mor(*two, "u"));
  CHECK(r.offending->m == mor(*two, "u"));
  CHECK(r.filler_count == 0);
  CHECK(oracle_fillers(*two, *r.offending) == 0);
}

TEST_CASE("library fillers agree with the table scan") {
  CategoryPtr sets = builders::finite_sets(2);
  const Category& c = *sets;
  for (MorId e = 0; e < c.morphism_count(); ++e)
    for (MorId m = 0; m < c.morphism_count(); ++m) {
      CHECK(uniquely_orthogonal(c, e, m) == oracle_orthogonal(c, e, m));
      for (MorId top : c.hom(c.source(e), c.source(m)))
        for (MorId bottom : c.hom(c.target(e), c.target(m))) {
          if (c.compose(m, top) != c.compose(bottom, e)) continue;
          LiftingProblem p{e, m, top, bottom};
          CHECK(static_cast<int>(fillers(c, p).size()) == oracle_fillers(c, p));
        }
    }
}

TEST_CASE("trivial systems validate on every small fixture") {
  for (CategoryPtr c : {builders::terminal_category(), builders::walking_arrow(), builders::walking_isomorphism(),
                        builders::finite_sets(2)}) {
    auto a = FactorizationSystem::validate(ClassPair::iso_all(c));
    auto b = FactorizationSystem::validate(ClassPair::all_iso(c));
    for (MorId f = 0; f < c->morphism_count(); ++f) {
      // (Iso, All): f = f ∘ iso.
      const Factorization& fa = a.factorize(f);
      CHECK(c->is_isomorphism(fa.e));
      CHECK(c->compose(fa.m, fa.e) == f);
      const Factorization& fb = b.factorize(f);
      CHECK(c->is_isomorphism(fb.m));
      CHECK(c->compose(fb.m, fb.e) == f);
      if (c->is_identity(f)) {
        CHECK(fa.e == f);
        CHECK(fa.m == f);
      }
    }
    CHECK(lemma_suite(a).verdict);
    CHECK(lemma_suite(b).verdict);
  }
}

TEST_CASE("the all/all pair is rejected") {
  CategoryPtr two = builders::walking_arrow();
  try {
    FactorizationSystem::validate(ClassPair{two, MorphismSet::all(3), MorphismSet::all(3)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
  }
}

TEST_CASE("a class missing an iso is rejected") {
  CategoryPtr iso = builders::walking_isomorphism();
  MorphismSet left = isomorphisms(*iso);
  left.erase(mor(*iso, "i"));
  CHECK_THROWS_AS(FactorizationSystem::validate(ClassPair{iso, left, MorphismSet::all(iso->morphism_count())}),
                  Error);
}

TEST_CASE("saturation") {
  CategoryPtr sets = builders::finite_sets(2);
  const std::size_t n = sets->morphism_count();
  CHECK(saturate(*sets, MorphismSet::all(n)) == isomorphisms(*sets));
  CHECK(saturate(*sets, isomorphisms(*sets)) == MorphismSet::all(n));
  CHECK(cosaturate(*sets, isomorphisms(*sets)) == MorphismSet::all(n));
  for (MorId f = 0; f < n; ++f) CHECK(isomorphisms(*sets).contains(f) == oracle_iso(*sets, f));
}

TEST_CASE("vertical/pullback-square system on the arrow category") {
  ArrowFixture fx = arrow_fixture();
  const Category& c = *fx.arrows.category;
  CHECK(c.object_count() == 8);
  CHECK(c.morphism_count() == 97);
  FactorizationSystem fs = FactorizationSystem::validate(fx.declared);
  CHECK(saturate(c, fx.declared.right) == fx.declared.left);
  CHECK(cosaturate(c, fx.declared.left) == fx.declared.right);
  CHECK(lemma_suite(fs).verdict);

  // (S0 → S1) ⇒ (S1 → S2) over f12_0 factors through the pullback of f12_0
  // along itself, the arrow id_S1.
  MorId f = mor(c, "f01>f12_0:f01,f12_0");
  const Factorization& fac = fs.factorize(f);
  CHECK(c.compose(fac.m, fac.e) == f);
  CHECK(fx.declared.left.contains(fac.e));
  CHECK(fx.declared.right.contains(fac.m));
  CHECK(c.object_name(fac.middle) == "id1");
  CHECK(oracle_iso(*fx.sets, fx.arrows.square[fac.e].second));
}

TEST_CASE("dropping one pullback square breaks the lemmas with a named witness") {
  ArrowFixture fx = arrow_fixture();
  const Category& c = *fx.arrows.category;
  ClassPair mutated = fx.declared;
  mutated.right.erase(mor(c, "f01>f02:id0,f12_0"));
  Report r = lemma_suite(mutated);
  CHECK_FALSE(r.verdict);
  const Report* stability = r.find("right-pullback-stability");
  REQUIRE(stability);
  CHECK_FALSE(stability->verdict);
  REQUIRE_FALSE(stability->witnesses.empty());
  CHECK(stability->witnesses.front().find("f01>f02:id0,f12_0") != std::string::npos);
}
