#pragma once

// Shared fixtures and brute-force oracles for the tests. The oracles work on
// the raw composition table and do not call the library's own searches.

#include <string>
#include <vector>

#include "fibcat/builders.hpp"
#include "fibcat/cartfs.hpp"
#include "fibcat/ofs.hpp"

namespace testing {

using namespace fibcat;

inline MorId mor(const Category& c, const std::string& name) { return c.morphism(name); }
inline ObjId obj(const Category& c, const std::string& name) { return c.object(name); }

inline bool oracle_iso(const Category& c, MorId f) {
  for (MorId g = 0; g < c.morphism_count(); ++g)
    if (c.source(g) == c.target(f) && c.target(g) == c.source(f) && c.is_identity(c.compose(g, f)) &&
        c.is_identity(c.compose(f, g)))
      return true;
  return false;
}

// Square p → q with top t, bottom b is a pullback iff every cone factors once.
inline bool oracle_pullback_square(const Category& c, MorId p, MorId q, MorId t, MorId b) {
  for (ObjId w = 0; w < c.object_count(); ++w)
    for (MorId u = 0; u < c.morphism_count(); ++u) {
      if (c.source(u) != w || c.target(u) != c.source(b)) continue;
      for (MorId v = 0; v < c.morphism_count(); ++v) {
        if (c.source(v) != w || c.target(v) != c.source(q)) continue;
        if (c.compose(b, u) != c.compose(q, v)) continue;
        int n = 0;
        for (MorId k = 0; k < c.morphism_count(); ++k)
          if (c.source(k) == w && c.target(k) == c.source(p) && c.compose(p, k) == u && c.compose(t, k) == v)
            ++n;
        if (n != 1) return false;
      }
    }
  return true;
}

// Injective maps of finite sets, their arrow category, and its
// vertical/pullback-square classes declared from the oracles above.
struct ArrowFixture {
  CategoryPtr sets;
  builders::ArrowCategory arrows;
  ClassPair declared;
};

inline ArrowFixture arrow_fixture() {
  CategoryPtr sets = builders::finite_sets(2);
  auto arrows = builders::arrow_category(sets, [&](MorId m) { return builders::is_monomorphism(*sets, m); });
  const Category& base = *sets;
  const Category& c = *arrows.category;
  MorphismSet left(c.morphism_count()), right(c.morphism_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    auto [top, bottom] = arrows.square[m];
    if (oracle_iso(base, bottom)) left.insert(m);
    if (oracle_pullback_square(base, arrows.arrow_of_object[c.source(m)],
                               arrows.arrow_of_object[c.target(m)], top, bottom))
      right.insert(m);
  }
  ClassPair declared{arrows.category, left, right};
  return ArrowFixture{sets, std::move(arrows), std::move(declared)};
}

// Spans A ↞ Z ↣ B counted up to isomorphism of apex, by brute force.
inline std::size_t oracle_span_classes(const ClassPair& cp, ObjId a, ObjId b) {
  const Category& c = *cp.carrier;
  struct S {
    ObjId z;
    MorId l, r;
  };
  std::vector<S> spans;
  for (MorId l = 0; l < c.morphism_count(); ++l) {
    if (!cp.left.contains(l) || c.target(l) != a) continue;
    for (MorId r = 0; r < c.morphism_count(); ++r)
      if (cp.right.contains(r) && c.target(r) == b && c.source(r) == c.source(l))
        spans.push_back({c.source(l), l, r});
  }
  std::vector<std::size_t> rep(spans.size());
  std::size_t classes = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i && rep[i] == i; ++j) {
      if (rep[j] != j) continue;
      for (MorId k = 0; k < c.morphism_count(); ++k)
        if (c.source(k) == spans[i].z && c.target(k) == spans[j].z && oracle_iso(c, k) &&
            c.compose(spans[j].l, k) == spans[i].l && c.compose(spans[j].r, k) == spans[i].r) {
          rep[i] = j;
          break;
        }
    }
    if (rep[i] == i) ++classes;
  }
  return classes;
}

// φ is cartesian for p when for every ψ into its target and every h with
// p(ψ) = p(φ)∘h there is exactly one ψ' over h with φ∘ψ' = ψ.
inline bool oracle_cartesian(const Functor& p, MorId phi) {
  const Category& e = p.source();
  const Category& b = p.target();
  for (MorId psi = 0; psi < e.morphism_count(); ++psi) {
    if (e.target(psi) != e.target(phi)) continue;
    for (MorId h = 0; h < b.morphism_count(); ++h) {
      if (b.source(h) != p(e.source(psi)) || b.target(h) != p(e.source(phi))) continue;
      if (b.compose(p.map_morphism(phi), h) != p.map_morphism(psi)) continue;
      int n = 0;
      for (MorId k = 0; k < e.morphism_count(); ++k)
        if (e.source(k) == e.source(psi) && e.target(k) == e.source(phi) && p.map_morphism(k) == h &&
            e.compose(phi, k) == psi)
          ++n;
      if (n != 1) return false;
    }
  }
  return true;
}

inline CartesianFS cartesian(const ClassPair& cp) {
  return CartesianFS::validate(FactorizationSystem::validate(cp));
}

}  // namespace testing
