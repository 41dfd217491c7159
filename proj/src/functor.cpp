#include "fibcat/functor.hpp"

#include <algorithm>

#include "fibcat/error.hpp"

namespace fibcat {

Functor Functor::validate(CategoryPtr source, CategoryPtr target, std::vector<ObjId> object_map,
                          std::vector<MorId> morphism_map) {
  const Category& s = *source;
  const Category& t = *target;
  if (object_map.size() != s.object_count() || morphism_map.size() != s.morphism_count())
    throw Error(ErrorKind::MalformedInput, "functor maps do not cover the source");
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (object_map[a] >= t.object_count())
      throw Error(ErrorKind::MalformedInput, "object image out of range", {s.object_name(a)});
  for (MorId f = 0; f < s.morphism_count(); ++f)
    if (morphism_map[f] >= t.morphism_count())
      throw Error(ErrorKind::MalformedInput, "morphism image out of range", {s.morphism_name(f)});

  for (MorId f = 0; f < s.morphism_count(); ++f) {
    if (t.source(morphism_map[f]) != object_map[s.source(f)])
      throw Error(ErrorKind::AxiomViolation, "source preservation", {s.morphism_name(f)});
    if (t.target(morphism_map[f]) != object_map[s.target(f)])
      throw Error(ErrorKind::AxiomViolation, "target preservation", {s.morphism_name(f)});
  }
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (morphism_map[s.identity(a)] != t.identity(object_map[a]))
      throw Error(ErrorKind::AxiomViolation, "identity preservation", {s.object_name(a)});
  for (MorId f = 0; f < s.morphism_count(); ++f)
    for (MorId g : s.outgoing(s.target(f)))
      if (morphism_map[s.compose(g, f)] != t.compose(morphism_map[g], morphism_map[f]))
        throw Error(ErrorKind::AxiomViolation, "composition preservation",
                    {s.morphism_name(g), s.morphism_name(f)});

  Functor out;
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  out.object_map_ = std::move(object_map);
  out.morphism_map_ = std::move(morphism_map);
  return out;
}

Functor Functor::identity(CategoryPtr cat) {
  std::vector<ObjId> objs(cat->object_count());
  std::vector<MorId> mors(cat->morphism_count());
  for (ObjId a = 0; a < objs.size(); ++a) objs[a] = a;
  for (MorId f = 0; f < mors.size(); ++f) mors[f] = f;
  return validate(cat, cat, std::move(objs), std::move(mors));
}

bool operator==(const Functor& a, const Functor& b) {
  auto same = [](const CategoryPtr& x, const CategoryPtr& y) { return x == y || *x == *y; };
  return same(a.source_, b.source_) && same(a.target_, b.target_) &&
         a.object_map_ == b.object_map_ && a.morphism_map_ == b.morphism_map_;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!(f.target_ptr() == g.source_ptr() || f.target() == g.source()))
    throw Error(ErrorKind::TypeMismatch, "functor composition: categories do not match");
  std::vector<ObjId> objs(f.source().object_count());
  std::vector<MorId> mors(f.source().morphism_count());
  for (ObjId a = 0; a < objs.size(); ++a) objs[a] = g(f(a));
  for (MorId m = 0; m < mors.size(); ++m) mors[m] = g.map_morphism(f.map_morphism(m));
  return Functor::validate(f.source_ptr(), g.target_ptr(), std::move(objs), std::move(mors));
}

// ---------------------------------------------------------------------------

NaturalTransformation NaturalTransformation::validate(Functor from, Functor to,
                                                      std::vector<MorId> components) {
  const Category& s = from.source();
  const Category& t = from.target();
  if (!(from.source() == to.source()) || !(from.target() == to.target()))
    throw Error(ErrorKind::TypeMismatch, "natural transformation between non-parallel functors");
  if (components.size() != s.object_count())
    throw Error(ErrorKind::MalformedInput, "components do not cover the source");
  for (ObjId a = 0; a < s.object_count(); ++a) {
    MorId c = components[a];
    if (c >= t.morphism_count() || t.source(c) != from(a) || t.target(c) != to(a))
      throw Error(ErrorKind::MalformedInput, "component has the wrong boundary", {s.object_name(a)});
  }
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    MorId lhs = t.compose(to.map_morphism(f), components[s.source(f)]);
    MorId rhs = t.compose(components[s.target(f)], from.map_morphism(f));
    if (lhs != rhs) throw Error(ErrorKind::NotNatural, "naturality square", {s.morphism_name(f)});
  }
  return NaturalTransformation(std::move(from), std::move(to), std::move(components));
}

NaturalTransformation NaturalTransformation::identity(const Functor& f) {
  std::vector<MorId> comps(f.source().object_count());
  for (ObjId a = 0; a < comps.size(); ++a) comps[a] = f.target().identity(f(a));
  return validate(f, f, std::move(comps));
}

// ---------------------------------------------------------------------------

EquivalenceReport check_equivalence(const Functor& fun) {
  EquivalenceReport r;
  const Category& s = fun.source();
  const Category& t = fun.target();
  for (ObjId a = 0; a < s.object_count(); ++a) {
    for (ObjId b = 0; b < s.object_count(); ++b) {
      std::vector<MorId> images;
      for (MorId f : s.hom(a, b)) images.push_back(fun.map_morphism(f));
      std::vector<MorId> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end() && r.faithful) {
        r.faithful = false;
        r.faithful_witness = s.object_name(a) + "->" + s.object_name(b) + " identifies at " +
                             t.morphism_name(*dup);
      }
      if (r.full) {
        for (MorId g : t.hom(fun(a), fun(b))) {
          if (!std::binary_search(sorted.begin(), sorted.end(), g)) {
            r.full = false;
            r.full_witness = t.morphism_name(g) + " not hit from " + s.object_name(a) + "->" +
                             s.object_name(b);
            break;
          }
        }
      }
    }
  }
  for (ObjId y = 0; y < t.object_count() && r.essentially_surjective; ++y) {
    bool reached = false;
    for (ObjId a = 0; a < s.object_count() && !reached; ++a)
      for (MorId g : t.hom(fun(a), y))
        if (t.is_isomorphism(g)) {
          reached = true;
          break;
        }
    if (!reached) {
      r.essentially_surjective = false;
      r.surjective_witness = t.object_name(y);
    }
  }
  return r;
}

std::optional<NaturalTransformation> find_natural_isomorphism(const Functor& f, const Functor& g) {
  const Category& s = f.source();
  const Category& t = f.target();
  const std::size_t n = s.object_count();
  std::vector<MorId> comp(n, kNoMorphism);

  auto consistent = [&](ObjId a) {
    for (MorId m : s.outgoing(a)) {
      ObjId b = s.target(m);
      if (comp[b] == kNoMorphism) continue;
      if (t.compose(g.map_morphism(m), comp[a]) != t.compose(comp[b], f.map_morphism(m)))
        return false;
    }
    for (MorId m : s.incoming(a)) {
      ObjId b = s.source(m);
      if (comp[b] == kNoMorphism) continue;
      if (t.compose(g.map_morphism(m), comp[b]) != t.compose(comp[a], f.map_morphism(m)))
        return false;
    }
    return true;
  };

  // Recursive descent over objects in index order.
  auto search = [&](auto&& self, ObjId a) -> bool {
    if (a == n) return true;
    for (MorId c : t.hom(f(a), g(a))) {
      if (!t.is_isomorphism(c)) continue;
      comp[a] = c;
      if (consistent(a) && self(self, a + 1)) return true;
    }
    comp[a] = kNoMorphism;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return NaturalTransformation::validate(f, g, comp);
}

FullSubcategory full_subcategory(const CategoryPtr& ambient, const std::vector<ObjId>& objects) {
  const Category& c = *ambient;
  CategoryBuilder b;
  std::vector<ObjId> local(c.object_count(), kNoObject);
  for (ObjId a : objects) local[a] = b.add_object(c.object_name(a));
  std::vector<MorId> ambient_of;
  std::vector<MorId> local_mor(c.morphism_count(), kNoMorphism);
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (local[c.source(f)] == kNoObject || local[c.target(f)] == kNoObject) continue;
    local_mor[f] = b.add_morphism(c.morphism_name(f), local[c.source(f)], local[c.target(f)]);
    ambient_of.push_back(f);
  }
  for (ObjId a : objects) b.set_identity(local[a], local_mor[c.identity(a)]);
  b.fill_composition(
      [&](MorId g, MorId f) { return local_mor[c.compose(ambient_of[g], ambient_of[f])]; });
  CategoryPtr sub = std::move(b).build_shared();
  Functor inc = Functor::validate(sub, ambient, objects, ambient_of);
  return FullSubcategory{std::move(sub), std::move(inc), std::move(ambient_of)};
}

}  // namespace fibcat
