#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

/// A functor between finite categories; equality is on the nose.
class Functor {
 public:
  /// Throws AxiomViolation naming the failed preservation law and witness.
  static Functor validate(CategoryPtr source, CategoryPtr target, std::vector<ObjId> object_map,
                          std::vector<MorId> morphism_map);
  static Functor identity(CategoryPtr cat);

  const Category& source() const { return *source_; }
  const Category& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }

  ObjId operator()(ObjId a) const { return object_map_.at(a); }
  MorId map_morphism(MorId f) const { return morphism_map_.at(f); }
  const std::vector<ObjId>& object_map() const { return object_map_; }
  const std::vector<MorId>& morphism_map() const { return morphism_map_; }

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  Functor() = default;
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<ObjId> object_map_;
  std::vector<MorId> morphism_map_;
};

/// g ∘ f.
Functor compose(const Functor& g, const Functor& f);

class NaturalTransformation {
 public:
  /// Throws NotNatural (naturality square, witness morphism) or
  /// MalformedInput (component with the wrong boundary).
  static NaturalTransformation validate(Functor from, Functor to, std::vector<MorId> components);
  static NaturalTransformation identity(const Functor& f);

  const Functor& from() const { return from_; }
  const Functor& to() const { return to_; }
  MorId operator[](ObjId a) const { return components_.at(a); }
  const std::vector<MorId>& components() const { return components_; }

 private:
  NaturalTransformation(Functor from, Functor to, std::vector<MorId> components)
      : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {}
  Functor from_;
  Functor to_;
  std::vector<MorId> components_;
};

struct EquivalenceReport {
  bool faithful = true;
  bool full = true;
  bool essentially_surjective = true;
  std::string faithful_witness;
  std::string full_witness;
  std::string surjective_witness;

  bool verdict() const { return faithful && full && essentially_surjective; }
};

/// Exhaustive hom-set comparison plus an iso-class reachability scan.
EquivalenceReport check_equivalence(const Functor& f);

/// Backtracking search for a natural isomorphism F ⇒ G, components tried in
/// morphism-index order.
std::optional<NaturalTransformation> find_natural_isomorphism(const Functor& f, const Functor& g);

struct FullSubcategory {
  CategoryPtr category;
  Functor inclusion;
  std::vector<MorId> morphisms;  // ambient id of each sub-morphism
};

/// Full subcategory on `objects` (kept in the given order); names are kept.
FullSubcategory full_subcategory(const CategoryPtr& ambient, const std::vector<ObjId>& objects);

}  // namespace fibcat
