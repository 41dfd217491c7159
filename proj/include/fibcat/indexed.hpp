#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "fibcat/fibration.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

/// A strict functor B^op → Cat on finite data.
class IndexedCategory {
 public:
  /// `reindex[f]` for f : b → b' is a functor E_{b'} → E_b. Throws
  /// MalformedInput / TypeMismatch on shape errors and AxiomViolation
  /// ("strictness: ...") when reindexing is not functorial on the nose.
  static IndexedCategory validate(CategoryPtr base, std::vector<CategoryPtr> fibers,
                                  std::vector<Functor> reindex);

  const Category& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }
  const Category& fiber(ObjId b) const { return *fibers_.at(b); }
  const CategoryPtr& fiber_ptr(ObjId b) const { return fibers_.at(b); }
  const std::vector<CategoryPtr>& fibers() const { return fibers_; }
  const Functor& reindex(MorId f) const { return reindex_.at(f); }
  const std::vector<Functor>& reindexing() const { return reindex_; }

  friend bool operator==(const IndexedCategory& a, const IndexedCategory& b);

 private:
  IndexedCategory(CategoryPtr base, std::vector<CategoryPtr> fibers, std::vector<Functor> reindex)
      : base_(std::move(base)), fibers_(std::move(fibers)), reindex_(std::move(reindex)) {}
  CategoryPtr base_;
  std::vector<CategoryPtr> fibers_;
  std::vector<Functor> reindex_;
};

/// Every fiber replaced by its opposite; reindexing carried over unchanged.
IndexedCategory fiberwise_opposite(const IndexedCategory& ix);

struct TotalObject {
  ObjId base;
  ObjId fiber;
};

/// ⟨fiber, base⟩ from ⟨E, B⟩ to ⟨E', B'⟩. In the Grothendieck construction
/// `fiber` is E → f*E' in E_B; in lens form it is f*E' → E.
struct TotalMorphism {
  MorId base;
  MorId fiber;
  ObjId target_fiber;
};

struct GrothTotal {
  IndexedCategory index;  // the indexed category the total was built from
  CategoryPtr total;
  Functor projection;
  FibrationWitness fibration;
  std::vector<TotalObject> objects;
  std::vector<TotalMorphism> morphisms;
  std::vector<std::vector<ObjId>> object_table;  // [b][e]
  std::map<std::tuple<MorId, MorId, ObjId>, MorId> morphism_table;

  ObjId object_of(ObjId b, ObjId e) const { return object_table.at(b).at(e); }
  /// kNoMorphism when no such pair exists.
  MorId morphism_of(MorId base, MorId fiber, ObjId target_fiber) const;
};

/// Objects ordered by (B, E); morphisms by (source, target, base, fiber).
/// Object names are `E@B`, morphism names `fiber@base>E'`.
GrothTotal grothendieck(const IndexedCategory& ix);

/// Lens f : ⟨E, B⟩ ⇆ ⟨E', B'⟩ with sharp : f*E' → E in E_B.
struct Lens {
  MorId base;
  MorId sharp;
  ObjId source_fiber;
  ObjId target_fiber;

  friend bool operator==(const Lens&, const Lens&) = default;
};

/// grothendieck(fiberwise_opposite(ix)); `index` is the original ix.
GrothTotal lens_category(const IndexedCategory& ix);

Lens lens_of(const GrothTotal& lenses, MorId m);
MorId morphism_of(const GrothTotal& lenses, const Lens& l);
Lens identity_lens(const IndexedCategory& ix, ObjId b, ObjId e);

/// ⟨f^♯ ∘ f*(g^♯), g∘f⟩; throws TypeMismatch when l1 does not end where l2 starts.
Lens compose_lenses(const IndexedCategory& ix, const Lens& l2, const Lens& l1);

}  // namespace fibcat
