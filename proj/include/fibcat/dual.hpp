#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "fibcat/cartfs.hpp"
#include "fibcat/indexed.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

/// source ↞ apex ↣ target, left leg in the left class, right leg in the right.
struct SpanMorphism {
  ObjId source = kNoObject;
  ObjId target = kNoObject;
  ObjId apex = kNoObject;
  MorId left = kNoMorphism;
  MorId right = kNoMorphism;

  friend bool operator==(const SpanMorphism&, const SpanMorphism&) = default;
  auto key() const { return std::make_tuple(apex, left, right); }
};

/// Throws TypeMismatch when the legs are mistyped or in the wrong classes.
SpanMorphism make_span(const CartesianFS& cfs, MorId left, MorId right);

struct CanonicalSpan {
  SpanMorphism span;
  MorId iso;  // canonical apex → original apex
};

/// Smallest (apex, left, right) among spans isomorphic to s.
CanonicalSpan canonical_form(const CartesianFS& cfs, const SpanMorphism& s);
inline SpanMorphism canonicalize_span(const CartesianFS& cfs, const SpanMorphism& s) {
  return canonical_form(cfs, s).span;
}

struct ComposedSpan {
  SpanMorphism span;      // canonical
  PullbackSquare square;  // p1 : P → apex(s1), p2 : P → apex(s2)
  MorId iso;              // canonical apex → P
};

/// Pullback composite s2 ∘ s1, canonicalized.
ComposedSpan composite_span(const CartesianFS& cfs, const SpanMorphism& s2, const SpanMorphism& s1);
inline SpanMorphism compose_spans(const CartesianFS& cfs, const SpanMorphism& s2,
                                  const SpanMorphism& s1) {
  return composite_span(cfs, s2, s1).span;
}

/// The unique morphism of spans a → b over the same ends, if any.
std::optional<MorId> span_map(const Category& cat, const SpanMorphism& a, const SpanMorphism& b);

struct DualCategory {
  CartesianFS carrier;
  CategoryPtr category;  // same objects and names as the carrier
  std::vector<SpanMorphism> spans;  // per dual morphism, canonical
  std::map<std::tuple<ObjId, MorId, MorId>, MorId> index;
  CartesianFS system;  // dual classes

  /// Dual morphism of a span, canonicalizing first.
  MorId morphism_of(const SpanMorphism& s) const;
};

/// Dual morphisms are ordered by (source, target, apex, left, right) and
/// named `[left|right]`. Throws InternalConsistency when an axiom fails.
DualCategory build_dual(const CartesianFS& cfs);

/// C → C^∨∨; functoriality, class preservation and equivalence.
Report double_dual_check(const CartesianFS& cfs);

/// F^∨ : C^∨ → D^∨ for a functor F between the carriers preserving both
/// classes. Throws ClassNotPreserved.
Functor dual_functor(const Functor& f, const DualCategory& from, const DualCategory& to);

/// Report form of an equivalence check, one witness per failed property.
Report equivalence_report(std::string name, const Functor& f);

/// Lens ⟨f^♯, f⟩ ↦ span ⟨E, B⟩ ↞ ⟨f*E', B⟩ ↣ ⟨E', B'⟩.
struct FiberwiseOpComparison {
  GrothTotal lenses;
  GrothTotal total;
  DualCategory dual;
  Functor phi;
};

/// Throws InternalConsistency if φ is not a functor.
FiberwiseOpComparison fiberwise_op_comparison(const IndexedCategory& ix);
Report check_fiberwise_op_square(const IndexedCategory& ix);

}  // namespace fibcat
