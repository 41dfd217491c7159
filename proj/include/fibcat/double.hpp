#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fibcat/dual.hpp"

namespace fibcat {

/// left, right: vertical; top, bottom: horizontal.
///
///   A --top--> B
///   |          |
///  left      right
///   v          v
///   C -bottom> D
struct Boundary {
  MorId left;
  MorId right;
  MorId top;
  MorId bottom;

  auto key() const { return std::make_tuple(left, right, top, bottom); }
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct Square {
  Boundary boundary;
  MorId witness = kNoMorphism;  // kNoMorphism for propositional squares
};

/// Thin double category: at most one square per boundary.
struct DoubleCategory {
  std::string kind;
  CategoryPtr vertical;
  CategoryPtr horizontal;
  std::vector<Square> squares;  // in boundary-enumeration order
  std::map<std::tuple<MorId, MorId, MorId, MorId>, std::size_t> index;
  std::size_t boundaries = 0;  // boundaries examined

  /// Square predicate with witness.
  std::function<std::optional<MorId>(const Boundary&)> predicate;
  /// Witness of a pasted composite; the boundaries are already known to compose.
  std::function<MorId(const Square& upper, const Square& lower)> paste_vertical;
  std::function<MorId(const Square& left, const Square& right)> paste_horizontal;

  const Square* find(const Boundary& b) const;
};

/// Boundary enumeration order: left, top, right, bottom by id.
void enumerate_squares(DoubleCategory& d);

Boundary vcompose(const DoubleCategory& d, const Boundary& upper, const Boundary& lower);
Boundary hcompose(const DoubleCategory& d, const Boundary& left, const Boundary& right);

/// Identity squares, closure of both compositions with pasted witnesses,
/// neutrality of identities and, unless disabled, interchange on every 2×2 grid.
Report check_double_category(const DoubleCategory& d, bool interchange = true);

/// Lenses vertical, Grothendieck morphisms horizontal, commuting squares.
DoubleCategory grothendieck_double(const IndexedCategory& ix);

/// Dual spans vertical, the carrier horizontal, maps of spans as squares.
DoubleCategory span_double(const CartesianFS& cfs);
DoubleCategory span_double(const std::shared_ptr<const DualCategory>& dual);

/// Square sets of grothendieck_double(ix) and the span double category of
/// the Grothendieck fibration correspond boundary by boundary.
Report check_double_equivalence(const IndexedCategory& ix);

struct DoubleFunctor {
  Functor vertical;
  Functor horizontal;
};

/// Built from a functor preserving both classes; throws ClassNotPreserved.
DoubleFunctor double_functor_of(const Functor& f, const DualCategory& from, const DualCategory& to);
/// Squares go to squares with the transported witness.
Report check_double_functor(const DoubleFunctor& f, const DoubleCategory& from,
                            const DoubleCategory& to);

struct HorizontalTransformation {
  std::vector<MorId> objects;   // α_C, horizontal in the target
  std::vector<Square> vertical; // per vertical morphism of the source
};

/// α : F ⇒ G between class-preserving functors. Throws NotNatural when the
/// component squares do not exist.
HorizontalTransformation horizontal_transformation_of(const NaturalTransformation& alpha,
                                                      const DualCategory& from,
                                                      const DualCategory& to);
/// Component squares, identities, vertical composites and squares.
Report check_horizontal_transformation(const HorizontalTransformation& t,
                                       const DoubleFunctor& f, const DoubleFunctor& g,
                                       const DoubleCategory& from, const DoubleCategory& to);

}  // namespace fibcat
