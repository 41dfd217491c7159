#pragma once

#include <optional>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

/// Two extensional morphism classes on one carrier: left (↠) and right (↣).
struct ClassPair {
  CategoryPtr carrier;
  MorphismSet left;
  MorphismSet right;

  static ClassPair iso_all(CategoryPtr carrier);
  static ClassPair all_iso(CategoryPtr carrier);
};

MorphismSet isomorphisms(const Category& cat);

/// f = m ∘ e with e in the left class and m in the right class.
struct Factorization {
  MorId f = kNoMorphism;
  MorId e = kNoMorphism;
  MorId m = kNoMorphism;
  ObjId middle = kNoObject;
};

/// Square m∘top = bottom∘e with e : A → B and m : X → Y.
struct LiftingProblem {
  MorId e = kNoMorphism;
  MorId m = kNoMorphism;
  MorId top = kNoMorphism;
  MorId bottom = kNoMorphism;
};

/// Diagonals d : B → X with d∘e = top and m∘d = bottom.
std::vector<MorId> fillers(const Category& cat, const LiftingProblem& problem);

/// True iff every commuting square from e to m has exactly one filler.
/// On failure `offending` receives the first bad problem (if non-null).
bool uniquely_orthogonal(const Category& cat, MorId e, MorId m,
                         LiftingProblem* offending = nullptr, std::size_t* filler_count = nullptr);

struct OrthogonalityReport {
  bool verdict = true;
  std::size_t problems = 0;
  std::optional<LiftingProblem> offending;
  std::size_t filler_count = 0;
};

OrthogonalityReport check_orthogonality(const ClassPair& cp);

/// A validated orthogonal factorization system with a canonical
/// factorization stored for every morphism.
class FactorizationSystem {
 public:
  /// Checks iso-containment and composition closure of both classes,
  /// existence of factorizations, and orthogonality. Throws AxiomViolation.
  static FactorizationSystem validate(ClassPair cp);

  const ClassPair& classes() const { return classes_; }
  const Category& carrier() const { return *classes_.carrier; }
  const CategoryPtr& carrier_ptr() const { return classes_.carrier; }
  bool left(MorId f) const { return classes_.left.contains(f); }
  bool right(MorId f) const { return classes_.right.contains(f); }

  /// Smallest middle object, then smallest e, then smallest m.
  const Factorization& factorize(MorId f) const { return factorizations_.at(f); }
  const std::vector<Factorization>& factorizations() const { return factorizations_; }

 private:
  FactorizationSystem() = default;
  ClassPair classes_;
  std::vector<Factorization> factorizations_;
};

/// Morphisms with the unique left lifting property against all of `right`.
MorphismSet saturate(const Category& cat, const MorphismSet& right);
/// Morphisms with the unique right lifting property against all of `left`.
MorphismSet cosaturate(const Category& cat, const MorphismSet& left);

/// Cancellation, pullback-stability of the right class, iso = both classes,
/// and saturation both ways. Accepts unvalidated pairs so mutations can be
/// diagnosed.
Report lemma_suite(const ClassPair& cp);
inline Report lemma_suite(const FactorizationSystem& fs) { return lemma_suite(fs.classes()); }

std::string describe(const Category& cat, const LiftingProblem& p);

}  // namespace fibcat
