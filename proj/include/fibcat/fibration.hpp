#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fibcat/cartfs.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

/// Lifts are accepted on the nose when possible, otherwise up to an
/// isomorphism in the base (Street-style).
enum class LiftMode { OnTheNose, UpToIso };

struct CartesianLift {
  MorId morphism = kNoMorphism;
  LiftMode mode = LiftMode::OnTheNose;
};

/// True iff φ satisfies the cartesian universal property for p against every
/// test morphism and base factorization.
bool is_cartesian_morphism(const Functor& p, MorId phi);

/// Morphisms sent to isomorphisms by p.
MorphismSet vertical_morphisms(const Functor& p);

/// A functor p : E → B with a chosen cartesian lift for every (e, f : b → p e).
class FibrationWitness {
 public:
  /// Exhaustive lift search; smallest morphism index among cartesian
  /// candidates. Throws NotAFibration(e, f) on the first liftless problem.
  static FibrationWitness validate(Functor p);

  /// Certifies caller-supplied lifts keyed by (e, f). Throws NotAFibration if
  /// a lift is missing, not cartesian, or lies over the wrong base map.
  static FibrationWitness from_lifts(Functor p, const std::map<std::pair<ObjId, MorId>, MorId>& lifts);

  const Functor& projection() const { return p_; }
  const Category& total() const { return p_.source(); }
  const Category& base() const { return p_.target(); }
  const MorphismSet& cartesian() const { return cartesian_; }
  const CartesianLift& lift(ObjId e, MorId f) const { return lifts_.at({e, f}); }
  const std::map<std::pair<ObjId, MorId>, CartesianLift>& lifts() const { return lifts_; }
  std::size_t count(LiftMode mode) const;

 private:
  explicit FibrationWitness(Functor p) : p_(std::move(p)) {}
  Functor p_;
  MorphismSet cartesian_;
  std::map<std::pair<ObjId, MorId>, CartesianLift> lifts_;
};

/// Right adjoint right inverse: p ∘ r = id on the nose, p ⊣ r with identity
/// counit and the given unit.
struct RariWitness {
  Functor section;
  NaturalTransformation unit;
};

/// Vertical/cartesian system of a fibration, validated as cartesian.
CartesianFS phi(const FibrationWitness& fw);

struct InjectiveReplacement {
  FibrationWitness fibration;      // R : C → C_R
  Functor inclusion;               // C_R ↪ C
  std::vector<MorId> replacement;  // per object X: the chosen left map X → RX
};

/// Injective replacement fibration. Lifts are the stored Right Stability
/// pullbacks. Throws NoEnoughInjectives(objects lacking replacement).
InjectiveReplacement xi(const CartesianFS& cfs);

/// First section (in object-index order of candidate values) that is a right
/// adjoint right inverse, with its unit.
std::optional<RariWitness> find_rari(const FibrationWitness& fw);

/// Checks a supplied section; throws AxiomViolation when it is not a RARI.
RariWitness validate_rari(const FibrationWitness& fw, Functor section);

/// phi(xi(cfs)) has the classes of cfs; and xi∘phi on the fibration xi(cfs)
/// with its first RARI is an equivalence.
Report check_phi_xi_roundtrip(const CartesianFS& cfs);

/// xi(phi(fw)) is equivalent to fw: p restricted to injectives is an
/// equivalence and the comparison square commutes up to natural iso.
Report check_xi_phi_roundtrip(const FibrationWitness& fw, const RariWitness& rari);

}  // namespace fibcat
