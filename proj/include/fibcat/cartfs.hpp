#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fibcat/ofs.hpp"
#include "fibcat/pullback.hpp"

namespace fibcat {

/// An orthogonal factorization system whose left class satisfies 2-of-3 and
/// whose left maps pull back along right maps into the left class.
class CartesianFS {
 public:
  /// Throws NotCartesian(clause, witnesses).
  static CartesianFS validate(FactorizationSystem fs);

  const FactorizationSystem& system() const { return fs_; }
  const ClassPair& classes() const { return fs_.classes(); }
  const Category& carrier() const { return fs_.carrier(); }
  const CategoryPtr& carrier_ptr() const { return fs_.carrier_ptr(); }
  bool left(MorId f) const { return fs_.left(f); }
  bool right(MorId f) const { return fs_.right(f); }
  const Factorization& factorize(MorId f) const { return fs_.factorize(f); }

  /// Pullback of the cospan (m : A → C, e : B → C), m right and e left:
  /// p1 : P → A is left, p2 : P → B is right.
  const PullbackSquare& stability_witness(MorId e, MorId m) const;
  const std::map<std::pair<MorId, MorId>, PullbackSquare>& stability_witnesses() const {
    return stability_;
  }

 private:
  CartesianFS(FactorizationSystem fs, std::map<std::pair<MorId, MorId>, PullbackSquare> stability)
      : fs_(std::move(fs)), stability_(std::move(stability)) {}
  FactorizationSystem fs_;
  std::map<std::pair<MorId, MorId>, PullbackSquare> stability_;  // key (e, m)
};

using CartesianFSPtr = std::shared_ptr<const CartesianFS>;

/// Every commuting square with left verticals and right horizontals is a
/// pullback. Counts squares; failures carry the square.
Report check_lr_squares_are_pullbacks(const CartesianFS& cfs);

/// Objects against which every extension problem along a left map has
/// exactly one solution.
std::vector<ObjId> injective_objects(const ClassPair& cp);
inline std::vector<ObjId> injective_objects(const CartesianFS& cfs) {
  return injective_objects(cfs.classes());
}

struct InjectivesReport {
  std::vector<ObjId> injectives;
  /// Per object: the chosen left map into an injective, when one exists.
  std::vector<std::optional<MorId>> replacement;
  std::vector<ObjId> lacking;

  bool total() const { return lacking.empty(); }
};

/// Smallest injective target index, then smallest morphism index.
InjectivesReport enough_injectives(const ClassPair& cp);
inline InjectivesReport enough_injectives(const CartesianFS& cfs) {
  return enough_injectives(cfs.classes());
}

/// Maps between injectives are right; right maps into injectives have
/// injective sources; with a terminal object, injective iff terminal map right.
Report lemma_injectives(const ClassPair& cp);
inline Report lemma_injectives(const CartesianFS& cfs) { return lemma_injectives(cfs.classes()); }

/// Enough injectives iff every coslice X ↓ C_R has an initial object, and the
/// chosen replacement is that initial object up to isomorphism.
Report check_reflective(const CartesianFS& cfs);

}  // namespace fibcat
