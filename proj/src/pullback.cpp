#include "fibcat/pullback.hpp"

#include <algorithm>
#include <utility>

#include "fibcat/error.hpp"

namespace fibcat {
namespace {

// Number of cones with apex q over f : A → C ← B : g.
std::size_t cone_count(const Category& cat, MorId f, MorId g, ObjId q) {
  std::size_t n = 0;
  for (MorId q1 : cat.hom(q, cat.source(f)))
    for (MorId q2 : cat.hom(q, cat.source(g)))
      if (cat.compose(f, q1) == cat.compose(g, q2)) ++n;
  return n;
}

}  // namespace

bool is_pullback(const Category& cat, MorId f, MorId g, const PullbackSquare& sq) {
  if (cat.target(f) != cat.target(g))
    throw Error(ErrorKind::TypeMismatch, "pullback of a non-cospan",
                {cat.morphism_name(f), cat.morphism_name(g)});
  if (cat.source(sq.p1) != sq.apex || cat.source(sq.p2) != sq.apex ||
      cat.target(sq.p1) != cat.source(f) || cat.target(sq.p2) != cat.source(g))
    return false;
  if (cat.compose(f, sq.p1) != cat.compose(g, sq.p2)) return false;
  // Mediating maps exist uniquely iff h ↦ (p1∘h, p2∘h) is a bijection from
  // hom(Q, P) onto the cones at Q, for every Q.
  for (ObjId q = 0; q < cat.object_count(); ++q) {
    auto into_apex = cat.hom(q, sq.apex);
    if (into_apex.size() != cone_count(cat, f, g, q)) return false;
    std::vector<std::pair<MorId, MorId>> legs;
    legs.reserve(into_apex.size());
    for (MorId h : into_apex) legs.emplace_back(cat.compose(sq.p1, h), cat.compose(sq.p2, h));
    std::sort(legs.begin(), legs.end());
    if (std::adjacent_find(legs.begin(), legs.end()) != legs.end()) return false;
  }
  return true;
}

std::vector<PullbackSquare> all_pullbacks(const Category& cat, MorId f, MorId g) {
  std::vector<PullbackSquare> out;
  if (cat.target(f) != cat.target(g))
    throw Error(ErrorKind::TypeMismatch, "pullback of a non-cospan",
                {cat.morphism_name(f), cat.morphism_name(g)});
  for (ObjId p = 0; p < cat.object_count(); ++p)
    for (MorId p1 : cat.hom(p, cat.source(f)))
      for (MorId p2 : cat.hom(p, cat.source(g))) {
        PullbackSquare sq{p, p1, p2};
        if (cat.compose(f, p1) == cat.compose(g, p2) && is_pullback(cat, f, g, sq))
          out.push_back(sq);
      }
  return out;
}

std::optional<PullbackSquare> pullback(const Category& cat, MorId f, MorId g) {
  if (cat.target(f) != cat.target(g))
    throw Error(ErrorKind::TypeMismatch, "pullback of a non-cospan",
                {cat.morphism_name(f), cat.morphism_name(g)});
  for (ObjId p = 0; p < cat.object_count(); ++p)
    for (MorId p1 : cat.hom(p, cat.source(f)))
      for (MorId p2 : cat.hom(p, cat.source(g))) {
        PullbackSquare sq{p, p1, p2};
        if (cat.compose(f, p1) == cat.compose(g, p2) && is_pullback(cat, f, g, sq)) return sq;
      }
  return std::nullopt;
}

}  // namespace fibcat
