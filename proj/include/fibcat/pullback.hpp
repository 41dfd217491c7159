#pragma once

#include <optional>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

/// Limiting cone over the cospan f : A → C ← B : g, with f∘p1 = g∘p2.
struct PullbackSquare {
  ObjId apex = kNoObject;
  MorId p1 = kNoMorphism;  // apex → A
  MorId p2 = kNoMorphism;  // apex → B

  friend bool operator==(const PullbackSquare&, const PullbackSquare&) = default;
};

/// Certifies the universal property against every cone, exhaustively.
bool is_pullback(const Category& cat, MorId f, MorId g, const PullbackSquare& square);

/// Brute-force pullback search. Among all limiting cones returns the one with
/// the smallest apex index, then smallest p1, then smallest p2.
std::optional<PullbackSquare> pullback(const Category& cat, MorId f, MorId g);

/// Every limiting cone over (f, g), in the same order `pullback` scans.
std::vector<PullbackSquare> all_pullbacks(const Category& cat, MorId f, MorId g);

}  // namespace fibcat
