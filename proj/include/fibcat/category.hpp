#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fibcat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr MorId kNoMorphism = std::numeric_limits<MorId>::max();
inline constexpr ObjId kNoObject = std::numeric_limits<ObjId>::max();

/// Raw, name-based description of a finite category as read from a file.
struct CategoryDescription {
  struct Morphism {
    std::string name;
    std::string src;
    std::string dst;
  };
  struct Composite {
    std::string g;
    std::string f;
    std::string result;  // g ∘ f
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<Composite> compose;
};

/// Extensional subset of the morphisms of one category.
class MorphismSet {
 public:
  MorphismSet() = default;
  explicit MorphismSet(std::size_t universe) : bits_(universe, false) {}

  static MorphismSet all(std::size_t universe);
  static MorphismSet of(std::size_t universe, std::span<const MorId> members);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(MorId m) const { return m < bits_.size() && bits_[m]; }
  void insert(MorId m) { bits_.at(m) = true; }
  void erase(MorId m) { bits_.at(m) = false; }
  std::size_t count() const;
  std::vector<MorId> members() const;

  friend bool operator==(const MorphismSet&, const MorphismSet&) = default;

 private:
  std::vector<bool> bits_;
};

class CategoryBuilder;

/// A finite category given by a total composition table.
///
/// Objects and morphisms are dense ids in input order; every tie-break in the
/// library refers to this order. Instances are immutable once built and are
/// normally shared through `std::shared_ptr<const Category>`.
class Category {
 public:
  /// Validates a named description. Throws `Error` (MalformedInput or
  /// AxiomViolation) naming the first violated law and its witnesses.
  static Category validate(const CategoryDescription& raw);

  std::size_t object_count() const noexcept { return object_names_.size(); }
  std::size_t morphism_count() const noexcept { return morphism_names_.size(); }

  ObjId source(MorId f) const { return source_.at(f); }
  ObjId target(MorId f) const { return target_.at(f); }
  MorId identity(ObjId a) const { return identity_.at(a); }
  bool is_identity(MorId f) const { return identity_.at(source(f)) == f; }

  /// g ∘ f; kNoMorphism when target(f) != source(g).
  MorId compose(MorId g, MorId f) const;
  bool composable(MorId g, MorId f) const { return target(f) == source(g); }

  std::span<const MorId> hom(ObjId a, ObjId b) const;
  std::span<const MorId> outgoing(ObjId a) const { return outgoing_.at(a); }
  std::span<const MorId> incoming(ObjId b) const { return incoming_.at(b); }

  /// The two-sided inverse of f if one exists.
  std::optional<MorId> inverse(MorId f) const;
  bool is_isomorphism(MorId f) const { return inverse_.at(f) != kNoMorphism; }

  const std::string& object_name(ObjId a) const { return object_names_.at(a); }
  const std::string& morphism_name(MorId f) const { return morphism_names_.at(f); }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  ObjId object(std::string_view name) const;     // throws MalformedInput
  MorId morphism(std::string_view name) const;   // throws MalformedInput

  /// Same ids and names with sources/targets swapped and the table transposed.
  Category opposite() const;
  CategoryDescription describe() const;

  friend bool operator==(const Category& a, const Category& b);

 private:
  friend class CategoryBuilder;
  Category() = default;
  void index();
  void check_axioms() const;

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<ObjId> source_;
  std::vector<ObjId> target_;
  std::vector<MorId> identity_;
  std::vector<MorId> table_;  // row g, column f

  // Derived indices.
  std::vector<std::vector<MorId>> hom_;  // a * n + b
  std::vector<std::vector<MorId>> outgoing_;
  std::vector<std::vector<MorId>> incoming_;
  std::vector<MorId> inverse_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Id-based construction path used by the library's own constructions. The
/// result goes through exactly the same axiom checks as `Category::validate`.
class CategoryBuilder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId src, ObjId dst);
  void set_identity(ObjId a, MorId id);
  void set_composite(MorId g, MorId f, MorId result);
  /// Fills every composable (g, f) entry from `rule`.
  void fill_composition(const std::function<MorId(MorId g, MorId f)>& rule);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  ObjId source(MorId f) const { return morphisms_.at(f).src; }
  ObjId target(MorId f) const { return morphisms_.at(f).dst; }

  Category build() &&;
  CategoryPtr build_shared() &&;

 private:
  struct Mor {
    std::string name;
    ObjId src;
    ObjId dst;
  };
  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<MorId> identities_;
  std::vector<std::tuple<MorId, MorId, MorId>> composites_;
};

/// The terminal object of lowest index, if any.
std::optional<ObjId> terminal_object(const Category& cat);

}  // namespace fibcat
