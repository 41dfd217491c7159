#include "fibcat/category.hpp"

#include <algorithm>
#include <tuple>

#include "fibcat/error.hpp"

namespace fibcat {

MorphismSet MorphismSet::all(std::size_t universe) {
  MorphismSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

MorphismSet MorphismSet::of(std::size_t universe, std::span<const MorId> members) {
  MorphismSet s(universe);
  for (MorId m : members) s.insert(m);
  return s;
}

std::size_t MorphismSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<MorId> MorphismSet::members() const {
  std::vector<MorId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<MorId>(i));
  return out;
}

// ---------------------------------------------------------------------------

MorId Category::compose(MorId g, MorId f) const {
  if (!composable(g, f)) return kNoMorphism;
  return table_[static_cast<std::size_t>(g) * morphism_count() + f];
}

std::span<const MorId> Category::hom(ObjId a, ObjId b) const {
  return hom_.at(static_cast<std::size_t>(a) * object_count() + b);
}

std::optional<MorId> Category::inverse(MorId f) const {
  MorId inv = inverse_.at(f);
  if (inv == kNoMorphism) return std::nullopt;
  return inv;
}

std::optional<ObjId> Category::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> Category::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjId Category::object(std::string_view name) const {
  if (auto id = find_object(name)) return *id;
  throw Error(ErrorKind::MalformedInput, "unknown object", {std::string(name)});
}

MorId Category::morphism(std::string_view name) const {
  if (auto id = find_morphism(name)) return *id;
  throw Error(ErrorKind::MalformedInput, "unknown morphism", {std::string(name)});
}

void Category::index() {
  const std::size_t n_obj = object_count();
  const std::size_t n_mor = morphism_count();
  hom_.assign(n_obj * n_obj, {});
  outgoing_.assign(n_obj, {});
  incoming_.assign(n_obj, {});
  for (MorId f = 0; f < n_mor; ++f) {
    hom_[static_cast<std::size_t>(source_[f]) * n_obj + target_[f]].push_back(f);
    outgoing_[source_[f]].push_back(f);
    incoming_[target_[f]].push_back(f);
  }
  object_index_.clear();
  morphism_index_.clear();
  for (ObjId a = 0; a < n_obj; ++a) object_index_.emplace(object_names_[a], a);
  for (MorId f = 0; f < n_mor; ++f) morphism_index_.emplace(morphism_names_[f], f);

  inverse_.assign(n_mor, kNoMorphism);
  for (MorId f = 0; f < n_mor; ++f) {
    for (MorId g : hom(target_[f], source_[f])) {
      if (table_[static_cast<std::size_t>(g) * n_mor + f] == identity_[source_[f]] &&
          table_[static_cast<std::size_t>(f) * n_mor + g] == identity_[target_[f]]) {
        inverse_[f] = g;
        break;
      }
    }
  }
}

void Category::check_axioms() const {
  const std::size_t n_mor = morphism_count();
  auto name = [&](MorId f) { return morphism_names_[f]; };
  auto at = [&](MorId g, MorId f) { return table_[static_cast<std::size_t>(g) * n_mor + f]; };

  for (ObjId a = 0; a < object_count(); ++a) {
    MorId id = identity_[a];
    if (source_[id] != a || target_[id] != a)
      throw Error(ErrorKind::AxiomViolation, "identity law", {name(id)});
  }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g : outgoing_[target_[f]])
      if (at(g, f) == kNoMorphism)
        throw Error(ErrorKind::AxiomViolation, "closure: missing composite", {name(g), name(f)});
  for (MorId f = 0; f < n_mor; ++f) {
    if (at(identity_[target_[f]], f) != f || at(f, identity_[source_[f]]) != f)
      throw Error(ErrorKind::AxiomViolation, "identity law", {name(f)});
  }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g : outgoing_[target_[f]]) {
      MorId r = at(g, f);
      if (source_[r] != source_[f] || target_[r] != target_[g])
        throw Error(ErrorKind::AxiomViolation, "closure: composite typing",
                    {name(g), name(f), name(r)});
    }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g : outgoing_[target_[f]])
      for (MorId h : outgoing_[target_[g]])
        if (at(h, at(g, f)) != at(at(h, g), f))
          throw Error(ErrorKind::AxiomViolation, "associativity", {name(h), name(g), name(f)});
}

Category Category::validate(const CategoryDescription& raw) {
  CategoryBuilder b;
  std::unordered_map<std::string, ObjId> objs;
  for (const auto& o : raw.objects) {
    if (!objs.emplace(o, static_cast<ObjId>(objs.size())).second)
      throw Error(ErrorKind::MalformedInput, "duplicate object", {o});
    b.add_object(o);
  }
  auto obj = [&](const std::string& n) {
    auto it = objs.find(n);
    if (it == objs.end()) throw Error(ErrorKind::MalformedInput, "dangling object reference", {n});
    return it->second;
  };
  std::unordered_map<std::string, MorId> mors;
  for (const auto& m : raw.morphisms) {
    if (!mors.emplace(m.name, static_cast<MorId>(mors.size())).second)
      throw Error(ErrorKind::MalformedInput, "duplicate morphism", {m.name});
    b.add_morphism(m.name, obj(m.src), obj(m.dst));
  }
  auto mor = [&](const std::string& n) {
    auto it = mors.find(n);
    if (it == mors.end())
      throw Error(ErrorKind::MalformedInput, "dangling morphism reference", {n});
    return it->second;
  };
  for (const auto& [o, m] : raw.identities) b.set_identity(obj(o), mor(m));
  for (const auto& c : raw.compose) b.set_composite(mor(c.g), mor(c.f), mor(c.result));
  return std::move(b).build();
}

Category Category::opposite() const {
  Category op = *this;
  std::swap(op.source_, op.target_);
  const std::size_t n = morphism_count();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) op.table_[g * n + f] = table_[f * n + g];
  op.index();
  return op;
}

CategoryDescription Category::describe() const {
  CategoryDescription d;
  d.objects = object_names_;
  for (MorId f = 0; f < morphism_count(); ++f)
    d.morphisms.push_back({morphism_names_[f], object_names_[source_[f]], object_names_[target_[f]]});
  for (ObjId a = 0; a < object_count(); ++a)
    d.identities.emplace_back(object_names_[a], morphism_names_[identity_[a]]);
  for (MorId f = 0; f < morphism_count(); ++f)
    for (MorId g : outgoing_[target_[f]])
      d.compose.push_back({morphism_names_[g], morphism_names_[f], morphism_names_[compose(g, f)]});
  return d;
}

bool operator==(const Category& a, const Category& b) {
  return a.object_names_ == b.object_names_ && a.morphism_names_ == b.morphism_names_ &&
         a.source_ == b.source_ && a.target_ == b.target_ && a.identity_ == b.identity_ &&
         a.table_ == b.table_;
}

// ---------------------------------------------------------------------------

ObjId CategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(kNoMorphism);
  return static_cast<ObjId>(objects_.size() - 1);
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId src, ObjId dst) {
  if (src >= objects_.size() || dst >= objects_.size())
    throw Error(ErrorKind::MalformedInput, "dangling object reference", {name});
  morphisms_.push_back({std::move(name), src, dst});
  return static_cast<MorId>(morphisms_.size() - 1);
}

void CategoryBuilder::set_identity(ObjId a, MorId id) {
  if (a >= objects_.size() || id >= morphisms_.size())
    throw Error(ErrorKind::MalformedInput, "dangling identity reference");
  if (identities_[a] != kNoMorphism)
    throw Error(ErrorKind::MalformedInput, "duplicate identity", {objects_[a]});
  identities_[a] = id;
}

void CategoryBuilder::set_composite(MorId g, MorId f, MorId result) {
  if (g >= morphisms_.size() || f >= morphisms_.size() || result >= morphisms_.size())
    throw Error(ErrorKind::MalformedInput, "dangling composite reference");
  composites_.emplace_back(g, f, result);
}

void CategoryBuilder::fill_composition(const std::function<MorId(MorId, MorId)>& rule) {
  std::vector<std::vector<MorId>> out(objects_.size());
  for (MorId g = 0; g < morphisms_.size(); ++g) out[morphisms_[g].src].push_back(g);
  for (MorId f = 0; f < morphisms_.size(); ++f)
    for (MorId g : out[morphisms_[f].dst]) composites_.emplace_back(g, f, rule(g, f));
}

Category CategoryBuilder::build() && {
  Category c;
  const std::size_t n_mor = morphisms_.size();
  for (auto& o : objects_) c.object_names_.push_back(std::move(o));
  for (auto& m : morphisms_) {
    c.morphism_names_.push_back(std::move(m.name));
    c.source_.push_back(m.src);
    c.target_.push_back(m.dst);
  }
  {
    std::unordered_map<std::string_view, int> seen;
    for (const auto& o : c.object_names_)
      if (seen[o]++) throw Error(ErrorKind::MalformedInput, "duplicate object", {o});
    seen.clear();
    for (const auto& m : c.morphism_names_)
      if (seen[m]++) throw Error(ErrorKind::MalformedInput, "duplicate morphism", {m});
  }
  for (ObjId a = 0; a < c.object_names_.size(); ++a)
    if (identities_[a] == kNoMorphism)
      throw Error(ErrorKind::MalformedInput, "missing identity", {c.object_names_[a]});
  c.identity_ = std::move(identities_);
  c.table_.assign(n_mor * n_mor, kNoMorphism);
  for (auto [g, f, r] : composites_) {
    if (c.target_[f] != c.source_[g])
      throw Error(ErrorKind::MalformedInput, "composite of non-composable pair",
                  {c.morphism_names_[g], c.morphism_names_[f]});
    MorId& slot = c.table_[static_cast<std::size_t>(g) * n_mor + f];
    if (slot != kNoMorphism)
      throw Error(ErrorKind::MalformedInput, "duplicate composite",
                  {c.morphism_names_[g], c.morphism_names_[f]});
    slot = r;
  }
  c.index();
  c.check_axioms();
  return c;
}

CategoryPtr CategoryBuilder::build_shared() && {
  return std::make_shared<const Category>(std::move(*this).build());
}

std::optional<ObjId> terminal_object(const Category& cat) {
  for (ObjId t = 0; t < cat.object_count(); ++t) {
    bool ok = true;
    for (ObjId x = 0; x < cat.object_count() && ok; ++x) ok = cat.hom(x, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace fibcat
