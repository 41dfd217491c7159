#include "fibcat/io.hpp"

#include <fstream>
#include <sstream>

#include "fibcat/builders.hpp"
#include "fibcat/error.hpp"

namespace fibcat::io {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& position,
                              const std::string& what) {
  throw Error(ErrorKind::ParseError, what, {where, position});
}

const json& field(const json& j, const std::string& key, const std::string& where,
                  const std::string& ptr) {
  if (!j.is_object()) parse_error(where, ptr.empty() ? "/" : ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, ptr.empty() ? "/" : ptr, "missing key '" + key + "'");
  return *it;
}

std::string text(const json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_string()) parse_error(where, ptr, "expected a string");
  return j.get<std::string>();
}

std::vector<std::pair<std::string, std::string>> name_map(const json& j, const std::string& where,
                                                          const std::string& ptr) {
  if (!j.is_object()) parse_error(where, ptr, "expected an object of names");
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.emplace_back(it.key(), text(it.value(), where, ptr + "/" + it.key()));
  return out;
}

CategoryDescription describe_json(const json& j, const std::string& where, const std::string& ptr) {
  CategoryDescription d;
  const json& objects = field(j, "objects", where, ptr);
  if (!objects.is_array()) parse_error(where, ptr + "/objects", "expected a list");
  for (std::size_t i = 0; i < objects.size(); ++i)
    d.objects.push_back(text(objects[i], where, ptr + "/objects/" + std::to_string(i)));

  const json& morphisms = field(j, "morphisms", where, ptr);
  if (!morphisms.is_array()) parse_error(where, ptr + "/morphisms", "expected a list");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string p = ptr + "/morphisms/" + std::to_string(i);
    const json& m = morphisms[i];
    d.morphisms.push_back({text(field(m, "name", where, p), where, p + "/name"),
                           text(field(m, "src", where, p), where, p + "/src"),
                           text(field(m, "dst", where, p), where, p + "/dst")});
  }
  d.identities = name_map(field(j, "identities", where, ptr), where, ptr + "/identities");

  const json& compose = field(j, "compose", where, ptr);
  if (!compose.is_array()) parse_error(where, ptr + "/compose", "expected a list");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string p = ptr + "/compose/" + std::to_string(i);
    const json& c = compose[i];
    d.compose.push_back({text(field(c, "g", where, p), where, p + "/g"),
                         text(field(c, "f", where, p), where, p + "/f"),
                         text(field(c, "result", where, p), where, p + "/result")});
  }
  return d;
}

// Resolves a sub-document that may be inline or a relative path.
std::pair<json, std::pair<fs::path, std::string>> resolve(const json& ref, const fs::path& dir,
                                                          const std::string& where,
                                                          const std::string& ptr) {
  if (ref.is_string()) {
    fs::path file = dir / ref.get<std::string>();
    return {read_json(file), {file.parent_path(), file.string()}};
  }
  if (!ref.is_object()) parse_error(where, ptr, "expected an inline object or a file path");
  return {ref, {dir, where}};
}

CategoryPtr category_at(const json& ref, const fs::path& dir, const std::string& where,
                        const std::string& ptr) {
  auto [doc, origin] = resolve(ref, dir, where, ptr);
  const bool inline_doc = origin.second == where;
  return std::make_shared<const Category>(
      Category::validate(describe_json(doc, origin.second, inline_doc ? ptr : "")));
}

Functor functor_maps(const CategoryPtr& src, const CategoryPtr& tgt, const json& j,
                     const std::string& where, const std::string& ptr) {
  return builders::functor_by_name(src, tgt,
                                   name_map(field(j, "objects", where, ptr), where, ptr + "/objects"),
                                   name_map(field(j, "morphisms", where, ptr), where, ptr + "/morphisms"));
}

MorphismSet class_of(const Category& cat, const json& j, const std::string& where,
                     const std::string& ptr) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "iso") return isomorphisms(cat);
    if (s == "all") return MorphismSet::all(cat.morphism_count());
    parse_error(where, ptr, "expected \"iso\", \"all\" or a list of morphism names");
  }
  if (!j.is_array()) parse_error(where, ptr, "expected \"iso\", \"all\" or a list of morphism names");
  MorphismSet out(cat.morphism_count());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.insert(cat.morphism(text(j[i], where, ptr + "/" + std::to_string(i))));
  return out;
}

}  // namespace

json parse_json(const std::string& content, const std::string& origin) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    parse_error(origin, "byte " + std::to_string(e.byte), "malformed JSON");
  }
}

json read_json(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file", {file.string(), "byte 0"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), file.string());
}

FileKind detect(const json& doc) {
  if (doc.is_object()) {
    if (doc.contains("fibers")) return FileKind::Indexed;
    if (doc.contains("left") || doc.contains("right")) return FileKind::System;
    if (doc.contains("source") && doc.contains("target")) return FileKind::Functor;
  }
  return FileKind::Category;
}

CategoryPtr load_category(const json& ref, const fs::path& dir, const std::string& where) {
  return category_at(ref, dir, where, "");
}

CategoryPtr load_category(const fs::path& file) {
  return load_category(read_json(file), file.parent_path(), file.string());
}

FunctorFile load_functor(const json& doc, const fs::path& dir, const std::string& where) {
  CategoryPtr src = category_at(field(doc, "source", where, ""), dir, where, "/source");
  CategoryPtr tgt = category_at(field(doc, "target", where, ""), dir, where, "/target");
  FunctorFile out{functor_maps(src, tgt, doc, where, ""), std::nullopt};
  if (auto it = doc.find("section"); it != doc.end())
    out.section = functor_maps(tgt, src, *it, where, "/section");
  return out;
}

FunctorFile load_functor(const fs::path& file) {
  return load_functor(read_json(file), file.parent_path(), file.string());
}

ClassPair load_system(const json& doc, const fs::path& dir, const std::string& where) {
  CategoryPtr cat = category_at(field(doc, "category", where, ""), dir, where, "/category");
  MorphismSet left = class_of(*cat, field(doc, "left", where, ""), where, "/left");
  MorphismSet right = class_of(*cat, field(doc, "right", where, ""), where, "/right");
  return ClassPair{std::move(cat), std::move(left), std::move(right)};
}

ClassPair load_system(const fs::path& file) {
  return load_system(read_json(file), file.parent_path(), file.string());
}

IndexedCategory load_indexed(const json& doc, const fs::path& dir, const std::string& where) {
  CategoryPtr base = category_at(field(doc, "base", where, ""), dir, where, "/base");
  const json& fibers = field(doc, "fibers", where, "");
  std::vector<CategoryPtr> fs;
  for (ObjId b = 0; b < base->object_count(); ++b) {
    const std::string& name = base->object_name(b);
    fs.push_back(category_at(field(fibers, name, where, "/fibers"), dir, where, "/fibers/" + name));
  }
  const json empty = json::object();
  const json& reindex = doc.contains("reindex") ? doc["reindex"] : empty;
  std::vector<Functor> re;
  for (MorId f = 0; f < base->morphism_count(); ++f) {
    const std::string& name = base->morphism_name(f);
    const CategoryPtr& src = fs[base->target(f)];
    const CategoryPtr& tgt = fs[base->source(f)];
    auto it = reindex.find(name);
    if (it == reindex.end()) {
      if (!base->is_identity(f)) parse_error(where, "/reindex", "missing reindexing for '" + name + "'");
      re.push_back(Functor::identity(src));
    } else {
      re.push_back(functor_maps(src, tgt, *it, where, "/reindex/" + name));
    }
  }
  return IndexedCategory::validate(std::move(base), std::move(fs), std::move(re));
}

IndexedCategory load_indexed(const fs::path& file) {
  return load_indexed(read_json(file), file.parent_path(), file.string());
}

ordered_json category_json(const Category& cat) {
  CategoryDescription d = cat.describe();
  ordered_json j;
  j["objects"] = d.objects;
  ordered_json mors = ordered_json::array();
  for (const auto& m : d.morphisms) mors.push_back({{"name", m.name}, {"src", m.src}, {"dst", m.dst}});
  j["morphisms"] = std::move(mors);
  ordered_json ids = ordered_json::object();
  for (const auto& [obj, id] : d.identities) ids[obj] = id;
  j["identities"] = std::move(ids);
  ordered_json comp = ordered_json::array();
  for (const auto& c : d.compose) comp.push_back({{"g", c.g}, {"f", c.f}, {"result", c.result}});
  j["compose"] = std::move(comp);
  return j;
}

ordered_json system_json(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  auto names = [&](const MorphismSet& s) {
    ordered_json out = ordered_json::array();
    for (MorId m : s.members()) out.push_back(cat.morphism_name(m));
    return out;
  };
  ordered_json j;
  j["category"] = category_json(cat);
  j["left"] = names(cp.left);
  j["right"] = names(cp.right);
  return j;
}

namespace {

ordered_json maps_json(const Functor& f) {
  const Category& s = f.source();
  const Category& t = f.target();
  ordered_json objects = ordered_json::object();
  for (ObjId x = 0; x < s.object_count(); ++x) objects[s.object_name(x)] = t.object_name(f(x));
  ordered_json morphisms = ordered_json::object();
  for (MorId m = 0; m < s.morphism_count(); ++m)
    morphisms[s.morphism_name(m)] = t.morphism_name(f.map_morphism(m));
  return {{"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}};
}

}  // namespace

ordered_json functor_json(const Functor& f, ordered_json source, ordered_json target) {
  ordered_json maps = maps_json(f);
  ordered_json j;
  j["source"] = std::move(source);
  j["target"] = std::move(target);
  j["objects"] = std::move(maps["objects"]);
  j["morphisms"] = std::move(maps["morphisms"]);
  return j;
}

ordered_json indexed_json(const IndexedCategory& ix) {
  const Category& b = ix.base();
  ordered_json j;
  j["base"] = category_json(b);
  ordered_json fibers = ordered_json::object();
  for (ObjId x = 0; x < b.object_count(); ++x) fibers[b.object_name(x)] = category_json(ix.fiber(x));
  j["fibers"] = std::move(fibers);
  ordered_json reindex = ordered_json::object();
  for (MorId f = 0; f < b.morphism_count(); ++f)
    if (!b.is_identity(f)) reindex[b.morphism_name(f)] = maps_json(ix.reindex(f));
  j["reindex"] = std::move(reindex);
  return j;
}

void write_json(const fs::path& file, const ordered_json& doc) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write file", {file.string(), "byte 0"});
  out << doc.dump(2) << '\n';
}

}  // namespace fibcat::io
