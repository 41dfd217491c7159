#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "fibcat/functor.hpp"
#include "fibcat/indexed.hpp"
#include "fibcat/ofs.hpp"

namespace fibcat::io {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

enum class FileKind { Category, Functor, System, Indexed };

/// Throws ParseError(file, "byte N") on malformed JSON.
json read_json(const fs::path& file);
json parse_json(const std::string& text, const std::string& origin);

/// Category: objects, morphisms, identities, compose.
/// Functor: source, target, objects, morphisms and an optional section.
/// System: category, left, right.
/// Indexed: base, fibers, reindex.
FileKind detect(const json& doc);

/// A category reference is an inline category object or a path relative to
/// `dir`. `where` names the enclosing file for diagnostics.
CategoryPtr load_category(const json& ref, const fs::path& dir, const std::string& where);
CategoryPtr load_category(const fs::path& file);

struct FunctorFile {
  Functor functor;
  std::optional<Functor> section;  // target → source
};
FunctorFile load_functor(const json& doc, const fs::path& dir, const std::string& where);
FunctorFile load_functor(const fs::path& file);

/// Classes are lists of morphism names or one of "iso", "all".
ClassPair load_system(const json& doc, const fs::path& dir, const std::string& where);
ClassPair load_system(const fs::path& file);

/// Missing reindexing entries for identities default to identity functors.
IndexedCategory load_indexed(const json& doc, const fs::path& dir, const std::string& where);
IndexedCategory load_indexed(const fs::path& file);

ordered_json category_json(const Category& cat);
ordered_json system_json(const ClassPair& cp);
/// Maps only; `source` and `target` are written as given.
ordered_json functor_json(const Functor& f, ordered_json source, ordered_json target);
ordered_json indexed_json(const IndexedCategory& ix);

void write_json(const fs::path& file, const ordered_json& doc);

}  // namespace fibcat::io
