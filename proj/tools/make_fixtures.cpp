// Writes the shipped fixture bundle. Output is deterministic; rerun after
// changing a builder and commit the result.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fibcat/builders.hpp"
#include "fibcat/error.hpp"
#include "fibcat/io.hpp"

namespace {

using namespace fibcat;
using io::ordered_json;
namespace fs = std::filesystem;

fs::path out_dir;

void emit(const std::string& name, const ordered_json& doc) { io::write_json(out_dir / name, doc); }

ordered_json names(const Category& c, const MorphismSet& s) {
  ordered_json out = ordered_json::array();
  for (MorId m : s.members()) out.push_back(c.morphism_name(m));
  return out;
}

ordered_json system(const std::string& cat_file, const ordered_json& left, const ordered_json& right) {
  ordered_json j;
  j["category"] = cat_file;
  j["left"] = left;
  j["right"] = right;
  return j;
}

// Square  X --t--> Y  over  X' --b--> Y'  (p : X → X', q : Y → Y') is a
// pullback when every commuting cone (u : W → X', v : W → Y) factors through
// exactly one w : W → X. Brute force over the composition table.
bool is_pullback_square(const Category& c, MorId p, MorId q, MorId t, MorId b) {
  for (ObjId w = 0; w < c.object_count(); ++w)
    for (MorId u : c.hom(w, c.source(b)))
      for (MorId v : c.hom(w, c.source(q))) {
        if (c.compose(b, u) != c.compose(q, v)) continue;
        int found = 0;
        for (MorId k : c.hom(w, c.source(p)))
          if (c.compose(p, k) == u && c.compose(t, k) == v) ++found;
        if (found != 1) return false;
      }
  return true;
}

bool is_iso(const Category& c, MorId f) {
  for (MorId g : c.hom(c.target(f), c.source(f)))
    if (c.is_identity(c.compose(g, f)) && c.is_identity(c.compose(f, g))) return true;
  return false;
}

void simple(const std::string& stem, const CategoryPtr& cat) {
  emit(stem + ".cat", io::category_json(*cat));
  emit(stem + "_iso_all.sys", system(stem + ".cat", "iso", "all"));
  emit(stem + "_all_iso.sys", system(stem + ".cat", "all", "iso"));
}

void arrow_fixture() {
  CategoryPtr fix4 = builders::finite_sets(2);
  auto arr = builders::arrow_category(fix4, [&](MorId f) { return builders::is_monomorphism(*fix4, f); });
  const Category& c4 = *fix4;
  const Category& c5 = *arr.category;
  emit("fix5.cat", io::category_json(c5));

  // Codomain functor with the identity section S ↦ id_S.
  ordered_json fun = io::functor_json(arr.codomain, "fix5.cat", "fix4.cat");
  ordered_json sec_obj = ordered_json::object();
  ordered_json sec_mor = ordered_json::object();
  for (ObjId s = 0; s < c4.object_count(); ++s) sec_obj[c4.object_name(s)] = c4.morphism_name(c4.identity(s));
  for (MorId g = 0; g < c4.morphism_count(); ++g) {
    const std::string src = c4.morphism_name(c4.identity(c4.source(g)));
    const std::string dst = c4.morphism_name(c4.identity(c4.target(g)));
    sec_mor[c4.morphism_name(g)] = src + ">" + dst + ":" + c4.morphism_name(g) + "," + c4.morphism_name(g);
  }
  fun["section"] = {{"objects", sec_obj}, {"morphisms", sec_mor}};
  emit("fix5.fun", fun);

  // Vertical squares (iso bottom) and pullback squares.
  MorphismSet left(c5.morphism_count()), right(c5.morphism_count());
  for (MorId m = 0; m < c5.morphism_count(); ++m) {
    auto [top, bottom] = arr.square[m];
    MorId p = arr.arrow_of_object[c5.source(m)];
    MorId q = arr.arrow_of_object[c5.target(m)];
    if (is_iso(c4, bottom)) left.insert(m);
    if (is_pullback_square(c4, p, q, top, bottom)) right.insert(m);
  }
  emit("fix5.sys", system("fix5.cat", names(c5, left), names(c5, right)));

  // Mutation: the pullback square  (S0 → S1) ⇒ (S0 → S2)  dropped from right.
  MorphismSet no_square = right;
  no_square.erase(c5.morphism("f01>f02:id0,f12_0"));
  emit("fix5_drop_pullback.sys", system("fix5.cat", names(c5, left), names(c5, no_square)));

  // Mutation: a non-iso map between injectives (identity arrows) dropped from right.
  MorphismSet no_injective = right;
  for (MorId m = 0; m < c5.morphism_count(); ++m) {
    auto [top, bottom] = arr.square[m];
    const bool between_ids = c4.is_identity(arr.arrow_of_object[c5.source(m)]) &&
                             c4.is_identity(arr.arrow_of_object[c5.target(m)]);
    if (between_ids && !is_iso(c4, bottom)) {
      no_injective.erase(m);
      break;
    }
  }
  emit("fix5_drop_injective.sys", system("fix5.cat", names(c5, left), names(c5, no_injective)));
}

void indexed_fixtures() {
  emit("fix6.idx", io::indexed_json(builders::arrow_indexed()));
  ordered_json plus = io::indexed_json(builders::fork_indexed());
  emit("fix6plus.idx", plus);
  // Composite reindexing redirected: wu* ≠ u* ∘ w*.
  plus["reindex"]["wu"]["objects"]["*"] = "e0";
  plus["reindex"]["wu"]["morphisms"]["id_*"] = "id_e0";
  emit("fix6plus_nonstrict.idx", plus);
}

void misc_fixtures() {
  emit("pair.cat", io::category_json(*builders::parallel_pair()));
  emit("pair_all_iso.sys", system("pair.cat", "all", "iso"));
  emit("fix2_all_all.sys", system("fix2.cat", "all", "all"));

  // Inclusion 𝟙 → 𝟚 hitting the codomain: u has no lift.
  CategoryPtr one = builders::terminal_category();
  CategoryPtr two = builders::walking_arrow();
  Functor incl = builders::functor_by_name(one, two, {{"*", "b"}}, {});
  emit("incl_b.fun", io::functor_json(incl, "fix1.cat", "fix2.cat"));
  // Unique functor FIX-4 → 𝟙.
  CategoryPtr fix4 = builders::finite_sets(2);
  std::vector<std::pair<std::string, std::string>> to_point;
  for (MorId f = 0; f < fix4->morphism_count(); ++f) to_point.emplace_back(fix4->morphism_name(f), "id_*");
  Functor bang = builders::functor_by_name(fix4, one, {{"S0", "*"}, {"S1", "*"}, {"S2", "*"}}, to_point);
  emit("fix4_terminal.fun", io::functor_json(bang, "fix4.cat", "fix1.cat"));
  Functor id4 = Functor::identity(fix4);
  emit("fix4_identity.fun", io::functor_json(id4, "fix4.cat", "fix4.cat"));

  // Composition table with a broken identity law.
  ordered_json bad = io::category_json(*two);
  for (auto& entry : bad["compose"])
    if (entry["g"] == "u" && entry["f"] == "id_a") entry["result"] = "id_a";
  emit("bad_identity.cat", bad);
}

struct Check {
  std::string name;
  std::string command;
  std::vector<std::string> inputs;
  bool pass = true;
  bool span = false;
};

void bundle() {
  const std::vector<Check> checks{
      {"validate-fix1", "validate", {"fix1.cat"}},
      {"validate-fix4", "validate", {"fix4.cat"}},
      {"validate-fix5", "validate", {"fix5.cat"}},
      {"validate-fix5-functor", "validate", {"fix5.fun"}},
      {"validate-fix6", "validate", {"fix6.idx"}},
      {"reject-bad-identity", "validate", {"bad_identity.cat"}, false},
      {"reject-nonstrict-index", "validate", {"fix6plus_nonstrict.idx"}, false},
      {"lemmas-fix1", "cartesian", {"fix1_iso_all.sys"}},
      {"lemmas-fix2-iso-all", "cartesian", {"fix2_iso_all.sys"}},
      {"lemmas-fix2-all-iso", "cartesian", {"fix2_all_iso.sys"}},
      {"lemmas-fix3-iso-all", "cartesian", {"fix3_iso_all.sys"}},
      {"lemmas-fix4-iso-all", "cartesian", {"fix4_iso_all.sys"}},
      {"lemmas-fix4-all-iso", "cartesian", {"fix4_all_iso.sys"}},
      {"lemmas-fix5", "cartesian", {"fix5.sys"}},
      {"mutation-drop-pullback", "cartesian", {"fix5_drop_pullback.sys"}, false},
      {"mutation-all-all", "cartesian", {"fix2_all_all.sys"}, false},
      {"factorize-fix5", "factorize", {"fix5.sys"}},
      {"injectives-fix4", "injectives", {"fix4_iso_all.sys"}},
      {"injectives-fix5", "injectives", {"fix5.sys"}},
      {"mutation-drop-injective", "injectives", {"fix5_drop_injective.sys"}, false},
      {"no-injectives", "injectives", {"pair_all_iso.sys"}, false},
      {"fibration-codomain", "fibration", {"fix5.fun"}},
      {"fibration-identity", "fibration", {"fix4_identity.fun"}},
      {"not-a-fibration", "fibration", {"incl_b.fun"}, false},
      {"phi-codomain", "phi", {"fix5.fun", "fix5.sys"}},
      {"phi-identity", "phi", {"fix4_identity.fun", "fix4_iso_all.sys"}},
      {"phi-terminal", "phi", {"fix4_terminal.fun", "fix4_all_iso.sys"}},
      {"xi-fix5", "xi", {"fix5.sys"}},
      {"xi-no-injectives", "xi", {"pair_all_iso.sys"}, false},
      {"roundtrip-fix4-iso-all", "roundtrip", {"fix4_iso_all.sys"}},
      {"roundtrip-fix4-all-iso", "roundtrip", {"fix4_all_iso.sys"}},
      {"roundtrip-fix5", "roundtrip", {"fix5.sys"}},
      {"roundtrip-codomain", "roundtrip", {"fix5.fun"}},
      {"dual-fix5", "dual", {"fix5.sys"}},
      {"double-dual-fix2", "double-dual", {"fix2_iso_all.sys"}},
      {"double-dual-fix4-iso-all", "double-dual", {"fix4_iso_all.sys"}},
      {"double-dual-fix4-all-iso", "double-dual", {"fix4_all_iso.sys"}},
      {"double-dual-fix5", "double-dual", {"fix5.sys"}},
      {"lens-fix6", "lens", {"fix6.idx"}},
      {"lens-fix6plus", "lens", {"fix6plus.idx"}},
      {"op-square-fix6", "op-square", {"fix6.idx"}},
      {"op-square-fix6plus", "op-square", {"fix6plus.idx"}},
      {"double-fix6", "double", {"fix6.idx"}},
      {"double-span-fix4", "double", {"fix4_iso_all.sys"}, true, true},
      {"double-span-fix5", "double", {"fix5.sys"}, true, true},
      {"double-equiv-fix6", "double-equiv", {"fix6.idx"}},
      {"double-equiv-fix6plus", "double-equiv", {"fix6plus.idx"}},
  };
  ordered_json list = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["command"] = c.command;
    e["inputs"] = c.inputs;
    e["expect"] = c.pass ? "pass" : "fail";
    if (c.span) e["span"] = true;
    list.push_back(std::move(e));
  }
  emit("bundle.json", {{"checks", std::move(list)}});
}

}  // namespace

int main(int argc, char** argv) {
  out_dir = argc > 1 ? argv[1] : "fixtures";
  try {
    fs::create_directories(out_dir);
    simple("fix1", builders::terminal_category());
    simple("fix2", builders::walking_arrow());
    simple("fix3", builders::walking_isomorphism());
    simple("fix4", builders::finite_sets(2));
    arrow_fixture();
    indexed_fixtures();
    misc_fixtures();
    bundle();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
