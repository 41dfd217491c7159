#include "fibcat/builders.hpp"

#include <map>

namespace fibcat::builders {

CategoryPtr terminal_category() {
  CategoryBuilder b;
  ObjId x = b.add_object("*");
  b.set_identity(x, b.add_morphism("id_*", x, x));
  b.fill_composition([](MorId, MorId) { return MorId{0}; });
  return std::move(b).build_shared();
}

CategoryPtr walking_arrow() {
  CategoryBuilder b;
  ObjId a = b.add_object("a");
  ObjId c = b.add_object("b");
  MorId ida = b.add_morphism("id_a", a, a);
  MorId idb = b.add_morphism("id_b", c, c);
  b.add_morphism("u", a, c);
  b.set_identity(a, ida);
  b.set_identity(c, idb);
  b.fill_composition([&](MorId g, MorId f) { return g == ida || g == idb ? f : g; });
  return std::move(b).build_shared();
}

CategoryPtr walking_isomorphism() {
  CategoryBuilder b;
  ObjId a = b.add_object("a");
  ObjId c = b.add_object("b");
  MorId ida = b.add_morphism("id_a", a, a);
  MorId idb = b.add_morphism("id_b", c, c);
  b.add_morphism("i", a, c);
  MorId j = b.add_morphism("j", c, a);
  b.set_identity(a, ida);
  b.set_identity(c, idb);
  b.fill_composition([&](MorId g, MorId f) {
    if (g == ida || g == idb) return f;
    if (f == ida || f == idb) return g;
    return g == j ? ida : idb;  // j∘i or i∘j
  });
  return std::move(b).build_shared();
}

CategoryPtr discrete(const std::vector<std::string>& objects) {
  CategoryBuilder b;
  for (const auto& name : objects) {
    ObjId x = b.add_object(name);
    b.set_identity(x, b.add_morphism("id_" + name, x, x));
  }
  b.fill_composition([](MorId g, MorId) { return g; });
  return std::move(b).build_shared();
}

CategoryPtr finite_sets(int max_size) {
  CategoryBuilder b;
  for (int n = 0; n <= max_size; ++n) b.add_object("S" + std::to_string(n));
  std::map<std::tuple<int, int, std::vector<int>>, MorId> by_graph;
  std::vector<std::vector<int>> graph;
  for (int a = 0; a <= max_size; ++a)
    for (int c = 0; c <= max_size; ++c) {
      if (a > 0 && c == 0) continue;
      std::vector<int> img(static_cast<std::size_t>(a), 0);
      while (true) {
        bool identity = a == c;
        std::string digits;
        for (int i = 0; i < a; ++i) {
          identity = identity && img[static_cast<std::size_t>(i)] == i;
          digits += static_cast<char>('0' + img[static_cast<std::size_t>(i)]);
        }
        std::string name = identity ? "id" + std::to_string(a)
                                    : "f" + std::to_string(a) + std::to_string(c) +
                                          (digits.empty() ? "" : "_" + digits);
        MorId m = b.add_morphism(name, static_cast<ObjId>(a), static_cast<ObjId>(c));
        if (identity) b.set_identity(static_cast<ObjId>(a), m);
        by_graph.emplace(std::make_tuple(a, c, img), m);
        graph.push_back(img);
        // Next image tuple in lexicographic order.
        int pos = a - 1;
        while (pos >= 0 && img[static_cast<std::size_t>(pos)] == c - 1) img[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++img[static_cast<std::size_t>(pos)];
      }
    }
  b.fill_composition([&](MorId g, MorId f) {
    std::vector<int> img;
    for (int x : graph[f]) img.push_back(graph[g][static_cast<std::size_t>(x)]);
    return by_graph.at({static_cast<int>(b.source(f)), static_cast<int>(b.target(g)), img});
  });
  return std::move(b).build_shared();
}

bool is_monomorphism(const Category& cat, MorId f) {
  for (ObjId z = 0; z < cat.object_count(); ++z) {
    auto homs = cat.hom(z, cat.source(f));
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (std::size_t j = i + 1; j < homs.size(); ++j)
        if (cat.compose(f, homs[i]) == cat.compose(f, homs[j])) return false;
  }
  return true;
}

ArrowCategory arrow_category(const CategoryPtr& base, const std::function<bool(MorId)>& keep) {
  const Category& c = *base;
  CategoryBuilder b;
  std::vector<MorId> arrows;
  for (MorId p = 0; p < c.morphism_count(); ++p)
    if (keep(p)) {
      b.add_object(c.morphism_name(p));
      arrows.push_back(p);
    }
  std::vector<std::pair<MorId, MorId>> squares;
  std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> index;
  for (ObjId x = 0; x < arrows.size(); ++x)
    for (ObjId y = 0; y < arrows.size(); ++y) {
      MorId p = arrows[x], q = arrows[y];
      for (MorId bottom : c.hom(c.target(p), c.target(q)))
        for (MorId top : c.hom(c.source(p), c.source(q))) {
          if (c.compose(q, top) != c.compose(bottom, p)) continue;
          std::string name = c.morphism_name(p) + ">" + c.morphism_name(q) + ":" +
                             c.morphism_name(top) + "," + c.morphism_name(bottom);
          MorId m = b.add_morphism(name, x, y);
          squares.emplace_back(top, bottom);
          index.emplace(std::make_tuple(x, y, top, bottom), m);
          if (x == y && c.is_identity(top) && c.is_identity(bottom)) b.set_identity(x, m);
        }
    }
  b.fill_composition([&](MorId g, MorId f) {
    auto [t1, b1] = squares[f];
    auto [t2, b2] = squares[g];
    return index.at({b.source(f), b.target(g), c.compose(t2, t1), c.compose(b2, b1)});
  });
  CategoryPtr cat = std::move(b).build_shared();
  std::vector<ObjId> cod_obj;
  for (MorId p : arrows) cod_obj.push_back(c.target(p));
  std::vector<MorId> cod_mor;
  for (const auto& sq : squares) cod_mor.push_back(sq.second);
  Functor cod = Functor::validate(cat, base, cod_obj, cod_mor);
  return ArrowCategory{cat, std::move(cod), std::move(arrows), std::move(squares)};
}

}  // namespace fibcat::builders

namespace fibcat::builders {

CategoryPtr small_category(const std::vector<std::string>& objects,
                           const std::vector<Generator>& morphisms,
                           const std::vector<Composite>& composites) {
  CategoryDescription d;
  d.objects = objects;
  for (const auto& x : objects) {
    d.morphisms.push_back({"id_" + x, x, x});
    d.identities.emplace_back(x, "id_" + x);
  }
  for (const auto& m : morphisms) {
    d.morphisms.push_back({m.name, m.src, m.dst});
    d.compose.push_back({m.name, "id_" + m.src, m.name});
    d.compose.push_back({"id_" + m.dst, m.name, m.name});
  }
  for (const auto& x : objects) d.compose.push_back({"id_" + x, "id_" + x, "id_" + x});
  for (const auto& c : composites) d.compose.push_back({c.g, c.f, c.result});
  return std::make_shared<const Category>(Category::validate(d));
}

Functor functor_by_name(const CategoryPtr& src, const CategoryPtr& tgt,
                        const std::vector<std::pair<std::string, std::string>>& objects,
                        const std::vector<std::pair<std::string, std::string>>& morphisms) {
  std::vector<ObjId> omap(src->object_count(), kNoObject);
  std::vector<MorId> mmap(src->morphism_count(), kNoMorphism);
  for (const auto& [a, b] : objects) omap[src->object(a)] = tgt->object(b);
  for (const auto& [f, g] : morphisms) mmap[src->morphism(f)] = tgt->morphism(g);
  for (ObjId x = 0; x < src->object_count(); ++x)
    if (omap[x] != kNoObject && mmap[src->identity(x)] == kNoMorphism)
      mmap[src->identity(x)] = tgt->identity(omap[x]);
  return Functor::validate(src, tgt, std::move(omap), std::move(mmap));
}

IndexedCategory arrow_indexed() {
  auto base = small_category({"b0", "b1"}, {{"u", "b0", "b1"}});
  auto e0 = small_category({"e0", "e1"}, {{"a", "e0", "e1"}});
  auto e1 = small_category({"*"}, {});
  std::vector<Functor> re;
  re.push_back(Functor::identity(e0));
  re.push_back(Functor::identity(e1));
  re.push_back(functor_by_name(e1, e0, {{"*", "e1"}}, {}));
  return IndexedCategory::validate(base, {e0, e1}, std::move(re));
}

IndexedCategory fork_indexed() {
  auto base = small_category(
      {"b0", "b1", "b2"},
      {{"u", "b0", "b1"}, {"v", "b0", "b1"}, {"w", "b1", "b2"}, {"wu", "b0", "b2"},
       {"wv", "b0", "b2"}},
      {{"w", "u", "wu"}, {"w", "v", "wv"}});
  auto e0 = small_category({"e0", "e1"}, {{"a", "e0", "e1"}});
  auto e1 = small_category({"x0", "x1"}, {{"c", "x0", "x1"}});
  auto e2 = small_category({"*"}, {});
  const std::vector<CategoryPtr> fibers{e0, e1, e2};
  std::vector<Functor> re;
  for (MorId f = 0; f < base->morphism_count(); ++f) {
    const std::string& n = base->morphism_name(f);
    if (base->is_identity(f))
      re.push_back(Functor::identity(fibers[base->source(f)]));
    else if (n == "u")
      re.push_back(functor_by_name(e1, e0, {{"x0", "e0"}, {"x1", "e1"}}, {{"c", "a"}}));
    else if (n == "v")
      re.push_back(functor_by_name(e1, e0, {{"x0", "e1"}, {"x1", "e1"}}, {{"c", "id_e1"}}));
    else if (n == "w")
      re.push_back(functor_by_name(e2, e1, {{"*", "x1"}}, {}));
    else
      re.push_back(functor_by_name(e2, e0, {{"*", "e1"}}, {}));
  }
  return IndexedCategory::validate(base, fibers, std::move(re));
}

IndexedCategory constant_terminal(const CategoryPtr& base) {
  auto one = terminal_category();
  std::vector<CategoryPtr> fibers(base->object_count(), one);
  std::vector<Functor> re(base->morphism_count(), Functor::identity(one));
  return IndexedCategory::validate(base, std::move(fibers), std::move(re));
}

}  // namespace fibcat::builders

namespace fibcat::builders {

CategoryPtr parallel_pair() {
  return small_category({"a", "b"}, {{"s", "a", "b"}, {"t", "a", "b"}});
}

}  // namespace fibcat::builders
