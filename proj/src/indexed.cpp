#include "fibcat/indexed.hpp"

#include "fibcat/error.hpp"

namespace fibcat {

IndexedCategory IndexedCategory::validate(CategoryPtr base, std::vector<CategoryPtr> fibers,
                                          std::vector<Functor> reindex) {
  const Category& b = *base;
  if (fibers.size() != b.object_count())
    throw Error(ErrorKind::MalformedInput, "one fiber per base object required",
                {std::to_string(fibers.size()), std::to_string(b.object_count())});
  if (reindex.size() != b.morphism_count())
    throw Error(ErrorKind::MalformedInput, "one reindexing functor per base morphism required",
                {std::to_string(reindex.size()), std::to_string(b.morphism_count())});
  for (MorId f = 0; f < b.morphism_count(); ++f) {
    const Functor& r = reindex[f];
    if (!(r.source() == *fibers[b.target(f)]) || !(r.target() == *fibers[b.source(f)]))
      throw Error(ErrorKind::TypeMismatch, "reindexing functor has the wrong fibers",
                  {b.morphism_name(f)});
  }
  for (ObjId x = 0; x < b.object_count(); ++x) {
    const Functor& r = reindex[b.identity(x)];
    for (ObjId e = 0; e < r.source().object_count(); ++e)
      if (r(e) != e)
        throw Error(ErrorKind::AxiomViolation, "strictness: identity reindexing",
                    {b.morphism_name(b.identity(x)), r.source().object_name(e)});
    for (MorId m = 0; m < r.source().morphism_count(); ++m)
      if (r.map_morphism(m) != m)
        throw Error(ErrorKind::AxiomViolation, "strictness: identity reindexing",
                    {b.morphism_name(b.identity(x)), r.source().morphism_name(m)});
  }
  for (MorId f = 0; f < b.morphism_count(); ++f)
    for (MorId g : b.outgoing(b.target(f))) {
      const Functor& gf = reindex[b.compose(g, f)];
      const Functor& rf = reindex[f];
      const Functor& rg = reindex[g];
      const Category& src = gf.source();
      for (ObjId e = 0; e < src.object_count(); ++e)
        if (gf(e) != rf(rg(e)))
          throw Error(ErrorKind::AxiomViolation, "strictness: composite reindexing",
                      {b.morphism_name(g), b.morphism_name(f), src.object_name(e)});
      for (MorId m = 0; m < src.morphism_count(); ++m)
        if (gf.map_morphism(m) != rf.map_morphism(rg.map_morphism(m)))
          throw Error(ErrorKind::AxiomViolation, "strictness: composite reindexing",
                      {b.morphism_name(g), b.morphism_name(f), src.morphism_name(m)});
    }
  return IndexedCategory(std::move(base), std::move(fibers), std::move(reindex));
}

bool operator==(const IndexedCategory& a, const IndexedCategory& b) {
  if (!(*a.base_ == *b.base_) || a.fibers_.size() != b.fibers_.size()) return false;
  for (std::size_t i = 0; i < a.fibers_.size(); ++i)
    if (!(*a.fibers_[i] == *b.fibers_[i])) return false;
  return a.reindex_ == b.reindex_;
}

IndexedCategory fiberwise_opposite(const IndexedCategory& ix) {
  const Category& b = ix.base();
  std::vector<CategoryPtr> ops;
  ops.reserve(b.object_count());
  for (const auto& e : ix.fibers()) ops.push_back(std::make_shared<const Category>(e->opposite()));
  std::vector<Functor> re;
  re.reserve(b.morphism_count());
  for (MorId f = 0; f < b.morphism_count(); ++f) {
    const Functor& r = ix.reindex(f);
    re.push_back(Functor::validate(ops[b.target(f)], ops[b.source(f)], r.object_map(),
                                   r.morphism_map()));
  }
  return IndexedCategory::validate(ix.base_ptr(), std::move(ops), std::move(re));
}

MorId GrothTotal::morphism_of(MorId base, MorId fiber, ObjId target_fiber) const {
  auto it = morphism_table.find({base, fiber, target_fiber});
  return it == morphism_table.end() ? kNoMorphism : it->second;
}

namespace {

GrothTotal build_total(const IndexedCategory& ix, const IndexedCategory& keep) {
  const Category& b = ix.base();
  CategoryBuilder cb;
  std::vector<TotalObject> objects;
  std::vector<std::vector<ObjId>> object_table(b.object_count());
  for (ObjId x = 0; x < b.object_count(); ++x)
    for (ObjId e = 0; e < ix.fiber(x).object_count(); ++e) {
      object_table[x].push_back(
          cb.add_object(ix.fiber(x).object_name(e) + "@" + b.object_name(x)));
      objects.push_back({x, e});
    }

  std::vector<TotalMorphism> morphisms;
  std::map<std::tuple<MorId, MorId, ObjId>, MorId> table;
  for (ObjId src = 0; src < objects.size(); ++src)
    for (ObjId dst = 0; dst < objects.size(); ++dst) {
      const auto [x, e] = objects[src];
      const auto [y, e2] = objects[dst];
      for (MorId f : b.hom(x, y)) {
        const Category& fx = ix.fiber(x);
        for (MorId s : fx.hom(e, ix.reindex(f)(e2))) {
          MorId id = cb.add_morphism(fx.morphism_name(s) + "@" + b.morphism_name(f) + ">" +
                                         ix.fiber(y).object_name(e2),
                                     src, dst);
          morphisms.push_back({f, s, e2});
          table.emplace(std::make_tuple(f, s, e2), id);
        }
      }
    }
  for (ObjId o = 0; o < objects.size(); ++o) {
    const auto [x, e] = objects[o];
    cb.set_identity(o, table.at({b.identity(x), ix.fiber(x).identity(e), e}));
  }
  cb.fill_composition([&](MorId g, MorId f) {
    const TotalMorphism& mf = morphisms[f];
    const TotalMorphism& mg = morphisms[g];
    const ObjId x = b.source(mf.base);
    MorId fiber = ix.fiber(x).compose(ix.reindex(mf.base).map_morphism(mg.fiber), mf.fiber);
    return table.at({b.compose(mg.base, mf.base), fiber, mg.target_fiber});
  });

  CategoryPtr total;
  try {
    total = std::move(cb).build_shared();
  } catch (const Error& err) {
    std::vector<std::string> w{err.clause()};
    w.insert(w.end(), err.witnesses().begin(), err.witnesses().end());
    throw Error(ErrorKind::InternalConsistency, "Grothendieck construction rejected", w);
  }

  std::vector<ObjId> omap;
  for (const auto& o : objects) omap.push_back(o.base);
  std::vector<MorId> mmap;
  for (const auto& m : morphisms) mmap.push_back(m.base);
  Functor p = Functor::validate(total, ix.base_ptr(), std::move(omap), std::move(mmap));

  // Chosen lifts ⟨id, f⟩ : ⟨f*E', B⟩ → ⟨E', B'⟩.
  std::map<std::pair<ObjId, MorId>, MorId> lifts;
  for (ObjId o = 0; o < objects.size(); ++o) {
    const auto [y, e2] = objects[o];
    for (MorId f : b.incoming(y)) {
      ObjId x = b.source(f);
      ObjId pulled = ix.reindex(f)(e2);
      lifts.emplace(std::make_pair(o, f),
                    table.at({f, ix.fiber(x).identity(pulled), e2}));
    }
  }
  FibrationWitness fw = [&] {
    try {
      return FibrationWitness::from_lifts(p, lifts);
    } catch (const Error& err) {
      std::vector<std::string> w{err.clause()};
      w.insert(w.end(), err.witnesses().begin(), err.witnesses().end());
      throw Error(ErrorKind::InternalConsistency, "Grothendieck projection is not a fibration", w);
    }
  }();
  return GrothTotal{keep,     std::move(total),   std::move(p),      std::move(fw),
                    std::move(objects), std::move(morphisms), std::move(object_table),
                    std::move(table)};
}

}  // namespace

GrothTotal grothendieck(const IndexedCategory& ix) { return build_total(ix, ix); }

GrothTotal lens_category(const IndexedCategory& ix) {
  return build_total(fiberwise_opposite(ix), ix);
}

Lens lens_of(const GrothTotal& lenses, MorId m) {
  const TotalMorphism& t = lenses.morphisms.at(m);
  const ObjId src = lenses.total->source(m);
  return Lens{t.base, t.fiber, lenses.objects[src].fiber, t.target_fiber};
}

MorId morphism_of(const GrothTotal& lenses, const Lens& l) {
  MorId m = lenses.morphism_of(l.base, l.sharp, l.target_fiber);
  if (m == kNoMorphism || lenses.objects[lenses.total->source(m)].fiber != l.source_fiber)
    return kNoMorphism;
  return m;
}

Lens identity_lens(const IndexedCategory& ix, ObjId b, ObjId e) {
  return Lens{ix.base().identity(b), ix.fiber(b).identity(e), e, e};
}

Lens compose_lenses(const IndexedCategory& ix, const Lens& l2, const Lens& l1) {
  const Category& b = ix.base();
  if (b.target(l1.base) != b.source(l2.base) || l1.target_fiber != l2.source_fiber)
    throw Error(ErrorKind::TypeMismatch, "lenses are not composable",
                {b.morphism_name(l2.base), b.morphism_name(l1.base)});
  const ObjId x = b.source(l1.base);
  const Category& e = ix.fiber(x);
  MorId sharp = e.compose(l1.sharp, ix.reindex(l1.base).map_morphism(l2.sharp));
  return Lens{b.compose(l2.base, l1.base), sharp, l1.source_fiber, l2.target_fiber};
}

}  // namespace fibcat
