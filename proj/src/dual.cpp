#include "fibcat/dual.hpp"

#include <set>

#include "fibcat/error.hpp"

namespace fibcat {

SpanMorphism make_span(const CartesianFS& cfs, MorId left, MorId right) {
  const Category& c = cfs.carrier();
  if (c.source(left) != c.source(right))
    throw Error(ErrorKind::TypeMismatch, "span legs do not share an apex",
                {c.morphism_name(left), c.morphism_name(right)});
  if (!cfs.left(left))
    throw Error(ErrorKind::TypeMismatch, "span left leg not in the left class", {c.morphism_name(left)});
  if (!cfs.right(right))
    throw Error(ErrorKind::TypeMismatch, "span right leg not in the right class",
                {c.morphism_name(right)});
  return SpanMorphism{c.target(left), c.target(right), c.source(left), left, right};
}

CanonicalSpan canonical_form(const CartesianFS& cfs, const SpanMorphism& s) {
  const Category& c = cfs.carrier();
  CanonicalSpan best{s, c.identity(s.apex)};
  for (MorId phi : c.incoming(s.apex)) {
    if (!c.is_isomorphism(phi)) continue;
    SpanMorphism t{s.source, s.target, c.source(phi), c.compose(s.left, phi), c.compose(s.right, phi)};
    if (t.key() < best.span.key()) best = {t, phi};
  }
  return best;
}

ComposedSpan composite_span(const CartesianFS& cfs, const SpanMorphism& s2, const SpanMorphism& s1) {
  const Category& c = cfs.carrier();
  if (s1.target != s2.source)
    throw Error(ErrorKind::TypeMismatch, "spans are not composable",
                {c.object_name(s1.target), c.object_name(s2.source)});
  PullbackSquare sq;
  auto it = cfs.stability_witnesses().find({s2.left, s1.right});
  if (it != cfs.stability_witnesses().end()) {
    sq = it->second;
  } else if (auto found = pullback(c, s1.right, s2.left)) {
    sq = *found;
  } else {
    throw Error(ErrorKind::PullbackMissing, "span composite has no pullback",
                {c.morphism_name(s1.right), c.morphism_name(s2.left)});
  }
  SpanMorphism raw{s1.source, s2.target, sq.apex, c.compose(s1.left, sq.p1),
                   c.compose(s2.right, sq.p2)};
  CanonicalSpan can = canonical_form(cfs, raw);
  return ComposedSpan{can.span, sq, can.iso};
}

std::optional<MorId> span_map(const Category& cat, const SpanMorphism& a, const SpanMorphism& b) {
  for (MorId k : cat.hom(a.apex, b.apex))
    if (cat.compose(b.left, k) == a.left && cat.compose(b.right, k) == a.right) return k;
  return std::nullopt;
}

MorId DualCategory::morphism_of(const SpanMorphism& s) const {
  SpanMorphism can = canonicalize_span(carrier, s);
  auto it = index.find(can.key());
  return it == index.end() ? kNoMorphism : it->second;
}

namespace {

[[noreturn]] void rethrow_internal(const Error& err, const std::string& what) {
  std::vector<std::string> w{std::string(to_string(err.kind())), err.clause()};
  w.insert(w.end(), err.witnesses().begin(), err.witnesses().end());
  throw Error(ErrorKind::InternalConsistency, what, w);
}

}  // namespace

DualCategory build_dual(const CartesianFS& cfs) {
  const Category& c = cfs.carrier();
  CategoryBuilder cb;
  for (ObjId x = 0; x < c.object_count(); ++x) cb.add_object(c.object_name(x));

  std::vector<SpanMorphism> spans;
  std::map<std::tuple<ObjId, MorId, MorId>, MorId> index;
  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b) {
      std::set<std::tuple<ObjId, MorId, MorId>> seen;
      std::vector<SpanMorphism> found;
      for (ObjId z = 0; z < c.object_count(); ++z)
        for (MorId l : c.hom(z, a)) {
          if (!cfs.left(l)) continue;
          for (MorId r : c.hom(z, b)) {
            if (!cfs.right(r)) continue;
            SpanMorphism can = canonicalize_span(cfs, SpanMorphism{a, b, z, l, r});
            if (seen.insert(can.key()).second) found.push_back(can);
          }
        }
      std::sort(found.begin(), found.end(),
                [](const SpanMorphism& x, const SpanMorphism& y) { return x.key() < y.key(); });
      for (const SpanMorphism& s : found) {
        MorId id = cb.add_morphism("[" + c.morphism_name(s.left) + "|" + c.morphism_name(s.right) + "]",
                                   a, b);
        spans.push_back(s);
        index.emplace(s.key(), id);
      }
    }
  for (ObjId x = 0; x < c.object_count(); ++x) {
    SpanMorphism id = canonicalize_span(cfs, SpanMorphism{x, x, x, c.identity(x), c.identity(x)});
    cb.set_identity(x, index.at(id.key()));
  }
  cb.fill_composition([&](MorId g, MorId f) {
    SpanMorphism s = compose_spans(cfs, spans[g], spans[f]);
    auto it = index.find(s.key());
    if (it == index.end())
      throw Error(ErrorKind::InternalConsistency, "span composite outside the dual",
                  {c.morphism_name(s.left), c.morphism_name(s.right)});
    return it->second;
  });

  CategoryPtr cat;
  try {
    cat = std::move(cb).build_shared();
  } catch (const Error& err) {
    rethrow_internal(err, "dual category rejected");
  }

  MorphismSet dl(spans.size()), dr(spans.size());
  for (MorId m = 0; m < spans.size(); ++m) {
    if (c.is_isomorphism(spans[m].right)) dl.insert(m);
    if (c.is_isomorphism(spans[m].left)) dr.insert(m);
  }
  std::optional<CartesianFS> system;
  try {
    system.emplace(CartesianFS::validate(FactorizationSystem::validate(ClassPair{cat, dl, dr})));
  } catch (const Error& err) {
    rethrow_internal(err, "dual classes rejected");
  }
  return DualCategory{cfs, std::move(cat), std::move(spans), std::move(index), std::move(*system)};
}

Report equivalence_report(std::string name, const Functor& f) {
  Report r(std::move(name));
  EquivalenceReport eq = check_equivalence(f);
  if (!eq.faithful) r.fail("not faithful: " + eq.faithful_witness);
  if (!eq.full) r.fail("not full: " + eq.full_witness);
  if (!eq.essentially_surjective) r.fail("not essentially surjective: " + eq.surjective_witness);
  r.count("faithful", eq.faithful);
  r.count("full", eq.full);
  r.count("essentially_surjective", eq.essentially_surjective);
  return r;
}

Report double_dual_check(const CartesianFS& cfs) {
  const Category& c = cfs.carrier();
  Report r("double-dual");
  DualCategory d1 = build_dual(cfs);
  DualCategory d2 = build_dual(d1.system);
  r.count("objects", static_cast<std::int64_t>(c.object_count()));
  r.count("morphisms", static_cast<std::int64_t>(c.morphism_count()));
  r.count("dual_morphisms", static_cast<std::int64_t>(d1.spans.size()));
  r.count("double_dual_morphisms", static_cast<std::int64_t>(d2.spans.size()));

  std::vector<ObjId> omap(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) omap[x] = x;
  std::vector<MorId> mmap(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const Factorization& fac = cfs.factorize(f);
    const ObjId x = c.source(f), y = c.target(f), mid = fac.middle;
    MorId back = d1.morphism_of(SpanMorphism{mid, x, x, fac.e, c.identity(x)});
    MorId fwd = d1.morphism_of(SpanMorphism{mid, y, mid, c.identity(mid), fac.m});
    mmap[f] = d2.morphism_of(SpanMorphism{x, y, mid, back, fwd});
  }

  Report functor("double-dual-functor");
  std::optional<Functor> j;
  try {
    j.emplace(Functor::validate(cfs.carrier_ptr(), d2.category, omap, mmap));
  } catch (const Error& err) {
    functor.fail(err.what());
  }
  r.add(std::move(functor));
  if (!j) return r;

  Report classes("double-dual-preserves-classes");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (cfs.left(f) && !d2.system.left(mmap[f]))
      classes.fail("left map " + c.morphism_name(f) + " not sent to the left class");
    if (cfs.right(f) && !d2.system.right(mmap[f]))
      classes.fail("right map " + c.morphism_name(f) + " not sent to the right class");
  }
  r.add(std::move(classes));
  r.add(equivalence_report("double-dual-equivalence", *j));
  return r;
}

Functor dual_functor(const Functor& f, const DualCategory& from, const DualCategory& to) {
  const Category& c = from.carrier.carrier();
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (from.carrier.left(m) && !to.carrier.left(f.map_morphism(m)))
      throw Error(ErrorKind::ClassNotPreserved, "left class", {c.morphism_name(m)});
    if (from.carrier.right(m) && !to.carrier.right(f.map_morphism(m)))
      throw Error(ErrorKind::ClassNotPreserved, "right class", {c.morphism_name(m)});
  }
  std::vector<MorId> mmap;
  mmap.reserve(from.spans.size());
  for (const SpanMorphism& s : from.spans)
    mmap.push_back(to.morphism_of(SpanMorphism{f(s.source), f(s.target), f(s.apex),
                                               f.map_morphism(s.left), f.map_morphism(s.right)}));
  try {
    return Functor::validate(from.category, to.category, f.object_map(), std::move(mmap));
  } catch (const Error& err) {
    rethrow_internal(err, "dual functor rejected");
  }
}

FiberwiseOpComparison fiberwise_op_comparison(const IndexedCategory& ix) {
  GrothTotal lenses = lens_category(ix);
  GrothTotal total = grothendieck(ix);
  DualCategory dual = build_dual(phi(total.fibration));
  const Category& b = ix.base();
  const Category& lc = *lenses.total;

  std::vector<ObjId> omap(lc.object_count());
  for (ObjId x = 0; x < lc.object_count(); ++x) omap[x] = x;
  std::vector<MorId> mmap;
  mmap.reserve(lc.morphism_count());
  for (MorId m = 0; m < lc.morphism_count(); ++m) {
    const Lens l = lens_of(lenses, m);
    const ObjId base = b.source(l.base);
    const ObjId pulled = ix.reindex(l.base)(l.target_fiber);
    MorId left = total.morphism_of(b.identity(base), l.sharp, l.source_fiber);
    MorId right = total.morphism_of(l.base, ix.fiber(base).identity(pulled), l.target_fiber);
    mmap.push_back(dual.morphism_of(make_span(dual.carrier, left, right)));
  }
  std::optional<Functor> f;
  try {
    f.emplace(Functor::validate(lenses.total, dual.category, std::move(omap), std::move(mmap)));
  } catch (const Error& err) {
    rethrow_internal(err, "lens-to-span comparison is not a functor");
  }
  return FiberwiseOpComparison{std::move(lenses), std::move(total), std::move(dual), std::move(*f)};
}

Report check_fiberwise_op_square(const IndexedCategory& ix) {
  Report r("fiberwise-op-square");
  std::optional<FiberwiseOpComparison> cmp;
  Report functor("comparison-functor");
  try {
    cmp.emplace(fiberwise_op_comparison(ix));
  } catch (const Error& err) {
    functor.fail(err.what());
  }
  r.add(std::move(functor));
  if (!cmp) return r;

  const Category& lc = *cmp->lenses.total;
  const Category& dc = *cmp->dual.category;
  r.count("objects", static_cast<std::int64_t>(lc.object_count()));
  r.count("lenses", static_cast<std::int64_t>(lc.morphism_count()));
  r.count("spans", static_cast<std::int64_t>(dc.morphism_count()));
  r.add(equivalence_report("comparison-equivalence", cmp->phi));

  Report homs("hom-cardinalities");
  for (ObjId x = 0; x < lc.object_count(); ++x)
    for (ObjId y = 0; y < lc.object_count(); ++y)
      if (lc.hom(x, y).size() != dc.hom(x, y).size())
        homs.fail(lc.object_name(x) + " -> " + lc.object_name(y) + ": " +
                  std::to_string(lc.hom(x, y).size()) + " lenses, " +
                  std::to_string(dc.hom(x, y).size()) + " spans");
  homs.count("pairs", static_cast<std::int64_t>(lc.object_count() * lc.object_count()));
  r.add(std::move(homs));
  return r;
}

}  // namespace fibcat
