#include "fibcat/double.hpp"

#include <unordered_map>

#include "fibcat/error.hpp"

namespace fibcat {

const Square* DoubleCategory::find(const Boundary& b) const {
  auto it = index.find(b.key());
  return it == index.end() ? nullptr : &squares[it->second];
}

void enumerate_squares(DoubleCategory& d) {
  const Category& v = *d.vertical;
  const Category& h = *d.horizontal;
  d.squares.clear();
  d.index.clear();
  d.boundaries = 0;
  for (MorId left = 0; left < v.morphism_count(); ++left)
    for (MorId top : h.outgoing(v.source(left)))
      for (MorId right : v.outgoing(h.target(top)))
        for (MorId bottom : h.hom(v.target(left), v.target(right))) {
          ++d.boundaries;
          Boundary b{left, right, top, bottom};
          if (auto w = d.predicate(b)) {
            d.index.emplace(b.key(), d.squares.size());
            d.squares.push_back(Square{b, *w});
          }
        }
}

Boundary vcompose(const DoubleCategory& d, const Boundary& upper, const Boundary& lower) {
  const Category& v = *d.vertical;
  return Boundary{v.compose(lower.left, upper.left), v.compose(lower.right, upper.right), upper.top,
                  lower.bottom};
}

Boundary hcompose(const DoubleCategory& d, const Boundary& left, const Boundary& right) {
  const Category& h = *d.horizontal;
  return Boundary{left.left, right.right, h.compose(right.top, left.top),
                  h.compose(right.bottom, left.bottom)};
}

namespace {

std::string describe(const DoubleCategory& d, const Boundary& b) {
  return "(" + d.vertical->morphism_name(b.left) + ", " + d.vertical->morphism_name(b.right) + ", " +
         d.horizontal->morphism_name(b.top) + ", " + d.horizontal->morphism_name(b.bottom) + ")";
}

}  // namespace

Report check_double_category(const DoubleCategory& d, bool interchange) {
  const Category& v = *d.vertical;
  const Category& h = *d.horizontal;
  Report r("double-category");
  r.count("boundaries", static_cast<std::int64_t>(d.boundaries));
  r.count("squares", static_cast<std::int64_t>(d.squares.size()));

  Report objects("shared-objects");
  if (v.object_count() != h.object_count()) {
    objects.fail("object counts differ");
  } else {
    for (ObjId x = 0; x < v.object_count(); ++x)
      if (v.object_name(x) != h.object_name(x)) objects.fail(v.object_name(x));
  }
  r.add(std::move(objects));
  if (!r.verdict) return r;

  Report ids("identity-squares");
  for (MorId top = 0; top < h.morphism_count(); ++top) {
    Boundary b{v.identity(h.source(top)), v.identity(h.target(top)), top, top};
    if (!d.find(b)) ids.fail("vertical identity on " + h.morphism_name(top));
  }
  for (MorId left = 0; left < v.morphism_count(); ++left) {
    Boundary b{left, left, h.identity(v.source(left)), h.identity(v.target(left))};
    if (!d.find(b)) ids.fail("horizontal identity on " + v.morphism_name(left));
  }
  r.add(std::move(ids));
  if (!r.find("identity-squares")->verdict) return r;

  std::unordered_map<MorId, std::vector<std::size_t>> by_top, by_left;
  for (std::size_t i = 0; i < d.squares.size(); ++i) {
    by_top[d.squares[i].boundary.top].push_back(i);
    by_left[d.squares[i].boundary.left].push_back(i);
  }
  auto below = [&](const Square& s) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    auto it = by_top.find(s.boundary.bottom);
    return it == by_top.end() ? none : it->second;
  };
  auto beside = [&](const Square& s) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    auto it = by_left.find(s.boundary.right);
    return it == by_left.end() ? none : it->second;
  };
  // Pasted composite as a square index, or nullopt with a witness recorded
  // in `rep`. Memoized per ordered pair of square indices.
  std::unordered_map<std::uint64_t, std::optional<std::size_t>> vmemo, hmemo;
  auto index_of = [&](const Square* s) { return static_cast<std::size_t>(s - d.squares.data()); };
  auto vpaste = [&](std::size_t i, std::size_t j, Report& rep) -> std::optional<std::size_t> {
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
    if (auto it = vmemo.find(key); it != vmemo.end()) return it->second;
    const Square& a = d.squares[i];
    const Square& b = d.squares[j];
    Boundary c = vcompose(d, a.boundary, b.boundary);
    const Square* s = d.find(c);
    std::optional<std::size_t> out;
    if (!s)
      rep.fail("vertical composite missing: " + describe(d, c));
    else if (d.paste_vertical(a, b) != s->witness)
      rep.fail("vertical paste disagrees: " + describe(d, c));
    else
      out = index_of(s);
    vmemo.emplace(key, out);
    return out;
  };
  auto hpaste = [&](std::size_t i, std::size_t j, Report& rep) -> std::optional<std::size_t> {
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
    if (auto it = hmemo.find(key); it != hmemo.end()) return it->second;
    const Square& a = d.squares[i];
    const Square& b = d.squares[j];
    Boundary c = hcompose(d, a.boundary, b.boundary);
    const Square* s = d.find(c);
    std::optional<std::size_t> out;
    if (!s)
      rep.fail("horizontal composite missing: " + describe(d, c));
    else if (d.paste_horizontal(a, b) != s->witness)
      rep.fail("horizontal paste disagrees: " + describe(d, c));
    else
      out = index_of(s);
    hmemo.emplace(key, out);
    return out;
  };

  Report vert("vertical-composition");
  std::int64_t vpairs = 0;
  for (std::size_t i = 0; i < d.squares.size(); ++i)
    for (std::size_t j : below(d.squares[i])) {
      ++vpairs;
      vpaste(i, j, vert);
    }
  vert.count("pairs", vpairs);
  r.add(std::move(vert));

  Report horiz("horizontal-composition");
  std::int64_t hpairs = 0;
  for (std::size_t i = 0; i < d.squares.size(); ++i)
    for (std::size_t j : beside(d.squares[i])) {
      ++hpairs;
      hpaste(i, j, horiz);
    }
  horiz.count("pairs", hpairs);
  r.add(std::move(horiz));

  Report neutral("identity-neutral");
  for (std::size_t i = 0; i < d.squares.size(); ++i) {
    const Boundary& b = d.squares[i].boundary;
    const Square* up = d.find({v.identity(v.source(b.left)), v.identity(v.source(b.right)), b.top, b.top});
    const Square* lt = d.find({b.left, b.left, h.identity(v.source(b.left)), h.identity(v.target(b.left))});
    if (!up || !lt) continue;  // already reported as missing identities
    auto x = vpaste(index_of(up), i, neutral);
    auto y = hpaste(index_of(lt), i, neutral);
    if ((x && *x != i) || (y && *y != i))
      neutral.fail("identity square not neutral at " + describe(d, b));
  }
  r.add(std::move(neutral));

  if (!interchange) return r;
  Report inter("interchange");
  std::int64_t grids = 0;
  for (std::size_t ia = 0; ia < d.squares.size(); ++ia) {
    const Square& a = d.squares[ia];
    for (std::size_t ib : beside(a))
      for (std::size_t ic : below(a)) {
        const Square& b = d.squares[ib];
        const Square& c = d.squares[ic];
        auto ab = hpaste(ia, ib, inter);
        auto ac = vpaste(ia, ic, inter);
        for (std::size_t ie : beside(c)) {
          const Square& e = d.squares[ie];
          if (e.boundary.top != b.boundary.bottom) continue;
          ++grids;
          auto ce = hpaste(ic, ie, inter);
          auto be = vpaste(ib, ie, inter);
          if (!ab || !ce || !ac || !be) continue;
          auto rows = vpaste(*ab, *ce, inter);
          auto cols = hpaste(*ac, *be, inter);
          if (rows && cols && *rows != *cols)
            inter.fail("interchange fails at " + describe(d, d.squares[*rows].boundary));
        }
      }
  }
  inter.count("grids", grids);
  r.add(std::move(inter));
  return r;
}

DoubleCategory grothendieck_double(const IndexedCategory& ix) {
  auto lenses = std::make_shared<const GrothTotal>(lens_category(ix));
  auto total = std::make_shared<const GrothTotal>(grothendieck(ix));
  DoubleCategory d;
  d.kind = "grothendieck-double";
  d.vertical = lenses->total;
  d.horizontal = total->total;
  d.predicate = [lenses, total](const Boundary& b) -> std::optional<MorId> {
    const IndexedCategory& ix = total->index;
    const Category& base = ix.base();
    const Lens l1 = lens_of(*lenses, b.left);
    const Lens l2 = lens_of(*lenses, b.right);
    const TotalMorphism& g1 = total->morphisms[b.top];
    const TotalMorphism& g2 = total->morphisms[b.bottom];
    if (base.compose(l2.base, g1.base) != base.compose(g2.base, l1.base)) return std::nullopt;
    const Category& e = ix.fiber(base.source(l1.base));
    MorId upper = e.compose(g1.fiber, l1.sharp);
    MorId lower = e.compose(ix.reindex(g1.base).map_morphism(l2.sharp),
                            ix.reindex(l1.base).map_morphism(g2.fiber));
    if (upper == kNoMorphism || upper != lower) return std::nullopt;
    return kNoMorphism;
  };
  d.paste_vertical = [](const Square&, const Square&) { return kNoMorphism; };
  d.paste_horizontal = [](const Square&, const Square&) { return kNoMorphism; };
  enumerate_squares(d);
  return d;
}

DoubleCategory span_double(const std::shared_ptr<const DualCategory>& dual) {
  DoubleCategory d;
  d.kind = "span-double";
  d.vertical = dual->category;
  d.horizontal = dual->carrier.carrier_ptr();
  d.predicate = [dual](const Boundary& b) -> std::optional<MorId> {
    const Category& c = dual->carrier.carrier();
    const SpanMorphism& s1 = dual->spans[b.left];
    const SpanMorphism& s2 = dual->spans[b.right];
    const MorId want_left = c.compose(b.top, s1.left);
    const MorId want_right = c.compose(b.bottom, s1.right);
    std::optional<MorId> found;
    for (MorId k : c.hom(s1.apex, s2.apex))
      if (c.compose(s2.left, k) == want_left && c.compose(s2.right, k) == want_right) {
        if (found)
          throw Error(ErrorKind::InternalConsistency, "map of spans is not unique",
                      {c.morphism_name(*found), c.morphism_name(k)});
        found = k;
      }
    return found;
  };
  d.paste_vertical = [dual](const Square& upper, const Square& lower) {
    const CartesianFS& cfs = dual->carrier;
    const Category& c = cfs.carrier();
    const auto& sp = dual->spans;
    ComposedSpan left = composite_span(cfs, sp[lower.boundary.left], sp[upper.boundary.left]);
    ComposedSpan right = composite_span(cfs, sp[lower.boundary.right], sp[upper.boundary.right]);
    const PullbackSquare& p = left.square;
    const PullbackSquare& q = right.square;
    const MorId a = c.compose(upper.witness, p.p1);
    const MorId b = c.compose(lower.witness, p.p2);
    for (MorId u : c.hom(p.apex, q.apex))
      if (c.compose(q.p1, u) == a && c.compose(q.p2, u) == b)
        return c.compose(*c.inverse(right.iso), c.compose(u, left.iso));
    return kNoMorphism;
  };
  d.paste_horizontal = [dual](const Square& left, const Square& right) {
    return dual->carrier.carrier().compose(right.witness, left.witness);
  };
  enumerate_squares(d);
  return d;
}

DoubleCategory span_double(const CartesianFS& cfs) {
  return span_double(std::make_shared<const DualCategory>(build_dual(cfs)));
}

Report check_double_equivalence(const IndexedCategory& ix) {
  Report r("double-equivalence");
  r.add(check_fiberwise_op_square(ix));
  if (!r.verdict) return r;

  FiberwiseOpComparison cmp = fiberwise_op_comparison(ix);
  auto dual = std::make_shared<const DualCategory>(cmp.dual);
  DoubleCategory gd = grothendieck_double(ix);
  DoubleCategory sd = span_double(dual);

  Report horiz("horizontal-comparison");
  if (!(*gd.horizontal == *sd.horizontal)) horiz.fail("horizontal categories differ");
  r.add(std::move(horiz));

  Report squares("square-correspondence");
  const Functor& phi = cmp.phi;
  std::vector<bool> hit(sd.vertical->morphism_count(), false);
  for (MorId m = 0; m < gd.vertical->morphism_count(); ++m) hit[phi.map_morphism(m)] = true;
  for (MorId m = 0; m < hit.size(); ++m)
    if (!hit[m]) squares.fail("span not in the image of the comparison: " + sd.vertical->morphism_name(m));
  std::int64_t boundaries = 0, mismatched = 0;
  const Category& v = *gd.vertical;
  const Category& h = *gd.horizontal;
  for (MorId left = 0; left < v.morphism_count(); ++left)
    for (MorId top : h.outgoing(v.source(left)))
      for (MorId right : v.outgoing(h.target(top)))
        for (MorId bottom : h.hom(v.target(left), v.target(right))) {
          ++boundaries;
          Boundary b{left, right, top, bottom};
          Boundary s{phi.map_morphism(left), phi.map_morphism(right), top, bottom};
          bool in_g = gd.find(b) != nullptr;
          bool in_s = sd.find(s) != nullptr;
          if (in_g != in_s) {
            ++mismatched;
            squares.fail(describe(gd, b) + (in_g ? " commutes but has no map of spans"
                                                 : " has a map of spans but does not commute"));
          }
        }
  squares.count("boundaries", boundaries);
  squares.count("grothendieck_squares", static_cast<std::int64_t>(gd.squares.size()));
  squares.count("span_squares", static_cast<std::int64_t>(sd.squares.size()));
  squares.count("mismatched", mismatched);
  if (gd.squares.size() != sd.squares.size()) squares.fail("square counts differ");
  r.add(std::move(squares));

  Report g = check_double_category(gd);
  g.check = "grothendieck-double";
  r.add(std::move(g));
  Report s = check_double_category(sd);
  s.check = "span-double";
  r.add(std::move(s));
  return r;
}

DoubleFunctor double_functor_of(const Functor& f, const DualCategory& from, const DualCategory& to) {
  return DoubleFunctor{dual_functor(f, from, to), f};
}

Report check_double_functor(const DoubleFunctor& f, const DoubleCategory& from,
                            const DoubleCategory& to) {
  Report r("double-functor");
  for (const Square& s : from.squares) {
    const Boundary& b = s.boundary;
    Boundary img{f.vertical.map_morphism(b.left), f.vertical.map_morphism(b.right),
                 f.horizontal.map_morphism(b.top), f.horizontal.map_morphism(b.bottom)};
    if (!to.find(img)) r.fail("square " + describe(from, b) + " has no image");
  }
  r.count("squares", static_cast<std::int64_t>(from.squares.size()));
  return r;
}

HorizontalTransformation horizontal_transformation_of(const NaturalTransformation& alpha,
                                                      const DualCategory& from,
                                                      const DualCategory& to) {
  const Functor& f = alpha.from();
  const Functor& g = alpha.to();
  Functor fv = dual_functor(f, from, to);
  Functor gv = dual_functor(g, from, to);
  const Category& c1 = from.carrier.carrier();
  const Category& c2 = to.carrier.carrier();
  HorizontalTransformation t;
  for (ObjId x = 0; x < c1.object_count(); ++x) t.objects.push_back(alpha[x]);
  for (MorId m = 0; m < from.spans.size(); ++m) {
    const SpanMorphism& s = from.spans[m];
    CanonicalSpan fs = canonical_form(to.carrier, SpanMorphism{f(s.source), f(s.target), f(s.apex),
                                                               f.map_morphism(s.left),
                                                               f.map_morphism(s.right)});
    CanonicalSpan gs = canonical_form(to.carrier, SpanMorphism{g(s.source), g(s.target), g(s.apex),
                                                               g.map_morphism(s.left),
                                                               g.map_morphism(s.right)});
    MorId w = c2.compose(*c2.inverse(gs.iso), c2.compose(alpha[s.apex], fs.iso));
    t.vertical.push_back(Square{Boundary{fv.map_morphism(m), gv.map_morphism(m), alpha[s.source],
                                         alpha[s.target]},
                                w});
  }
  return t;
}

Report check_horizontal_transformation(const HorizontalTransformation& t, const DoubleFunctor& f,
                                       const DoubleFunctor& g, const DoubleCategory& from,
                                       const DoubleCategory& to) {
  Report r("horizontal-transformation");
  const Category& v = *from.vertical;

  Report comps("component-squares");
  for (MorId m = 0; m < t.vertical.size(); ++m) {
    const Square* s = to.find(t.vertical[m].boundary);
    if (!s || s->witness != t.vertical[m].witness)
      comps.fail("component at " + v.morphism_name(m) + (s ? " has the wrong witness" : " is not a square"));
  }
  comps.count("components", static_cast<std::int64_t>(t.vertical.size()));
  r.add(std::move(comps));
  if (!r.verdict) return r;

  Report ids("identity-components");
  for (ObjId x = 0; x < v.object_count(); ++x) {
    const Square& s = t.vertical[v.identity(x)];
    const Boundary want{to.vertical->identity(f.vertical(x)), to.vertical->identity(g.vertical(x)),
                        t.objects[x], t.objects[x]};
    if (!(s.boundary == want)) ids.fail(v.object_name(x));
  }
  r.add(std::move(ids));

  Report comp("vertical-composites");
  for (MorId m1 = 0; m1 < v.morphism_count(); ++m1)
    for (MorId m2 : v.outgoing(v.target(m1))) {
      const Square& whole = t.vertical[v.compose(m2, m1)];
      Boundary b = vcompose(to, t.vertical[m1].boundary, t.vertical[m2].boundary);
      if (!(b == whole.boundary) || to.paste_vertical(t.vertical[m1], t.vertical[m2]) != whole.witness)
        comp.fail(v.morphism_name(m2) + " after " + v.morphism_name(m1));
    }
  r.add(std::move(comp));

  Report nat("square-naturality");
  for (const Square& s : from.squares) {
    const Boundary& b = s.boundary;
    const Square* fs = to.find({f.vertical.map_morphism(b.left), f.vertical.map_morphism(b.right),
                                f.horizontal.map_morphism(b.top), f.horizontal.map_morphism(b.bottom)});
    const Square* gs = to.find({g.vertical.map_morphism(b.left), g.vertical.map_morphism(b.right),
                                g.horizontal.map_morphism(b.top), g.horizontal.map_morphism(b.bottom)});
    if (!fs || !gs) {
      nat.fail("image square missing at " + describe(from, b));
      continue;
    }
    const Square& tl = t.vertical[b.left];
    const Square& tr = t.vertical[b.right];
    Boundary x = hcompose(to, fs->boundary, tr.boundary);
    Boundary y = hcompose(to, tl.boundary, gs->boundary);
    if (!(x == y) || to.paste_horizontal(*fs, tr) != to.paste_horizontal(tl, *gs))
      nat.fail("naturality fails at " + describe(from, b));
  }
  nat.count("squares", static_cast<std::int64_t>(from.squares.size()));
  r.add(std::move(nat));
  return r;
}

}  // namespace fibcat
