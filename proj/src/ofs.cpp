#include "fibcat/ofs.hpp"

#include "fibcat/error.hpp"
#include "fibcat/pullback.hpp"

namespace fibcat {

ClassPair ClassPair::iso_all(CategoryPtr carrier) {
  MorphismSet l = isomorphisms(*carrier);
  MorphismSet r = MorphismSet::all(carrier->morphism_count());
  return ClassPair{std::move(carrier), std::move(l), std::move(r)};
}

ClassPair ClassPair::all_iso(CategoryPtr carrier) {
  MorphismSet l = MorphismSet::all(carrier->morphism_count());
  MorphismSet r = isomorphisms(*carrier);
  return ClassPair{std::move(carrier), std::move(l), std::move(r)};
}

MorphismSet isomorphisms(const Category& cat) {
  MorphismSet s(cat.morphism_count());
  for (MorId f = 0; f < cat.morphism_count(); ++f)
    if (cat.is_isomorphism(f)) s.insert(f);
  return s;
}

std::string describe(const Category& cat, const LiftingProblem& p) {
  return "e=" + cat.morphism_name(p.e) + " m=" + cat.morphism_name(p.m) +
         " top=" + cat.morphism_name(p.top) + " bottom=" + cat.morphism_name(p.bottom);
}

std::vector<MorId> fillers(const Category& cat, const LiftingProblem& p) {
  std::vector<MorId> out;
  for (MorId d : cat.hom(cat.target(p.e), cat.source(p.m)))
    if (cat.compose(d, p.e) == p.top && cat.compose(p.m, d) == p.bottom) out.push_back(d);
  return out;
}

bool uniquely_orthogonal(const Category& cat, MorId e, MorId m, LiftingProblem* offending,
                         std::size_t* filler_count) {
  for (MorId top : cat.hom(cat.source(e), cat.source(m)))
    for (MorId bottom : cat.hom(cat.target(e), cat.target(m))) {
      if (cat.compose(m, top) != cat.compose(bottom, e)) continue;
      LiftingProblem p{e, m, top, bottom};
      std::size_t n = fillers(cat, p).size();
      if (n != 1) {
        if (offending) *offending = p;
        if (filler_count) *filler_count = n;
        return false;
      }
    }
  return true;
}

OrthogonalityReport check_orthogonality(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  OrthogonalityReport r;
  for (MorId e : cp.left.members())
    for (MorId m : cp.right.members())
      for (MorId top : cat.hom(cat.source(e), cat.source(m)))
        for (MorId bottom : cat.hom(cat.target(e), cat.target(m))) {
          if (cat.compose(m, top) != cat.compose(bottom, e)) continue;
          ++r.problems;
          LiftingProblem p{e, m, top, bottom};
          std::size_t n = fillers(cat, p).size();
          if (n != 1 && r.verdict) {
            r.verdict = false;
            r.offending = p;
            r.filler_count = n;
          }
        }
  return r;
}

namespace {

void check_class(const Category& cat, const MorphismSet& cls, const char* side) {
  for (MorId f = 0; f < cat.morphism_count(); ++f)
    if (cat.is_isomorphism(f) && !cls.contains(f))
      throw Error(ErrorKind::AxiomViolation, std::string(side) + " class misses an isomorphism",
                  {cat.morphism_name(f)});
  for (MorId f : cls.members())
    for (MorId g : cat.outgoing(cat.target(f)))
      if (cls.contains(g) && !cls.contains(cat.compose(g, f)))
        throw Error(ErrorKind::AxiomViolation,
                    std::string(side) + " class not closed under composition",
                    {cat.morphism_name(g), cat.morphism_name(f)});
}

}  // namespace

FactorizationSystem FactorizationSystem::validate(ClassPair cp) {
  const Category& cat = *cp.carrier;
  if (cp.left.universe() != cat.morphism_count() || cp.right.universe() != cat.morphism_count())
    throw Error(ErrorKind::MalformedInput, "class pair does not match its carrier");
  check_class(cat, cp.left, "left");
  check_class(cat, cp.right, "right");

  FactorizationSystem fs;
  fs.factorizations_.reserve(cat.morphism_count());
  for (MorId f = 0; f < cat.morphism_count(); ++f) {
    std::optional<Factorization> found;
    // Identities lie in both classes and factor through themselves.
    if (cat.is_identity(f)) found = Factorization{f, f, f, cat.source(f)};
    for (ObjId mid = 0; mid < cat.object_count() && !found; ++mid)
      for (MorId e : cat.hom(cat.source(f), mid)) {
        if (!cp.left.contains(e)) continue;
        for (MorId m : cat.hom(mid, cat.target(f)))
          if (cp.right.contains(m) && cat.compose(m, e) == f) {
            found = Factorization{f, e, m, mid};
            break;
          }
        if (found) break;
      }
    if (!found)
      throw Error(ErrorKind::AxiomViolation, "factorization", {cat.morphism_name(f)});
    fs.factorizations_.push_back(*found);
  }

  OrthogonalityReport orth = check_orthogonality(cp);
  if (!orth.verdict)
    throw Error(ErrorKind::AxiomViolation, "unique functoriality (orthogonality)",
                {describe(cat, *orth.offending), "fillers=" + std::to_string(orth.filler_count)});
  fs.classes_ = std::move(cp);
  return fs;
}

MorphismSet saturate(const Category& cat, const MorphismSet& right) {
  MorphismSet out(cat.morphism_count());
  const auto rs = right.members();
  for (MorId f = 0; f < cat.morphism_count(); ++f) {
    bool ok = true;
    for (MorId m : rs)
      if (!uniquely_orthogonal(cat, f, m)) {
        ok = false;
        break;
      }
    if (ok) out.insert(f);
  }
  return out;
}

MorphismSet cosaturate(const Category& cat, const MorphismSet& left) {
  MorphismSet out(cat.morphism_count());
  const auto ls = left.members();
  for (MorId f = 0; f < cat.morphism_count(); ++f) {
    bool ok = true;
    for (MorId e : ls)
      if (!uniquely_orthogonal(cat, e, f)) {
        ok = false;
        break;
      }
    if (ok) out.insert(f);
  }
  return out;
}

namespace {

Report check_cancellation(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  Report r("cancellation");
  std::int64_t checked = 0;
  for (MorId f = 0; f < cat.morphism_count(); ++f)
    for (MorId g : cat.outgoing(cat.target(f))) {
      ++checked;
      MorId gf = cat.compose(g, f);
      if (cp.left.contains(f) && cp.left.contains(gf) && !cp.left.contains(g))
        r.fail("left: f=" + cat.morphism_name(f) + " gf=" + cat.morphism_name(gf) +
               " but g=" + cat.morphism_name(g) + " not left");
      if (cp.right.contains(g) && cp.right.contains(gf) && !cp.right.contains(f))
        r.fail("right: g=" + cat.morphism_name(g) + " gf=" + cat.morphism_name(gf) +
               " but f=" + cat.morphism_name(f) + " not right");
    }
  r.count("composable_pairs", checked);
  return r;
}

Report check_right_pullback_stability(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  Report r("right-pullback-stability");
  std::int64_t checked = 0;
  std::int64_t missing = 0;
  for (MorId m : cp.right.members())
    for (MorId g : cat.incoming(cat.target(m))) {
      auto sq = pullback(cat, m, g);
      if (!sq) {
        ++missing;
        continue;
      }
      ++checked;
      // Every pullback is the chosen one precomposed with an iso into its apex.
      for (MorId phi : cat.incoming(sq->apex)) {
        if (!cat.is_isomorphism(phi)) continue;
        MorId proj = cat.compose(sq->p2, phi);
        if (!cp.right.contains(proj)) {
          r.fail("pullback of m=" + cat.morphism_name(m) + " along g=" + cat.morphism_name(g) +
                 " is " + cat.morphism_name(proj) + ", not right");
          break;
        }
      }
    }
  r.count("pullbacks_checked", checked);
  r.count("cospans_without_pullback", missing);
  return r;
}

Report check_iso_both(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  Report r("iso-iff-both-classes");
  for (MorId f = 0; f < cat.morphism_count(); ++f) {
    bool both = cp.left.contains(f) && cp.right.contains(f);
    if (both != cat.is_isomorphism(f))
      r.fail(cat.morphism_name(f) + (both ? " in both classes but not iso" : " iso but not in both"));
  }
  r.count("isomorphisms", static_cast<std::int64_t>(isomorphisms(cat).count()));
  return r;
}

Report check_saturation(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  Report r("saturation");
  MorphismSet l = saturate(cat, cp.right);
  MorphismSet rr = cosaturate(cat, cp.left);
  for (MorId f = 0; f < cat.morphism_count(); ++f) {
    if (l.contains(f) != cp.left.contains(f))
      r.fail("left: " + cat.morphism_name(f) +
             (l.contains(f) ? " lifts uniquely but is not left" : " is left but does not lift"));
    if (rr.contains(f) != cp.right.contains(f))
      r.fail("right: " + cat.morphism_name(f) +
             (rr.contains(f) ? " lifts uniquely but is not right" : " is right but does not lift"));
  }
  r.count("left", static_cast<std::int64_t>(cp.left.count()));
  r.count("right", static_cast<std::int64_t>(cp.right.count()));
  return r;
}

}  // namespace

Report lemma_suite(const ClassPair& cp) {
  Report r("ofs-lemma-suite");
  r.add(check_cancellation(cp));
  r.add(check_right_pullback_stability(cp));
  r.add(check_iso_both(cp));
  r.add(check_saturation(cp));
  return r;
}

}  // namespace fibcat
