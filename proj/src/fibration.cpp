#include "fibcat/fibration.hpp"

#include "fibcat/error.hpp"

namespace fibcat {

bool is_cartesian_morphism(const Functor& p, MorId phi) {
  const Category& e = p.source();
  const Category& b = p.target();
  const ObjId x = e.source(phi);
  const ObjId y = e.target(phi);
  const MorId p_phi = p.map_morphism(phi);
  for (MorId psi : e.incoming(y)) {
    const ObjId z = e.source(psi);
    const MorId p_psi = p.map_morphism(psi);
    for (MorId h : b.hom(p(z), p(x))) {
      if (b.compose(p_phi, h) != p_psi) continue;
      std::size_t lifts = 0;
      for (MorId ht : e.hom(z, x))
        if (e.compose(phi, ht) == psi && p.map_morphism(ht) == h) ++lifts;
      if (lifts != 1) return false;
    }
  }
  return true;
}

MorphismSet vertical_morphisms(const Functor& p) {
  MorphismSet s(p.source().morphism_count());
  for (MorId f = 0; f < p.source().morphism_count(); ++f)
    if (p.target().is_isomorphism(p.map_morphism(f))) s.insert(f);
  return s;
}

namespace {

MorphismSet all_cartesian(const Functor& p) {
  MorphismSet s(p.source().morphism_count());
  for (MorId f = 0; f < p.source().morphism_count(); ++f)
    if (is_cartesian_morphism(p, f)) s.insert(f);
  return s;
}

// Mode of a cartesian φ into e regarded as a lift of f, if it is one.
std::optional<LiftMode> lift_mode(const Functor& p, MorId phi, MorId f) {
  const Category& b = p.target();
  MorId image = p.map_morphism(phi);
  if (image == f) return LiftMode::OnTheNose;
  if (b.target(image) != b.target(f)) return std::nullopt;
  for (MorId iso : b.hom(b.source(image), b.source(f)))
    if (b.is_isomorphism(iso) && b.compose(f, iso) == image) return LiftMode::UpToIso;
  return std::nullopt;
}

}  // namespace

FibrationWitness FibrationWitness::validate(Functor p) {
  FibrationWitness fw(std::move(p));
  const Functor& proj = fw.p_;
  const Category& e = proj.source();
  const Category& b = proj.target();
  fw.cartesian_ = all_cartesian(proj);
  for (ObjId x = 0; x < e.object_count(); ++x) {
    for (MorId f : b.incoming(proj(x))) {
      std::optional<CartesianLift> chosen;
      for (MorId phi : e.incoming(x))
        if (fw.cartesian_.contains(phi) && proj.map_morphism(phi) == f) {
          chosen = CartesianLift{phi, LiftMode::OnTheNose};
          break;
        }
      if (!chosen)
        for (MorId phi : e.incoming(x))
          if (fw.cartesian_.contains(phi) && lift_mode(proj, phi, f)) {
            chosen = CartesianLift{phi, LiftMode::UpToIso};
            break;
          }
      if (!chosen)
        throw Error(ErrorKind::NotAFibration, "no cartesian lift",
                    {e.object_name(x), b.morphism_name(f)});
      fw.lifts_.emplace(std::make_pair(x, f), *chosen);
    }
  }
  return fw;
}

FibrationWitness FibrationWitness::from_lifts(
    Functor p, const std::map<std::pair<ObjId, MorId>, MorId>& lifts) {
  FibrationWitness fw(std::move(p));
  const Functor& proj = fw.p_;
  const Category& e = proj.source();
  const Category& b = proj.target();
  fw.cartesian_ = all_cartesian(proj);
  for (ObjId x = 0; x < e.object_count(); ++x) {
    for (MorId f : b.incoming(proj(x))) {
      auto it = lifts.find({x, f});
      if (it == lifts.end())
        throw Error(ErrorKind::NotAFibration, "supplied lift missing",
                    {e.object_name(x), b.morphism_name(f)});
      MorId phi = it->second;
      if (e.target(phi) != x || !fw.cartesian_.contains(phi))
        throw Error(ErrorKind::NotAFibration, "supplied lift is not cartesian",
                    {e.object_name(x), b.morphism_name(f), e.morphism_name(phi)});
      auto mode = lift_mode(proj, phi, f);
      if (!mode)
        throw Error(ErrorKind::NotAFibration, "supplied lift lies over the wrong base map",
                    {e.object_name(x), b.morphism_name(f), e.morphism_name(phi)});
      fw.lifts_.emplace(std::make_pair(x, f), CartesianLift{phi, *mode});
    }
  }
  return fw;
}

std::size_t FibrationWitness::count(LiftMode mode) const {
  std::size_t n = 0;
  for (const auto& [key, lift] : lifts_)
    if (lift.mode == mode) ++n;
  return n;
}

// ---------------------------------------------------------------------------

CartesianFS phi(const FibrationWitness& fw) {
  ClassPair cp{fw.projection().source_ptr(), vertical_morphisms(fw.projection()), fw.cartesian()};
  try {
    return CartesianFS::validate(FactorizationSystem::validate(std::move(cp)));
  } catch (const Error& err) {
    std::vector<std::string> w{std::string(to_string(err.kind())), err.clause()};
    w.insert(w.end(), err.witnesses().begin(), err.witnesses().end());
    throw Error(ErrorKind::InternalConsistency, "vertical/cartesian system rejected", w);
  }
}

InjectiveReplacement xi(const CartesianFS& cfs) {
  const Category& c = cfs.carrier();
  const InjectivesReport enough = enough_injectives(cfs);
  if (!enough.total()) {
    std::vector<std::string> names;
    for (ObjId x : enough.lacking) names.push_back(c.object_name(x));
    throw Error(ErrorKind::NoEnoughInjectives, "objects lacking an injective replacement", names);
  }
  FullSubcategory sub = full_subcategory(cfs.carrier_ptr(), enough.injectives);
  std::vector<ObjId> local_obj(c.object_count(), kNoObject);
  for (ObjId i = 0; i < enough.injectives.size(); ++i) local_obj[enough.injectives[i]] = i;
  std::vector<MorId> local_mor(c.morphism_count(), kNoMorphism);
  for (MorId i = 0; i < sub.morphisms.size(); ++i) local_mor[sub.morphisms[i]] = i;

  std::vector<MorId> repl(c.object_count());
  std::vector<ObjId> obj_map(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x) {
    repl[x] = *enough.replacement[x];
    obj_map[x] = local_obj[c.target(repl[x])];
  }
  std::vector<MorId> mor_map(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    MorId rx = repl[c.source(f)], ry = repl[c.target(f)];
    MorId want = c.compose(ry, f);
    MorId ext = kNoMorphism;
    for (MorId d : c.hom(c.target(rx), c.target(ry)))
      if (c.compose(d, rx) == want) {
        if (ext != kNoMorphism)
          throw Error(ErrorKind::InternalConsistency, "replacement extension not unique",
                      {c.morphism_name(f)});
        ext = d;
      }
    if (ext == kNoMorphism)
      throw Error(ErrorKind::InternalConsistency, "replacement extension missing",
                  {c.morphism_name(f)});
    mor_map[f] = local_mor[ext];
  }
  Functor r = Functor::validate(cfs.carrier_ptr(), sub.category, std::move(obj_map),
                                std::move(mor_map));

  // Lift of m : A → RX at X is the Right Stability pullback of r_X along m.
  std::map<std::pair<ObjId, MorId>, MorId> lifts;
  const Category& cr = *sub.category;
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (MorId m : cr.incoming(r(x))) {
      const PullbackSquare& sq = cfs.stability_witness(repl[x], sub.morphisms[m]);
      lifts.emplace(std::make_pair(x, m), sq.p2);
    }
  return InjectiveReplacement{FibrationWitness::from_lifts(std::move(r), lifts),
                              std::move(sub.inclusion), std::move(repl)};
}

// ---------------------------------------------------------------------------

namespace {

// Is p : hom(X, y) → hom(pX, b) a bijection for every X?
bool universal_at(const Functor& p, ObjId y) {
  const Category& e = p.source();
  const Category& b = p.target();
  for (ObjId x = 0; x < e.object_count(); ++x) {
    auto homs = e.hom(x, y);
    auto base = b.hom(p(x), p(y));
    if (homs.size() != base.size()) return false;
    std::vector<bool> hit(b.morphism_count(), false);
    for (MorId g : homs) {
      MorId pg = p.map_morphism(g);
      if (hit[pg]) return false;
      hit[pg] = true;
    }
  }
  return true;
}

RariWitness build_rari(const FibrationWitness& fw, const std::vector<ObjId>& section_obj) {
  const Functor& p = fw.projection();
  const Category& e = p.source();
  const Category& b = p.target();
  auto unique_over = [&](ObjId from, ObjId to, MorId base) {
    MorId found = kNoMorphism;
    for (MorId g : e.hom(from, to))
      if (p.map_morphism(g) == base) {
        if (found != kNoMorphism) return kNoMorphism;
        found = g;
      }
    return found;
  };
  std::vector<MorId> section_mor(b.morphism_count());
  for (MorId f = 0; f < b.morphism_count(); ++f) {
    section_mor[f] = unique_over(section_obj[b.source(f)], section_obj[b.target(f)], f);
    if (section_mor[f] == kNoMorphism)
      throw Error(ErrorKind::AxiomViolation, "section has no unique value", {b.morphism_name(f)});
  }
  Functor r = Functor::validate(p.target_ptr(), p.source_ptr(), section_obj, section_mor);
  Functor rp = compose(r, p);
  std::vector<MorId> unit(e.object_count());
  for (ObjId x = 0; x < e.object_count(); ++x) {
    unit[x] = unique_over(x, rp(x), b.identity(p(x)));
    if (unit[x] == kNoMorphism)
      throw Error(ErrorKind::AxiomViolation, "no vertical unit component", {e.object_name(x)});
  }
  auto eta = NaturalTransformation::validate(Functor::identity(p.source_ptr()), rp, unit);
  // Triangle identities with identity counit.
  for (ObjId x = 0; x < e.object_count(); ++x)
    if (p.map_morphism(eta[x]) != b.identity(p(x)))
      throw Error(ErrorKind::AxiomViolation, "triangle identity (p eta = id)", {e.object_name(x)});
  for (ObjId y = 0; y < b.object_count(); ++y)
    if (eta[r(y)] != e.identity(r(y)))
      throw Error(ErrorKind::AxiomViolation, "triangle identity (eta r = id)", {b.object_name(y)});
  return RariWitness{std::move(r), std::move(eta)};
}

}  // namespace

std::optional<RariWitness> find_rari(const FibrationWitness& fw) {
  const Functor& p = fw.projection();
  const Category& e = p.source();
  const Category& b = p.target();
  std::vector<ObjId> section(b.object_count(), kNoObject);
  for (ObjId y = 0; y < b.object_count(); ++y) {
    for (ObjId cand = 0; cand < e.object_count(); ++cand)
      if (p(cand) == y && universal_at(p, cand)) {
        section[y] = cand;
        break;
      }
    if (section[y] == kNoObject) return std::nullopt;
  }
  return build_rari(fw, section);
}

RariWitness validate_rari(const FibrationWitness& fw, Functor section) {
  const Functor& p = fw.projection();
  const Category& b = p.target();
  for (MorId f = 0; f < b.morphism_count(); ++f)
    if (p.map_morphism(section.map_morphism(f)) != f)
      throw Error(ErrorKind::AxiomViolation, "p r = id", {b.morphism_name(f)});
  for (ObjId y = 0; y < b.object_count(); ++y)
    if (!universal_at(p, section(y)))
      throw Error(ErrorKind::AxiomViolation, "section value is not right adjoint",
                  {b.object_name(y)});
  RariWitness w = build_rari(fw, section.object_map());
  if (!(w.section == section))
    throw Error(ErrorKind::AxiomViolation, "section disagrees with the adjoint on morphisms");
  return w;
}

Report check_xi_phi_roundtrip(const FibrationWitness& fw, const RariWitness& rari) {
  Report r("xi-phi-roundtrip");
  const Functor& p = fw.projection();
  const Category& e = p.source();
  CartesianFS cfs = phi(fw);
  InjectiveReplacement rep = xi(cfs);
  const Functor& repl = rep.fibration.projection();

  // Units at injective objects are invertible.
  Report units("unit-invertible-on-injectives");
  for (ObjId i = 0; i < rep.inclusion.source().object_count(); ++i) {
    ObjId x = rep.inclusion(i);
    if (!e.is_isomorphism(rari.unit[x])) units.fail(e.object_name(x));
  }
  r.add(std::move(units));

  Functor restricted = compose(p, rep.inclusion);
  EquivalenceReport eq = check_equivalence(restricted);
  Report equiv("restricted-projection-equivalence");
  if (!eq.faithful) equiv.fail("not faithful: " + eq.faithful_witness);
  if (!eq.full) equiv.fail("not full: " + eq.full_witness);
  if (!eq.essentially_surjective) equiv.fail("not essentially surjective: " + eq.surjective_witness);
  equiv.count("injectives", static_cast<std::int64_t>(rep.inclusion.source().object_count()));
  r.add(std::move(equiv));

  Report square("comparison-square-natural-iso");
  if (!find_natural_isomorphism(compose(restricted, repl), p))
    square.fail("no natural isomorphism p|R => p");
  r.add(std::move(square));
  return r;
}

Report check_phi_xi_roundtrip(const CartesianFS& cfs) {
  Report r("phi-xi-roundtrip");
  const Category& c = cfs.carrier();
  InjectiveReplacement rep = xi(cfs);
  CartesianFS back = phi(rep.fibration);
  Report classes("phi-xi-class-equality");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (back.left(f) != cfs.left(f)) classes.fail("left differs at " + c.morphism_name(f));
    if (back.right(f) != cfs.right(f)) classes.fail("right differs at " + c.morphism_name(f));
  }
  classes.count("on_the_nose_lifts", static_cast<std::int64_t>(rep.fibration.count(LiftMode::OnTheNose)));
  classes.count("up_to_iso_lifts", static_cast<std::int64_t>(rep.fibration.count(LiftMode::UpToIso)));
  r.add(std::move(classes));

  if (auto rari = find_rari(rep.fibration)) {
    r.add(check_xi_phi_roundtrip(rep.fibration, *rari));
  } else {
    Report missing("xi-phi-roundtrip");
    missing.fail("injective replacement fibration has no right adjoint right inverse");
    r.add(std::move(missing));
  }
  return r;
}

}  // namespace fibcat
