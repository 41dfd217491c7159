#include "fibcat/cartfs.hpp"

#include <algorithm>

#include "fibcat/error.hpp"

namespace fibcat {

CartesianFS CartesianFS::validate(FactorizationSystem fs) {
  const Category& cat = fs.carrier();
  const ClassPair& cp = fs.classes();
  auto n = [&](MorId f) { return cat.morphism_name(f); };

  for (MorId f = 0; f < cat.morphism_count(); ++f)
    for (MorId g : cat.outgoing(cat.target(f))) {
      MorId gf = cat.compose(g, f);
      bool lf = cp.left.contains(f), lg = cp.left.contains(g), lgf = cp.left.contains(gf);
      if (lg && lgf && !lf)
        throw Error(ErrorKind::NotCartesian, "Left 2-of-3 (g, gf left => f left)", {n(g), n(f)});
      if (lf && lgf && !lg)
        throw Error(ErrorKind::NotCartesian, "Left 2-of-3 (f, gf left => g left)", {n(g), n(f)});
      if (lf && lg && !lgf)
        throw Error(ErrorKind::NotCartesian, "Left 2-of-3 (f, g left => gf left)", {n(g), n(f)});
    }

  std::map<std::pair<MorId, MorId>, PullbackSquare> stability;
  for (MorId e : cp.left.members())
    for (MorId m : cat.incoming(cat.target(e))) {
      if (!cp.right.contains(m)) continue;
      auto sq = pullback(cat, m, e);
      if (!sq)
        throw Error(ErrorKind::NotCartesian, "Right Stability: pullback missing", {n(e), n(m)});
      if (!cp.left.contains(sq->p1))
        throw Error(ErrorKind::NotCartesian, "Right Stability: pullback not left",
                    {n(e), n(m), n(sq->p1)});
      stability.emplace(std::make_pair(e, m), *sq);
    }
  return CartesianFS(std::move(fs), std::move(stability));
}

const PullbackSquare& CartesianFS::stability_witness(MorId e, MorId m) const {
  auto it = stability_.find({e, m});
  if (it == stability_.end())
    throw Error(ErrorKind::PullbackMissing, "no Right Stability witness",
                {carrier().morphism_name(e), carrier().morphism_name(m)});
  return it->second;
}

Report check_lr_squares_are_pullbacks(const CartesianFS& cfs) {
  const Category& cat = cfs.carrier();
  const ClassPair& cp = cfs.classes();
  Report r("lr-squares-are-pullbacks");
  std::int64_t squares = 0;
  for (MorId e1 : cp.left.members()) {
    ObjId w = cat.source(e1), z = cat.target(e1);
    for (MorId m1 : cat.outgoing(w)) {
      if (!cp.right.contains(m1)) continue;
      for (MorId e2 : cat.outgoing(cat.target(m1))) {
        if (!cp.left.contains(e2)) continue;
        for (MorId m2 : cat.hom(z, cat.target(e2))) {
          if (!cp.right.contains(m2) || cat.compose(e2, m1) != cat.compose(m2, e1)) continue;
          ++squares;
          if (!is_pullback(cat, m2, e2, PullbackSquare{w, e1, m1}))
            r.fail("square e1=" + cat.morphism_name(e1) + " m1=" + cat.morphism_name(m1) +
                   " e2=" + cat.morphism_name(e2) + " m2=" + cat.morphism_name(m2));
        }
      }
    }
  }
  r.count("squares", squares);
  return r;
}

std::vector<ObjId> injective_objects(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  const auto lefts = cp.left.members();
  std::vector<ObjId> out;
  for (ObjId x = 0; x < cat.object_count(); ++x) {
    bool ok = true;
    for (MorId e : lefts) {
      for (MorId g : cat.hom(cat.source(e), x)) {
        std::size_t solutions = 0;
        for (MorId d : cat.hom(cat.target(e), x))
          if (cat.compose(d, e) == g) ++solutions;
        if (solutions != 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

InjectivesReport enough_injectives(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  InjectivesReport r;
  r.injectives = injective_objects(cp);
  r.replacement.assign(cat.object_count(), std::nullopt);
  std::vector<bool> is_inj(cat.object_count(), false);
  for (ObjId y : r.injectives) is_inj[y] = true;
  for (ObjId x = 0; x < cat.object_count(); ++x) {
    // Injectives replace to themselves.
    if (is_inj[x]) {
      r.replacement[x] = cat.identity(x);
      continue;
    }
    for (ObjId y : r.injectives) {
      for (MorId f : cat.hom(x, y))
        if (cp.left.contains(f)) {
          r.replacement[x] = f;
          break;
        }
      if (r.replacement[x]) break;
    }
    if (!r.replacement[x]) r.lacking.push_back(x);
  }
  return r;
}

Report lemma_injectives(const ClassPair& cp) {
  const Category& cat = *cp.carrier;
  Report r("injective-lemmas");
  const auto inj = injective_objects(cp);
  std::vector<bool> is_inj(cat.object_count(), false);
  for (ObjId x : inj) is_inj[x] = true;

  Report between("maps-between-injectives-are-right");
  for (ObjId x : inj)
    for (ObjId y : inj)
      for (MorId f : cat.hom(x, y))
        if (!cp.right.contains(f)) between.fail(cat.morphism_name(f));
  r.add(std::move(between));

  Report closed("right-maps-into-injectives");
  for (MorId k : cp.right.members())
    if (is_inj[cat.target(k)] && !is_inj[cat.source(k)])
      closed.fail(cat.morphism_name(k) + " into injective from non-injective " +
                  cat.object_name(cat.source(k)));
  r.add(std::move(closed));

  Report terminal("terminal-map-criterion");
  if (auto t = terminal_object(cat)) {
    terminal.count("terminal_present", 1);
    for (ObjId x = 0; x < cat.object_count(); ++x) {
      MorId bang = cat.hom(x, *t).front();
      if (cp.right.contains(bang) != is_inj[x])
        terminal.fail(cat.object_name(x) + (is_inj[x] ? " injective but terminal map not right"
                                                      : " terminal map right but not injective"));
    }
  } else {
    terminal.count("terminal_present", 0);
  }
  r.add(std::move(terminal));
  r.count("injectives", static_cast<std::int64_t>(inj.size()));
  return r;
}

Report check_reflective(const CartesianFS& cfs) {
  const Category& cat = cfs.carrier();
  Report r("reflective-characterization");
  const InjectivesReport enough = enough_injectives(cfs);

  std::int64_t with_initial = 0;
  std::int64_t mismatched = 0;
  for (ObjId x = 0; x < cat.object_count(); ++x) {
    // Initial object of X ↓ C_R, scanning (Y, h) in index order.
    std::optional<MorId> initial;
    for (ObjId y : enough.injectives) {
      for (MorId h : cat.hom(x, y)) {
        bool is_initial = true;
        for (ObjId y2 : enough.injectives) {
          for (MorId h2 : cat.hom(x, y2)) {
            std::size_t k_count = 0;
            for (MorId k : cat.hom(y, y2))
              if (cat.compose(k, h) == h2) ++k_count;
            if (k_count != 1) {
              is_initial = false;
              break;
            }
          }
          if (!is_initial) break;
        }
        if (is_initial) {
          initial = h;
          break;
        }
      }
      if (initial) break;
    }
    if (initial) ++with_initial;
    const auto& chosen = enough.replacement[x];
    if (initial.has_value() != chosen.has_value()) {
      ++mismatched;
      r.fail(cat.object_name(x) + (initial ? " has an initial injective map but no replacement"
                                           : " has a replacement but no initial injective map"));
      continue;
    }
    if (!initial) continue;
    // The replacement must be the initial object up to iso under X.
    bool matched = false;
    for (MorId k : cat.hom(cat.target(*initial), cat.target(*chosen)))
      if (cat.is_isomorphism(k) && cat.compose(k, *initial) == *chosen) {
        matched = true;
        break;
      }
    if (!matched) r.fail(cat.object_name(x) + ": replacement not isomorphic to initial object");
  }

  // Functorial action by unique extension; flagged only.
  std::int64_t ambiguous = 0;
  if (enough.total()) {
    for (MorId f = 0; f < cat.morphism_count(); ++f) {
      MorId rx = *enough.replacement[cat.source(f)];
      MorId ry = *enough.replacement[cat.target(f)];
      MorId target_map = cat.compose(ry, f);
      std::size_t ext = 0;
      for (MorId d : cat.hom(cat.target(rx), cat.target(ry)))
        if (cat.compose(d, rx) == target_map) ++ext;
      if (ext != 1) {
        ++ambiguous;
        r.witnesses.push_back("flag: extension along " + cat.morphism_name(f) + " has " +
                              std::to_string(ext) + " solutions");
      }
    }
  }

  r.count("objects", static_cast<std::int64_t>(cat.object_count()));
  r.count("with_replacement", static_cast<std::int64_t>(cat.object_count() - enough.lacking.size()));
  r.count("with_initial_coslice_object", with_initial);
  r.count("enough_injectives", enough.total() ? 1 : 0);
  r.count("left_adjoint", with_initial == static_cast<std::int64_t>(cat.object_count()) ? 1 : 0);
  r.count("mismatched", mismatched);
  r.count("ambiguous_extensions", ambiguous);
  return r;
}

}  // namespace fibcat
