#include "fibcat/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fibcat/double.hpp"
#include "fibcat/error.hpp"
#include "fibcat/io.hpp"

namespace fibcat::cli {

namespace {

using Handler = std::function<Report(const CheckRequest&)>;

const std::string& input(const CheckRequest& req, std::size_t i) {
  if (req.inputs.size() <= i)
    throw UsageError(req.command + ": expected " + std::to_string(i + 1) + " input file(s)");
  return req.inputs[i];
}

io::FileKind kind_of(const std::string& file, io::json* doc = nullptr) {
  io::json j = io::read_json(file);
  io::FileKind k = io::detect(j);
  if (doc) *doc = std::move(j);
  return k;
}

void expect_kind(const CheckRequest& req, const std::string& file, io::FileKind want, const char* what) {
  if (kind_of(file) != want) throw UsageError(req.command + ": " + file + " is not " + what);
}

std::int64_t n(std::size_t v) { return static_cast<std::int64_t>(v); }

CartesianFS load_cartesian(const std::string& file) {
  return CartesianFS::validate(FactorizationSystem::validate(io::load_system(file)));
}

Report cmd_validate(const CheckRequest& req) {
  const std::string& file = input(req, 0);
  Report r("validate");
  switch (kind_of(file)) {
    case io::FileKind::Category: {
      CategoryPtr c = io::load_category(file);
      r.count("objects", n(c->object_count()));
      r.count("morphisms", n(c->morphism_count()));
      break;
    }
    case io::FileKind::Functor: {
      io::FunctorFile f = io::load_functor(file);
      r.count("source_objects", n(f.functor.source().object_count()));
      r.count("source_morphisms", n(f.functor.source().morphism_count()));
      r.count("target_objects", n(f.functor.target().object_count()));
      r.count("target_morphisms", n(f.functor.target().morphism_count()));
      r.count("section", f.section ? 1 : 0);
      break;
    }
    case io::FileKind::System: {
      FactorizationSystem fs = FactorizationSystem::validate(io::load_system(file));
      r.count("objects", n(fs.carrier().object_count()));
      r.count("morphisms", n(fs.carrier().morphism_count()));
      r.count("left", n(fs.classes().left.count()));
      r.count("right", n(fs.classes().right.count()));
      break;
    }
    case io::FileKind::Indexed: {
      IndexedCategory ix = io::load_indexed(file);
      std::size_t objects = 0;
      for (const auto& f : ix.fibers()) objects += f->object_count();
      r.count("base_objects", n(ix.base().object_count()));
      r.count("base_morphisms", n(ix.base().morphism_count()));
      r.count("fiber_objects", n(objects));
      break;
    }
  }
  return r;
}

Report cmd_factorize(const CheckRequest& req) {
  FactorizationSystem fs = FactorizationSystem::validate(io::load_system(input(req, 0)));
  const Category& c = fs.carrier();
  Report r("factorize");
  auto show = [&](MorId f) {
    const Factorization& fac = fs.factorize(f);
    r.witnesses.push_back(c.morphism_name(f) + " = " + c.morphism_name(fac.m) + " . " +
                          c.morphism_name(fac.e) + " through " + c.object_name(fac.middle));
  };
  if (!req.options.morphism.empty()) {
    show(c.morphism(req.options.morphism));
  } else {
    for (MorId f = 0; f < c.morphism_count(); ++f) show(f);
  }
  r.count("morphisms", n(c.morphism_count()));
  r.count("left", n(fs.classes().left.count()));
  r.count("right", n(fs.classes().right.count()));
  return r;
}

Report cmd_cartesian(const CheckRequest& req) {
  ClassPair cp = io::load_system(input(req, 0));
  Report r("cartesian");
  r.add(lemma_suite(cp));
  Report valid("cartesian-factorization-system");
  std::optional<CartesianFS> cfs;
  try {
    cfs.emplace(CartesianFS::validate(FactorizationSystem::validate(cp)));
    valid.count("stability_witnesses", n(cfs->stability_witnesses().size()));
  } catch (const Error& err) {
    valid.fail(err.what());
  }
  r.add(std::move(valid));
  if (cfs) r.add(check_lr_squares_are_pullbacks(*cfs));
  return r;
}

Report cmd_injectives(const CheckRequest& req) {
  ClassPair cp = io::load_system(input(req, 0));
  Report r("injectives");
  r.add(lemma_injectives(cp));
  std::optional<CartesianFS> valid;
  try {
    valid.emplace(CartesianFS::validate(FactorizationSystem::validate(cp)));
  } catch (const Error& err) {
    Report rejected("cartesian-factorization-system");
    rejected.fail(err.what());
    r.add(std::move(rejected));
    return r;
  }
  const CartesianFS& cfs = *valid;
  const Category& c = cfs.carrier();
  InjectivesReport inj = enough_injectives(cfs);
  Report enough("enough-injectives");
  for (ObjId x = 0; x < c.object_count(); ++x) {
    if (inj.replacement[x])
      enough.witnesses.push_back(c.object_name(x) + " -> " + c.object_name(c.target(*inj.replacement[x])) +
                                 " via " + c.morphism_name(*inj.replacement[x]));
    else
      enough.fail(c.object_name(x) + " lacks a replacement");
  }
  enough.count("injectives", n(inj.injectives.size()));
  enough.count("lacking", n(inj.lacking.size()));
  r.add(std::move(enough));
  r.add(check_reflective(cfs));
  return r;
}

std::optional<FibrationWitness> fibration_of(const io::FunctorFile& f, Report& r) {
  try {
    return FibrationWitness::validate(f.functor);
  } catch (const Error& err) {
    r.fail(err.what());
    return std::nullopt;
  }
}

Report cmd_fibration(const CheckRequest& req) {
  io::FunctorFile f = io::load_functor(input(req, 0));
  Report r("fibration");
  auto fw = fibration_of(f, r);
  if (!fw) return r;
  r.count("cartesian", n(fw->cartesian().count()));
  r.count("lifts", n(fw->lifts().size()));
  r.count("on_the_nose", n(fw->count(LiftMode::OnTheNose)));
  r.count("up_to_iso", n(fw->count(LiftMode::UpToIso)));
  if (f.section) {
    Report rari("section-is-rari");
    try {
      validate_rari(*fw, *f.section);
    } catch (const Error& err) {
      rari.fail(err.what());
    }
    r.add(std::move(rari));
  }
  return r;
}

Report compare_classes(const ClassPair& got, const ClassPair& declared) {
  Report r("declared-classes");
  const Category& c = *got.carrier;
  if (!(c == *declared.carrier)) {
    r.fail("declared system lives on a different category");
    return r;
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (got.left.contains(f) != declared.left.contains(f)) r.fail("left differs at " + c.morphism_name(f));
    if (got.right.contains(f) != declared.right.contains(f)) r.fail("right differs at " + c.morphism_name(f));
  }
  return r;
}

Report cmd_phi(const CheckRequest& req) {
  io::FunctorFile f = io::load_functor(input(req, 0));
  Report r("phi");
  auto fw = fibration_of(f, r);
  if (!fw) return r;
  CartesianFS cfs = phi(*fw);
  r.count("left", n(cfs.classes().left.count()));
  r.count("right", n(cfs.classes().right.count()));
  if (req.inputs.size() > 1) r.add(compare_classes(cfs.classes(), io::load_system(req.inputs[1])));
  if (!req.options.output.empty()) io::write_json(req.options.output, io::system_json(cfs.classes()));
  return r;
}

Report cmd_xi(const CheckRequest& req) {
  CartesianFS cfs = load_cartesian(input(req, 0));
  const Category& c = cfs.carrier();
  InjectiveReplacement rep = xi(cfs);
  Report r("xi");
  for (ObjId x = 0; x < c.object_count(); ++x)
    r.witnesses.push_back(c.object_name(x) + " -> " + c.object_name(c.target(rep.replacement[x])) +
                          " via " + c.morphism_name(rep.replacement[x]));
  r.count("injectives", n(rep.inclusion.source().object_count()));
  r.count("on_the_nose", n(rep.fibration.count(LiftMode::OnTheNose)));
  r.count("up_to_iso", n(rep.fibration.count(LiftMode::UpToIso)));
  if (!req.options.output.empty()) {
    const Functor& p = rep.fibration.projection();
    io::write_json(req.options.output,
                   io::functor_json(p, io::category_json(p.source()), io::category_json(p.target())));
  }
  return r;
}

Report cmd_roundtrip(const CheckRequest& req) {
  const std::string& file = input(req, 0);
  io::FileKind k = kind_of(file);
  if (k == io::FileKind::System) return check_phi_xi_roundtrip(load_cartesian(file));
  if (k != io::FileKind::Functor) throw UsageError("roundtrip: expected a system or functor file");
  io::FunctorFile f = io::load_functor(file);
  Report r("roundtrip");
  auto fw = fibration_of(f, r);
  if (!fw) return r;
  std::optional<RariWitness> rari;
  if (f.section) {
    rari = validate_rari(*fw, *f.section);
  } else {
    rari = find_rari(*fw);
  }
  if (!rari) {
    r.fail("no right adjoint right inverse");
    return r;
  }
  r.add(check_xi_phi_roundtrip(*fw, *rari));
  return r;
}

Report cmd_dual(const CheckRequest& req) {
  CartesianFS cfs = load_cartesian(input(req, 0));
  DualCategory d = build_dual(cfs);
  Report r("dual");
  r.count("objects", n(d.category->object_count()));
  r.count("morphisms", n(d.category->morphism_count()));
  r.count("left", n(d.system.classes().left.count()));
  r.count("right", n(d.system.classes().right.count()));
  if (!req.options.output.empty()) io::write_json(req.options.output, io::system_json(d.system.classes()));
  return r;
}

Report cmd_double_dual(const CheckRequest& req) { return double_dual_check(load_cartesian(input(req, 0))); }

Report cmd_lens(const CheckRequest& req) {
  expect_kind(req, input(req, 0), io::FileKind::Indexed, "an indexed category");
  IndexedCategory ix = io::load_indexed(input(req, 0));
  GrothTotal l = lens_category(ix);
  const Category& lc = *l.total;
  const Category& b = ix.base();
  Report r("lens");
  r.count("objects", n(lc.object_count()));
  r.count("lenses", n(lc.morphism_count()));
  Report formula("hom-count-formula");
  for (ObjId x = 0; x < lc.object_count(); ++x)
    for (ObjId y = 0; y < lc.object_count(); ++y) {
      const TotalObject& ox = l.objects[x];
      const TotalObject& oy = l.objects[y];
      std::size_t expect = 0;
      for (MorId f : b.hom(ox.base, oy.base))
        expect += ix.fiber(ox.base).hom(ix.reindex(f)(oy.fiber), ox.fiber).size();
      if (expect != lc.hom(x, y).size())
        formula.fail(lc.object_name(x) + " -> " + lc.object_name(y));
    }
  r.add(std::move(formula));
  return r;
}

Report cmd_op_square(const CheckRequest& req) {
  expect_kind(req, input(req, 0), io::FileKind::Indexed, "an indexed category");
  return check_fiberwise_op_square(io::load_indexed(input(req, 0)));
}

Report cmd_double(const CheckRequest& req) {
  const std::string& file = input(req, 0);
  if (req.options.span) {
    expect_kind(req, file, io::FileKind::System, "a system file");
    DoubleCategory d = span_double(load_cartesian(file));
    Report r = check_double_category(d, req.options.interchange);
    r.check = "span-double";
    r.count("vertical_morphisms", n(d.vertical->morphism_count()));
    r.count("horizontal_morphisms", n(d.horizontal->morphism_count()));
    return r;
  }
  expect_kind(req, file, io::FileKind::Indexed, "an indexed category");
  DoubleCategory d = grothendieck_double(io::load_indexed(file));
  Report r = check_double_category(d);
  r.check = "grothendieck-double";
  r.count("vertical_morphisms", n(d.vertical->morphism_count()));
  r.count("horizontal_morphisms", n(d.horizontal->morphism_count()));
  return r;
}

Report cmd_double_equiv(const CheckRequest& req) {
  expect_kind(req, input(req, 0), io::FileKind::Indexed, "an indexed category");
  return check_double_equivalence(io::load_indexed(input(req, 0)));
}

Report cmd_check_all(const CheckRequest& req) {
  return check_all(req.inputs.empty() ? req.options.fixtures : req.inputs[0]);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},         {"factorize", cmd_factorize},
      {"cartesian", cmd_cartesian},       {"injectives", cmd_injectives},
      {"fibration", cmd_fibration},       {"phi", cmd_phi},
      {"xi", cmd_xi},                     {"roundtrip", cmd_roundtrip},
      {"dual", cmd_dual},                 {"double-dual", cmd_double_dual},
      {"lens", cmd_lens},                 {"op-square", cmd_op_square},
      {"double", cmd_double},             {"double-equiv", cmd_double_equiv},
      {"check-all", cmd_check_all},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "validate", "factorize", "cartesian", "injectives", "fibration",     "phi",          "xi",
      "roundtrip", "dual",     "double-dual", "lens",     "op-square",     "double",       "double-equiv",
      "check-all"};
  return names;
}

Report run(const CheckRequest& req) {
  auto it = handlers().find(req.command);
  if (it == handlers().end()) throw UsageError("unknown command '" + req.command + "'");
  try {
    return it->second(req);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::ParseError) throw;
    Report r(req.command);
    r.fail(err.what());
    return r;
  }
}

Report check_all(const std::string& dir) {
  const io::fs::path root(dir);
  const io::fs::path bundle = root / "bundle.json";
  io::json doc = io::read_json(bundle);
  if (!doc.contains("checks") || !doc["checks"].is_array())
    throw Error(ErrorKind::ParseError, "missing key 'checks'", {bundle.string(), "/"});
  Report r("check-all");
  std::int64_t passed = 0, expected_failures = 0;
  for (std::size_t i = 0; i < doc["checks"].size(); ++i) {
    const io::json& entry = doc["checks"][i];
    const std::string where = "/checks/" + std::to_string(i);
    if (!entry.contains("name") || !entry.contains("command") || !entry.contains("inputs"))
      throw Error(ErrorKind::ParseError, "check entry needs name, command and inputs",
                  {bundle.string(), where});
    CheckRequest sub;
    sub.command = entry["command"].get<std::string>();
    for (const auto& in : entry["inputs"]) sub.inputs.push_back((root / in.get<std::string>()).string());
    sub.options.span = entry.value("span", false);
    sub.options.interchange = entry.value("interchange", false);
    const bool expect_pass = entry.value("expect", std::string("pass")) == "pass";
    Report child = run(sub);
    Report wrapped(entry["name"].get<std::string>());
    wrapped.count("expected_pass", expect_pass ? 1 : 0);
    if (child.verdict != expect_pass)
      wrapped.fail(std::string("expected ") + (expect_pass ? "pass" : "fail") + ", got " +
                   (child.verdict ? "pass" : "fail"));
    if (wrapped.verdict) ++passed;
    if (!expect_pass) ++expected_failures;
    wrapped.attach(std::move(child));
    r.add(std::move(wrapped));
  }
  r.count("checks", static_cast<std::int64_t>(doc["checks"].size()));
  r.count("matched", passed);
  r.count("expected_failures", expected_failures);
  return r;
}

}  // namespace fibcat::cli
