// Acceptance run: one line per criterion, nonzero exit if any fails.
// usage: acceptance <fixtures-dir> <fibcat-binary>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fibcat/cli.hpp"
#include "fibcat/double.hpp"
#include "fibcat/dual.hpp"
#include "fibcat/error.hpp"
#include "fibcat/fibration.hpp"
#include "fibcat/indexed.hpp"
#include "fibcat/io.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace testing;
namespace fs = std::filesystem;

namespace {

fs::path g_fixtures;
std::string g_binary;

// Thrown by `expect` with a one-line reason.
struct Miss {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Miss{why};
}

ClassPair sys(const std::string& name) { return io::load_system(g_fixtures / name); }

// First failing leaf that names a witness.
const Report* failing_witness(const Report& r) {
  if (r.verdict) return nullptr;
  for (const auto& c : r.children)
    if (const Report* w = failing_witness(c)) return w;
  return r.witnesses.empty() ? nullptr : &r;
}

const std::vector<std::string> kSystems = {"fix1_iso_all.sys", "fix2_iso_all.sys", "fix2_all_iso.sys",
                                           "fix3_iso_all.sys", "fix4_iso_all.sys", "fix4_all_iso.sys",
                                           "fix5.sys"};

std::string lemma_suites() {
  for (const auto& name : kSystems) {
    Report r = lemma_suite(sys(name));
    expect(r.verdict, name + " lemma suite failed");
  }
  std::ostringstream out;
  const std::vector<std::pair<std::string, std::string>> mutations = {
      {"cartesian", "fix5_drop_pullback.sys"},
      {"cartesian", "fix2_all_all.sys"},
      {"injectives", "fix5_drop_injective.sys"}};
  for (const auto& [command, file] : mutations) {
    Report r = cli::run({command, {(g_fixtures / file).string()}, {}});
    expect(!r.verdict, file + " passed");
    const Report* w = failing_witness(r);
    expect(w != nullptr, file + " failed without a witness");
    out << " " << file << "->" << w->check << "[" << w->witnesses.front() << "]";
  }
  return std::to_string(kSystems.size()) + " systems pass; mutations:" + out.str();
}

std::string lr_squares() {
  ArrowFixture fx = arrow_fixture();
  expect(sys("fix5.sys").left == fx.declared.left, "fix5.sys differs from the oracle classes");
  Report r = check_lr_squares_are_pullbacks(cartesian(sys("fix5.sys")));
  expect(r.verdict, "counterexample square");
  return std::to_string(r.count_of("squares")) + " squares, 0 counterexamples";
}

std::string phi_codomain() {
  io::FunctorFile f = io::load_functor(g_fixtures / "fix5.fun");
  CartesianFS induced = phi(FibrationWitness::validate(f.functor));
  ClassPair declared = sys("fix5.sys");
  expect(induced.classes().left == declared.left, "vertical class differs");
  expect(induced.classes().right == declared.right, "cartesian class differs");
  return "left " + std::to_string(declared.left.count()) + ", right " + std::to_string(declared.right.count()) +
         " morphisms equal";
}

std::string roundtrips() {
  for (const auto& name : {"fix4_iso_all.sys", "fix4_all_iso.sys", "fix5.sys"}) {
    Report r = check_phi_xi_roundtrip(cartesian(sys(name)));
    expect(r.verdict, std::string("phi(xi) on ") + name);
  }
  io::FunctorFile f = io::load_functor(g_fixtures / "fix5.fun");
  expect(f.section.has_value(), "fix5.fun lacks its section");
  FibrationWitness cod = FibrationWitness::validate(f.functor);
  Report back = check_xi_phi_roundtrip(cod, validate_rari(cod, *f.section));
  expect(back.verdict, "xi(phi) on the codomain fibration");
  return "phi(xi) on 3 systems, xi(phi) equivalence on the codomain fibration";
}

std::string dual() {
  ClassPair cp = sys("fix5.sys");
  DualCategory d = build_dual(cartesian(cp));
  // Re-validate through the file format and the system validators.
  fs::path tmp = fs::temp_directory_path() / "fibcat-acceptance-dual.cat";
  io::write_json(tmp, io::category_json(*d.category));
  CategoryPtr reloaded = io::load_category(tmp);
  expect(*reloaded == *d.category, "dual does not reload");
  cartesian(d.system.classes());
  const Category& c = *cp.carrier;
  for (ObjId a = 0; a < c.object_count(); ++a)
    for (ObjId b = 0; b < c.object_count(); ++b)
      expect(d.category->hom(a, b).size() == oracle_span_classes(cp, a, b),
             "hom(" + c.object_name(a) + ", " + c.object_name(b) + ")");
  for (const auto& name : kSystems)
    expect(double_dual_check(cartesian(sys(name))).verdict, "double dual on " + name);
  return std::to_string(d.category->morphism_count()) + " dual morphisms, hom counts match, double dual on " +
         std::to_string(kSystems.size()) + " systems";
}

// Lenses ⟨f♯, f⟩ : ⟨e,b⟩ → ⟨e2,b2⟩ by table scan: f : b → b2, f♯ : f*e2 → e.
std::size_t oracle_lens_count(const IndexedCategory& ix, ObjId b, ObjId e, ObjId b2, ObjId e2) {
  std::size_t n = 0;
  const Category& base = ix.base();
  for (MorId f = 0; f < base.morphism_count(); ++f) {
    if (base.source(f) != b || base.target(f) != b2) continue;
    const Category& fib = ix.fiber(b);
    ObjId pulled = ix.reindex(f)(e2);
    for (MorId s = 0; s < fib.morphism_count(); ++s)
      if (fib.source(s) == pulled && fib.target(s) == e) ++n;
  }
  return n;
}

std::string op_square_one(const std::string& file, bool pinned) {
  IndexedCategory ix = io::load_indexed(g_fixtures / file);
  // Derived counts first: lenses from the fibers, spans from the total
  // category with vertical/cartesian classes found by brute force.
  GrothTotal total = grothendieck(ix);
  const Category& t = *total.total;
  ClassPair classes{total.total, MorphismSet(t.morphism_count()), MorphismSet(t.morphism_count())};
  for (MorId m = 0; m < t.morphism_count(); ++m) {
    if (oracle_iso(ix.base(), total.projection.map_morphism(m))) classes.left.insert(m);
    if (oracle_cartesian(total.projection, m)) classes.right.insert(m);
  }
  std::map<std::pair<ObjId, ObjId>, std::size_t> lenses, spans;
  for (ObjId x = 0; x < t.object_count(); ++x)
    for (ObjId y = 0; y < t.object_count(); ++y) {
      const TotalObject& a = total.objects[x];
      const TotalObject& b = total.objects[y];
      lenses[{x, y}] = oracle_lens_count(ix, a.base, a.fiber, b.base, b.fiber);
      spans[{x, y}] = oracle_span_classes(classes, x, y);
      expect(lenses[{x, y}] == spans[{x, y}], file + ": derived lens and span counts differ");
    }
  std::string detail;
  if (pinned) {
    ObjId b0 = ix.base().object("b0"), b1 = ix.base().object("b1");
    ObjId e0 = total.object_of(b0, ix.fiber(b0).object("e0"));
    ObjId e1 = total.object_of(b0, ix.fiber(b0).object("e1"));
    ObjId star = total.object_of(b1, ix.fiber(b1).object("*"));
    expect(lenses[{e0, star}] == 0 && lenses[{e1, star}] == 1, file + ": pinned counts");
    detail = " hom(<e0,b0>,<*,b1>)=0 hom(<e1,b0>,<*,b1>)=1";
  }

  Report r = check_fiberwise_op_square(ix);
  expect(r.verdict, file + ": comparison is not an equivalence");
  FiberwiseOpComparison cmp = fiberwise_op_comparison(ix);
  for (ObjId x = 0; x < t.object_count(); ++x)
    for (ObjId y = 0; y < t.object_count(); ++y) {
      expect(cmp.lenses.total->hom(x, y).size() == lenses[{x, y}], file + ": lens hom count");
      expect(cmp.dual.category->hom(cmp.phi(x), cmp.phi(y)).size() == spans[{x, y}], file + ": span hom count");
    }
  return file + ":" + detail + " ok";
}

std::string op_square() { return op_square_one("fix6.idx", true) + "; " + op_square_one("fix6plus.idx", false); }

std::string double_equivalence() {
  IndexedCategory ix = io::load_indexed(g_fixtures / "fix6.idx");
  Report eq = check_double_equivalence(ix);
  expect(eq.verdict, "double equivalence failed");
  const Report* sq = eq.find("square-correspondence");
  expect(sq && sq->count_of("mismatched") == 0, "square sets differ");
  DoubleCategory g = grothendieck_double(ix);
  Report dc = check_double_category(g);
  const Report* inter = dc.find("interchange");
  expect(dc.verdict && inter && inter->verdict, "interchange");
  // Baseline from the first verified run.
  expect(g.squares.size() == 15, "square count " + std::to_string(g.squares.size()) + " != 15");
  return std::to_string(g.squares.size()) + " squares, bijective, interchange on " +
         std::to_string(inter->count_of("grids")) + " grids";
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  expect(p != nullptr, "cannot run " + command);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  expect(status == 0, "check-all exit status " + std::to_string(status));
  return out;
}

std::string determinism() {
  std::string cmd = "'" + g_binary + "' check-all --fixtures '" + g_fixtures.string() + "' --format structured";
  std::string first = capture(cmd);
  std::string second = capture(cmd);
  expect(!first.empty(), "empty report");
  expect(first == second, "reports differ");
  return std::to_string(first.size()) + " bytes identical";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <fixtures-dir> <fibcat-binary>\n";
    return 2;
  }
  g_fixtures = argv[1];
  g_binary = argv[2];

  struct Criterion {
    int number;
    const char* name;
    double limit_s;  // 0: no limit
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lemma suites and mutations", 10, lemma_suites},
      {2, "left/right squares are pullbacks", 30, lr_squares},
      {3, "phi of the codomain fibration", 0, phi_codomain},
      {4, "phi/xi round trips", 0, roundtrips},
      {5, "dual category", 60, dual},
      {6, "fiberwise opposite comparison", 0, op_square},
      {7, "double category equivalence", 0, double_equivalence},
      {8, "check-all determinism", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Miss& m) {
      ok = false;
      detail = m.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      detail += " (over time limit)";
    }
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.number << " " << (ok ? "PASS" : "FAIL") << " " << c.name << ": " << detail
              << " [" << timing << "]" << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
