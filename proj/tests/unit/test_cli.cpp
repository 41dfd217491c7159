#include <doctest.h>

#include <filesystem>

#include "fibcat/cli.hpp"
#include "fibcat/error.hpp"
#include "fibcat/io.hpp"

using namespace fibcat;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = FIBCAT_FIXTURES;

Report run(const std::string& command, std::vector<std::string> inputs, cli::Options options = {}) {
  cli::CheckRequest req{command, {}, std::move(options)};
  for (auto& in : inputs) req.inputs.push_back((kFixtures / in).string());
  return cli::run(req);
}

}  // namespace

TEST_CASE("validate the terminal category") {
  Report r = run("validate", {"fix1.cat"});
  CHECK(r.verdict);
  CHECK(r.count_of("objects") == 1);
  CHECK(r.count_of("morphisms") == 1);
}

TEST_CASE("dual output re-validates") {
  fs::path out = fs::temp_directory_path() / "fibcat-cli-dual.sys";
  cli::Options opts;
  opts.output = out.string();
  CHECK(run("dual", {"fix5.sys"}, opts).verdict);
  cli::CheckRequest again{"validate", {out.string()}, {}};
  Report r = cli::run(again);
  CHECK(r.verdict);
  CHECK(r.count_of("morphisms") == 94);
}

TEST_CASE("phi output equals the declared system") {
  fs::path out = fs::temp_directory_path() / "fibcat-cli-phi.sys";
  cli::Options opts;
  opts.output = out.string();
  Report r = run("phi", {"fix5.fun", "fix5.sys"}, opts);
  CHECK(r.verdict);
  CHECK(r.find("declared-classes")->verdict);
  ClassPair written = io::load_system(out);
  ClassPair declared = io::load_system(kFixtures / "fix5.sys");
  CHECK(written.left == declared.left);
  CHECK(written.right == declared.right);
}

TEST_CASE("module diagnostics surface verbatim") {
  Report r = run("xi", {"pair_all_iso.sys"});
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == "NoEnoughInjectives: objects lacking an injective replacement [a, b]");

  Report nf = run("fibration", {"incl_b.fun"});
  CHECK_FALSE(nf.verdict);
  CHECK(nf.witnesses[0].rfind("NotAFibration", 0) == 0);

  Report strict = run("double-equiv", {"fix6plus_nonstrict.idx"});
  CHECK_FALSE(strict.verdict);
  CHECK(strict.witnesses[0].find("strictness") != std::string::npos);
}

TEST_CASE("usage and parse errors propagate") {
  CHECK_THROWS_AS(run("nonsense", {"fix1.cat"}), cli::UsageError);
  CHECK_THROWS_AS(run("validate", {}), cli::UsageError);
  CHECK_THROWS_AS(run("lens", {"fix1.cat"}), cli::UsageError);
  try {
    run("validate", {"missing.cat"});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("factorize one morphism") {
  cli::Options opts;
  opts.morphism = "f01>f12_0:f01,f12_0";
  Report r = run("factorize", {"fix5.sys"}, opts);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].find("through id1") != std::string::npos);
}

TEST_CASE("every command is dispatched") {
  for (const std::string& c : cli::commands()) CHECK_THROWS_AS(run(c, {"no-such-file"}), Error);
}
