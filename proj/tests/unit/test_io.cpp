#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fibcat/error.hpp"
#include "fibcat/io.hpp"
#include "helpers.hpp"

using namespace fibcat;
using namespace testing;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = FIBCAT_FIXTURES;

fs::path scratch(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "fibcat-io-test";
  fs::create_directories(dir);
  fs::path file = dir / name;
  std::ofstream(file) << content;
  return file;
}

Error parse_failure(const fs::path& file) {
  try {
    io::load_category(file);
  } catch (const Error& e) {
    return e;
  }
  FAIL("accepted");
  return Error(ErrorKind::InternalConsistency, "unreachable");
}

}  // namespace

TEST_CASE("shipped categories load and match the builders") {
  CHECK(*io::load_category(kFixtures / "fix1.cat") == *builders::terminal_category());
  CHECK(*io::load_category(kFixtures / "fix2.cat") == *builders::walking_arrow());
  CHECK(*io::load_category(kFixtures / "fix3.cat") == *builders::walking_isomorphism());
  CHECK(*io::load_category(kFixtures / "fix4.cat") == *builders::finite_sets(2));
  CHECK(*io::load_category(kFixtures / "fix5.cat") == *arrow_fixture().arrows.category);
}

TEST_CASE("declared arrow-category system matches the test oracle") {
  ClassPair cp = io::load_system(kFixtures / "fix5.sys");
  ArrowFixture fx = arrow_fixture();
  CHECK(cp.left == fx.declared.left);
  CHECK(cp.right == fx.declared.right);
}

TEST_CASE("file kinds") {
  CHECK(io::detect(io::read_json(kFixtures / "fix4.cat")) == io::FileKind::Category);
  CHECK(io::detect(io::read_json(kFixtures / "fix5.fun")) == io::FileKind::Functor);
  CHECK(io::detect(io::read_json(kFixtures / "fix5.sys")) == io::FileKind::System);
  CHECK(io::detect(io::read_json(kFixtures / "fix6.idx")) == io::FileKind::Indexed);
}

TEST_CASE("functor files carry the section") {
  io::FunctorFile f = io::load_functor(kFixtures / "fix5.fun");
  CHECK(f.functor == arrow_fixture().arrows.codomain);
  REQUIRE(f.section);
  CHECK(compose(f.functor, *f.section) == Functor::identity(f.functor.target_ptr()));
}

TEST_CASE("indexed files round-trip") {
  IndexedCategory ix = io::load_indexed(kFixtures / "fix6plus.idx");
  CHECK(ix == builders::fork_indexed());
  fs::path out = scratch("fork.idx", "");
  io::write_json(out, io::indexed_json(ix));
  CHECK(io::load_indexed(out) == ix);
}

TEST_CASE("malformed JSON reports a byte offset") {
  Error e = parse_failure(scratch("bad.cat", "{\"objects\": [\"a\",, ]}"));
  CHECK(e.kind() == ErrorKind::ParseError);
  REQUIRE(e.witnesses().size() == 2);
  CHECK(e.witnesses()[1].rfind("byte ", 0) == 0);
}

TEST_CASE("semantic errors report a JSON pointer") {
  Error e = parse_failure(scratch("nokey.cat", R"({"objects": ["a"], "morphisms": [{"name": "id_a", "src": "a"}]})"));
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.witnesses()[1] == "/morphisms/0");
  Error t = parse_failure(scratch("type.cat", R"({"objects": [1]})"));
  CHECK(t.witnesses()[1] == "/objects/0");
}

TEST_CASE("axiom violations pass through unchanged") {
  try {
    io::load_category(kFixtures / "bad_identity.cat");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
  }
}

TEST_CASE("emitted categories reload identically") {
  CategoryPtr sets = builders::finite_sets(2);
  fs::path out = scratch("sets.cat", "");
  io::write_json(out, io::category_json(*sets));
  CHECK(*io::load_category(out) == *sets);
}
