#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mixlogic/fixtures.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = mixlogic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return (mixlogic::default_fixture_dir() / rel).string(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("reduce") {
  auto r = run({"reduce", "--head-c", "((\\x.(C)\\y.x) a b)"});
  CHECK(r.code == 0);
  CHECK(r.out == "a\n");

  auto traced = run({"--trace", "reduce", "--head-c", "((\\x.(C)\\y.x) a b)"});
  CHECK(traced.out == "step 1: beta @ f => C (\\y.a) b\n"
                      "step 2: C @ - => (\\y.a) (\\x.x b)\n"
                      "step 3: beta @ - => a\n"
                      "a\n");

  CHECK(run({"reduce", "--beta", "(\\x.x) ((\\y.y) z)"}).out == "z\n");
  CHECK(run({"reduce", "--stack", "(\\x.x #p) y"}).out == "y #p\n");
  CHECK(run({"reduce", "--mu", "mu a.[a] f x"}).out == "f x\n");
  CHECK(run({"reduce", "--head", "builtin:zero"}).out == "\\x.\\f.x\n");

  auto looping = run({"--budget", "5", "reduce", "--head", "(\\x.x x) (\\x.x x)"});
  CHECK(looping.code == 1);
  CHECK(looping.err.find("budget exhausted after 5 steps") != std::string::npos);

  CHECK(run({"reduce", "--head", "C x"}).code == 1);
  CHECK(run({"reduce", "x"}).code == 2);
  CHECK(run({"reduce", "--head", "--beta", "x"}).code == 2);
}

TEST_CASE("parse errors report the position") {
  auto r = run({"reduce", "--head-c", "(\\x. x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("<argument>:1:7:") != std::string::npos);
  CHECK(run({"translate", "forall X (X(0) ->"}).code == 2);
  CHECK(run({"value", "builtin:nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("translate and classify") {
  CHECK(run({"translate", "--mode=simple-godel", "forall X (X(0) -> X(x))"}).out == "forall X (~X(0) -> ~X(x))\n");
  CHECK(run({"translate", "--mode", "godel", "forall Xc Xc(0)"}).out == "forall X* ~X*(0)\n");
  CHECK(run({"translate", "--mode=classical", "X(0) -> Y"}).out == "Xc(0) -> Yc\n");
  CHECK(run({"translate", "--mode=erase", "forall x X(x) -> X(0)"}).out == "X -> X\n");
  CHECK(run({"translate", "--mode=simple-godel", "Xc(0)"}).code == 1);

  CHECK(run({"classify", "polarity", "forall X X(0) -> A"}).out == "negative\n");
  CHECK(run({"classify", "classical-type", "forall Xc (A -> Xc(0))"}).out == "classical\n");
  CHECK(run({"classify", "classical-type", "X(0)"}).out == "not classical\n");
  CHECK(run({"classify", "mu-integer", "\\x.\\f.f (f x)"}).out == "integer n=2\n");
  CHECK(run({"classify", "mu-integer", "\\x.\\f.(\\y.y) x"}).out.starts_with("not an integer"));
}

TEST_CASE("value and rep") {
  CHECK(run({"value", fixture("terms/church3.lc")}).out == "n=3 m=3 I=[3,2,1,0] r=[0,1,2,3]\n");
  CHECK(run({"value", fixture("terms/classical3.lc")}).out.starts_with("n=3 "));
  CHECK(run({"value", "\\x.\\g.g"}).code == 1);

  CHECK(run({"rep", "f (f x)"}).out == "{2}\n");
  CHECK(run({"rep", fixture("terms/mu2.lmu")}).out == "{2}\n");
  CHECK(run({"rep", "mu a.[b] f x"}).out == "all\n");
  CHECK(run({"rep", "\\y.y"}).code == 1);
}

TEST_CASE("typecheck") {
  auto ok = run({"typecheck", fixture("derivations/succ.deriv")});
  CHECK(ok.code == 0);
  CHECK(ok.out.starts_with("valid succ (AF2): "));

  std::string text = slurp(fixture("derivations/succ.deriv"));
  auto at = text.find("(system AF2)");
  REQUIRE(at != std::string::npos);
  text.replace(at, 12, "(system M)");
  auto bad = std::filesystem::temp_directory_path() / "mixlogic-cli-bad.deriv";
  std::ofstream(bad) << text;
  auto r = run({"typecheck", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.starts_with("invalid succ at root"));
  CHECK(r.out.find("WrongSystem") != std::string::npos);

  std::ofstream(bad) << "(derivation x\n (system AF2) (rule";
  auto broken = run({"typecheck", bad.string()});
  CHECK(broken.code == 2);
  CHECK(broken.err.find(bad.string() + ":2:") != std::string::npos);
  std::filesystem::remove(bad);

  CHECK(run({"typecheck", "/nonexistent.deriv"}).code == 2);
}

TEST_CASE("storage-verify and characterize") {
  auto t1 = run({"storage-verify", "--candidate", "builtin:T1", "--mode", "church", "--n", "0..3"});
  CHECK(t1.code == 0);
  CHECK(t1.out.ends_with("simulated 12 of 12\n"));

  auto classical = run({"storage-verify", "--candidate", "builtin:T2", "--mode", "classical", "--n", "2"});
  CHECK(classical.code == 0);

  auto remark = run({"storage-verify", "--candidate", fixture("terms/remark-T1.lc"), "--mode", "classical", "--n", "0..2"});
  CHECK(remark.code == 1);
  CHECK(remark.out.ends_with("simulated 0 of 6\n"));

  CHECK(run({"storage-verify", "--candidate", "builtin:T1", "--mode", "mu", "--n", "0..2"}).code == 0);
  CHECK(run({"storage-verify", "--candidate", "builtin:T1", "--n", "3..1"}).code == 2);

  CHECK(run({"characterize", "--candidate", "builtin:abort", "--type", "bottom"}).out ==
        "abort confirmed for arities 0..5\n");
  CHECK(run({"characterize", "--candidate", "builtin:Cprime", "--type", "cc"}).out == "shape m=2 for arities 0..5\n");
  CHECK(run({"characterize", "--candidate", "\\x.C x", "--type", "cc", "--arity", "0..2"}).out ==
        "shape m=1 for arities 0..2\n");
  CHECK(run({"characterize", "--candidate", "\\x.x", "--type", "bottom"}).code == 1);
}

TEST_CASE("fixtures") {
  auto all = run({"fixtures", "run-all"});
  CHECK(all.code == 0);
  CHECK(all.out.ends_with("all criteria pass\n"));

  auto dir = std::filesystem::temp_directory_path() / "mixlogic-cli-fixtures";
  std::filesystem::remove_all(dir);
  auto gen = run({"--fixture-dir", dir.string(), "fixtures", "generate"});
  REQUIRE(gen.code == 0);
  for (const auto& name : mixlogic::fixture_names()) {
    auto written = mixlogic::fixture_path(dir, name);
    CHECK(slurp(written) == slurp(mixlogic::fixture_path(mixlogic::default_fixture_dir(), name)));
    CHECK(run({"typecheck", written.string()}).code == 0);
  }
  std::filesystem::remove_all(dir);

  CHECK(run({"fixtures", "run-all", "--only", "11"}).code == 2);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> argvs = {
      {"fixtures", "run-all", "--only", "6", "7", "8", "--seed", "5"},
      {"--trace", "--trace-format=structured", "reduce", "--mu", "(mu a.[a] f (mu b.[a] x)) v"},
      {"--trace", "value", fixture("terms/classical3.lc")},
      {"storage-verify", "--candidate", "builtin:T2", "--mode", "classical", "--n", "0..3"},
  };
  for (const auto& argv : argvs) {
    auto a = run(argv);
    auto b = run(argv);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
