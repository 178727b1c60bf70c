#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "episturm/power.hpp"
#include "episturm/subst.hpp"

using namespace episturm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("normalize") {
  Result r = run({"normalize", "a a' a a'"});
  CHECK(r.code == 0);
  CHECK(r.out == "a a a' a'\n");
  r = run({"normalize", "a", "b'", "@(ab)", "a"});
  CHECK(r.code == 0);
  CHECK(r.out == "a b b' @(ab)\n");
  r = run({"normalize", "--format", "machine", "a' a"});
  CHECK(r.out == "input: a' a\nnormal: a a'\nsteps: 1\n");
  CHECK(run({"normalize", "a''"}).code == 2);
}

TEST_CASE("power with trace") {
  const Result r = run({"power", "--nf", "a b' a c a' d' a' e' @()", "-n", "3", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a b' a c a d a' e a b a' c a d a' e a b a' c a' d' a' e' @()") != std::string::npos);
  CHECK(r.out.find("TypeI") != std::string::npos);
  CHECK(r.out.find("Z:") != std::string::npos);
  CHECK(r.out.find("Z':") != std::string::npos);
  CHECK(run({"power", "--nf", "a b'"}).code == 2);
  CHECK(run({"power", "--nf", "a' a", "-n", "2"}).code == 2);
}

TEST_CASE("machine output round trip") {
  const Result r = run({"power", "--nf", "c b' a c b' c a' b' @(ac)", "-n", "3", "--format", "machine"});
  REQUIRE(r.code == 0);
  const auto kv = read_key_values(r.out);
  CHECK(kv.at("final") == "c b' a c b' c a b a' b' c a b' a c b c' b' a c b' c a' b' @(ac)");
  CHECK(kv.at("kind") == "TypeI");
  const ErrorReport rep = parse_report(kv);
  CHECK(rep.kind == ErrorKind::TypeI);
  CHECK(rep.i == 7);
  CHECK(rep.p == 1);
  CHECK(run({"power", "--nf", "a", "-n", "2", "--format", "json"}).code == 2);
}

TEST_CASE("decompose and compose round trip") {
  for (const char* name : {"fibonacci.sub", "tribonacci.sub", "psi_b.sub"}) {
    CAPTURE(name);
    const Result d = run({"decompose", "--format", "machine", data(name)});
    REQUIRE(d.code == 0);
    const auto kv = read_key_values(d.out);
    const Result c = run({"compose", "--nf", kv.at("nf"), "--alphabet", kv.at("alphabet")});
    REQUIRE(c.code == 0);
    const Result orig = run({"compose", data(name)});
    CHECK(c.out == orig.out);
  }
  const Result fib = run({"decompose", data("fibonacci.sub")});
  CHECK(fib.out == "a @(ab)\n");
  const Result tm = run({"decompose", data("thue_morse.sub")});
  CHECK(tm.code == 1);
  CHECK(tm.out == "none\n");
}

TEST_CASE("compose files") {
  const Result r = run({"compose", data("fibonacci.sub"), data("fibonacci.sub")});
  CHECK(r.code == 0);
  CHECK(r.out == "a -> aba\nb -> ab\n");
  const Result stdin_r = run({"compose", "-"}, "a -> ab\nb -> a\n");
  CHECK(stdin_r.out == "a -> ab\nb -> a\n");
}

TEST_CASE("divide, common power, root") {
  Result r = run({"divide", data("psi_a.sub"), data("psi_b.sub")});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");
  r = run({"divide", data("fibonacci.sub"), data("fibonacci.sub")});
  CHECK(r.code == 0);
  CHECK(r.out == "a -> a\nb -> b\n");

  std::ostringstream f2, f3;
  f2 << to_string(power(parse_substitution("a -> ab\nb -> a\n"), 2));
  f3 << to_string(power(parse_substitution("a -> ab\nb -> a\n"), 3));
  r = run({"common-power", "-", data("fibonacci.sub")}, f2.str());
  CHECK(r.code == 0);
  CHECK(r.out == "1 2\n");
  r = run({"common-power", data("psi_a.sub"), data("psi_b.sub")});
  CHECK(r.code == 1);

  r = run({"root", "-", data("fibonacci.sub"), "-n", "1", "-m", "2", "--trace"}, f2.str());
  CHECK(r.code == 0);
  CHECK(r.out.find("# root: a @(ab)") != std::string::npos);
  CHECK(r.out.find("# k: 2") != std::string::npos);
  CHECK(r.out.find("# branch:") != std::string::npos);
  CHECK(r.out.find("a -> ab\nb -> a\n") != std::string::npos);
  CHECK(run({"root", data("fibonacci.sub"), data("fibonacci.sub"), "-n", "2"}).code == 2);
}

TEST_CASE("fixpoint, ar-check, stab-probe") {
  Result r = run({"fixpoint", data("fibonacci.sub"), "--prefix-len", "8"});
  CHECK(r.out == "abaababa\n");
  r = run({"ar-check", data("tribonacci.sub"), "--max-len", "6", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(read_key_values(r.out).at("complexity") == "3 5 7 9 11 13");
  r = run({"ar-check", data("thue_morse.sub"), "--max-len", "4"});
  CHECK(r.code == 1);
  r = run({"stab-probe", data("sigma.sub"), "--letter", "0", "--max-len", "8", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out == "morphism: 0->0 1->1\nmorphism: 0->01 1->100110\nmorphism: 0->011001 1->10\n");
  CHECK(run({"fixpoint", data("fibonacci.sub"), "--letter", "ab"}).code == 2);
  CHECK(run({"fixpoint", data("fibonacci.sub"), "--letter", "b"}).code == 1);
}

TEST_CASE("section5") {
  const Result r = run({"section5", "--prefix-len", "4096", "--max-len", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("malformed input and errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"decompose", data("malformed.sub")}).code == 2);
  CHECK(run({"decompose", data("missing.sub")}).code == 2);
  CHECK(run({"decompose", "-"}, "a -> ab\nb -> c\n").code == 2);
  const Result r = run({"compose", data("fibonacci.sub"), data("tribonacci.sub")});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"root", data("fibonacci.sub"), data("fibonacci.sub"), "--trace"};
  CHECK(run(args).out == run(args).out);
}
