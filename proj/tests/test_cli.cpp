#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mihailova/autf3.hpp"
#include "mihailova/cli.hpp"
#include "mihailova/errors.hpp"
#include "mihailova/text.hpp"
#include "oracles.hpp"

using namespace mihailova;

namespace {

const std::string kTorus = std::string(MIHAILOVA_DATA_DIR) + "/torus.txt";
const std::string kTrefoil = std::string(MIHAILOVA_DATA_DIR) + "/trefoil.txt";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/mihailova_test_") + name;
  std::ofstream(path) << body;
  return path;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", kTorus});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("concise: yes; warnings: none") != std::string::npos);

  auto dup = temp_file("dup.txt", "rank 2\nrelator x1 x2 x1^-1 x2^-1\nrelator x2 x1 x2^-1 x1^-1\n");
  auto d = run({"check", dup});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("concise: no") != std::string::npos);
  CHECK(d.out.find("refined:\nrank 2\nrelator x1 x2 x1^-1 x2^-1\n") != std::string::npos);
  CHECK(d.out.find("relator x2 x1 x2^-1 x1^-1") == std::string::npos);

  auto bad = temp_file("bad.txt", "rank 2\nrelator x0 x1\n");
  auto b = run({"check", bad});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("line 2") != std::string::npos);

  CHECK(run({"check", "/nonexistent"}).code == kExitUsage);
}

TEST_CASE("relators") {
  auto r = run({"relators", kTorus, "--max-d-len", "2", "--verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("18 relators, all in ker(pi)") != std::string::npos);
  CHECK(count_lines(r.out) == 19);

  auto zero = run({"relators", kTrefoil, "--max-d-len", "0"});
  CHECK(zero.code == kExitOk);
  CHECK(count_lines(zero.out) == 2);
}

TEST_CASE("membership") {
  auto r = run({"membership", kTorus, "(1 , x1 x2 x1^-1 x2^-1)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("equal-in-H\nfactor 1", 0) == 0);
  auto v = parse_verdict(r.out, 2);
  CHECK(v.outcome == WpOutcome::EqualInH);
  CHECK(product_of_values(oracle::torus(), v.certificate) == Word(2, {1, 2, -1, -2}).inverse());

  auto no = run({"membership", kTorus, "(x1", ",", "x2)"});
  CHECK(no.code == kExitOk);
  CHECK(no.out.rfind("not-equal-in-H\nobstruction", 0) == 0);

  auto tight = run({"membership", kTorus, "(x1 x1 x2 x2 x1^-1 x1^-1 x2^-1 x2^-1 , 1)", "--budget-steps", "1"});
  CHECK(tight.code == kExitOk);
  CHECK(tight.out.rfind("unknown\nbudget steps", 0) == 0);

  CHECK(run({"membership", kTorus, "(x1 x2)"}).code == kExitUsage);
}

TEST_CASE("pi") {
  auto r = run({"pi", kTorus, "t1 d2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "(x2 , x1 x2 x1^-1)\n");
  CHECK(run({"pi", kTorus, "t2"}).code == kExitUsage);
}

TEST_CASE("reduce-identity") {
  auto r = run({"reduce-identity", kTorus, "t1^-1 d1 d2 d1^-1 d2^-1 t1 d2 d1 d2^-1 d1^-1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("delete 1") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 2) == "1\n");
  auto cert = parse_certificate(oracle::torus(), r.out);
  CHECK(cert.word_trail.back().empty());

  Presentation p = oracle::torus();
  MixedWord hard = theorem_relator_exchange(p, 1, 1, MixedWord::d(2, 1, 1));
  auto tight = run({"reduce-identity", kTorus, format_word(hard.word(), Alphabet::mixed(2, 1)), "--budget-steps", "1"});
  CHECK(tight.code == kExitOk);
  CHECK(tight.out.rfind("unknown\nbudget", 0) == 0);
  CHECK(run({"reduce-identity", kTorus, "[t1, d1]"}).code == kExitUsage);
  auto not_kernel = run({"reduce-identity", kTorus, "d1"});
  CHECK(not_kernel.code == kExitUsage);
  CHECK(not_kernel.err.find("kernel") != std::string::npos);
}

TEST_CASE("embed-aut") {
  auto r = run({"embed-aut", kTorus});
  CHECK(r.code == kExitOk);
  auto list = parse_endomorphisms(r.out);
  REQUIRE(list.size() == 3);
  CHECK(format_word(list[2].image_q(), Alphabet::f3()) == "q b a b^-1 a^-1");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "json", "check", kTorus}).code == kExitUsage);
  CHECK(run({"--format", "text", "check", kTorus}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("pair text") {
  PairWord pair(Word(2, {1, -2}), Word(2));
  CHECK(format_pair(pair) == "(x1 x2^-1 , 1)");
  CHECK(parse_pair(format_pair(pair), 2) == pair);
  CHECK_THROWS_AS(parse_pair("x1 , x2", 2), ParseError);
  CHECK_THROWS_AS(parse_pair("(x1 , x2 , x1)", 2), ParseError);
}
