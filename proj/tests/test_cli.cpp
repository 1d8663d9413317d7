#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "revlang/cli.hpp"
#include "revlang/dfa_io.hpp"
#include "test_support.hpp"

using namespace revlang;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "reversible", "--alphabet", "abc", "--regex", "(abc)*+(cba)*"});
  CHECK(r.code == 0);
  CHECK(r.out == "reversible: yes\n");
  r = run({"check", "reversible", "--alphabet", "abc", "--regex", "bc(abc)*"});
  CHECK(r.code == 0);
  CHECK(r.out == "reversible: no (witness bc)\n");
  r = run({"check", "aperiodic", "--alphabet", "ab", "--regex", "((a+b)(a+b))*"});
  CHECK(r.out == "aperiodic: no (witness a)\n");
  r = run({"check", "ltt-identity", "--alphabet", "abc", "--regex", "c*ac*bc*"});
  CHECK(r.out.rfind("ltt-identity: fails (", 0) == 0);
  r = run({"check", "inv-identity", "--alphabet", "ab", "--regex", "aba*+a*ba"});
  CHECK(r.out == "inv-identity: holds\n");
  r = run({"check", "inv-identity", "--alphabet", "ab", "--regex", "(ab)*"});
  CHECK(r.out == "inv-identity: n/a (not reversible)\n");
}

TEST_CASE("word relations") {
  CHECK(run({"equiv", "--mode", "lrtt", "--k", "2", "--t", "1", "ab", "ba"}).out == "equivalent: yes\n");
  CHECK(run({"equiv", "--mode", "lrtt", "--k", "2", "--t", "1", "aba", "baa"}).out == "equivalent: no\n");
  CHECK(run({"equiv", "--mode", "ltt", "--k", "2", "--t", "1", "ababab", "abab"}).out == "equivalent: yes\n");
  const auto p = run({"profile", "--mode", "ltt", "--k", "2", "--t", "2", "abbab"});
  CHECK(p.code == 0);
  CHECK(p.out.find("bb:1") != std::string::npos);
  CHECK(run({"equiv", "--alphabet", "ab", "ab", "ca"}).code == 2);
}

TEST_CASE("formulas") {
  const std::string even = fixtures::data_path("even_length_n.sexp");
  CHECK(run({"eval", "--formula", even, "--word", "aba"}).out == "false\n");
  CHECK(run({"eval", "--formula", even, "--word", "abab"}).out == "true\n");
  CHECK(run({"eval", "--formula", even, "--word", "aaaaaaaaa"}).code == 3);
  CHECK(run({"eval", "--formula", even, "--word", "aaaaaaaaaa", "--mso-cap", "10"}).out == "true\n");
  CHECK(run({"lang", "--formula", even, "--alphabet", "ab", "--maxlen", "2"}).out == "aa\nab\nba\nbb\n");
  CHECK(run({"lang", "--formula", even, "--alphabet", "ab", "--maxlen", "2", "--format", "json"}).out ==
        "[\"aa\",\"ab\",\"ba\",\"bb\"]\n");
  CHECK(run({"eval", "--formula", "/nonexistent.sexp", "--word", "a"}).code == 2);

  const std::string nbr = fixtures::data_path("has_a.sexp");
  CHECK(run({"eval", "--formula", nbr, "--word", "_"}).out == "false\n");

  const auto rel = run({"relativize", "--formula", fixtures::data_path("both_letters_lt.sexp"), "--mode", "mso"});
  CHECK(rel.code == 0);
  CHECK(rel.out.find("bet") != std::string::npos);
  CHECK(run({"relativize", "--formula", fixtures::data_path("both_letters_lt.sexp"), "--mode", "prenex"})
            .code == 2);

  CHECK(run({"build-formula", "count", "ab", "2"}).code == 0);
  CHECK(run({"build-formula", "word", "ab"}).out.find("(N ") != std::string::npos);
  CHECK(run({"build-formula", "class", "abab", "--k", "2", "--alphabet", "ab"}).code == 0);
  CHECK(run({"build-formula", "class", "abab"}).code == 2);
  CHECK(run({"build-formula", "endpoints", "ab"}).code == 2);
  CHECK(run({"build-formula", "subword", "abc"}).out.find("bet") != std::string::npos);
  CHECK(run({"build-formula", "bet-from-n"}).out.find("forallS") != std::string::npos);
}

TEST_CASE("languages") {
  CHECK(run({"enumerate", "--alphabet", "ab", "--regex", "(ab)*", "--maxlen", "4"}).out == "ε\nab\nabab\n");
  const auto q = run({"quotient", "--alphabet", "abc", "--regex", "(abc)*+(cba)*", "--word", "a", "--format", "json"});
  CHECK(q.code == 0);
  CHECK(dfa_from_json(q.out) == compile("bc(abc)*", fixtures::abc()));
  const auto b = run({"birquotient", "--alphabet", "abc", "--regex", "(abc)*+(cba)*", "--u", "a", "--format", "json"});
  CHECK(dfa_from_json(b.out) == compile("bc(abc)*+(cba)*cb", fixtures::abc()));
  CHECK(run({"compile", "--alphabet", "ab", "--regex", "(ab)*", "--format", "dot"}).out.find("digraph") !=
        std::string::npos);

  const std::string path = "test_cli_dfa.json";
  {
    std::ofstream f(path);
    f << dfa_to_json(fixtures::ab_star());
  }
  CHECK(run({"enumerate", "--dfa", path, "--maxlen", "2"}).out == "ε\nab\n");
  CHECK(run({"enumerate", "--dfa", path, "--alphabet", "ba", "--maxlen", "2"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("classification and monoids") {
  const auto c = run({"classify", "--alphabet", "ab", "--regex", "(ab)*", "--format", "json"});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"not-reversible\"") != std::string::npos);
  const auto m = run({"monoid", "--alphabet", "ab", "--regex", "(ab)*"});
  CHECK(m.out.find("elements: 6") != std::string::npos);
  CHECK(m.out.find("idempotents: 0 3 4 5") != std::string::npos);
  const auto mj = run({"monoid", "--alphabet", "abc", "--regex", "(abc)*+(cba)*", "--format", "json"});
  CHECK(mj.out.find("\"involution\": [") != std::string::npos);

  const auto u = run({"union", "--alphabet", "abc", "--regex", "c*ac*bc*", "--mode", "ltt", "--k", "2", "--t", "2"});
  CHECK(u.out == "union of classes: no (cacbc / cbcac)\n");
  const auto s = run({"search", "--alphabet", "ab", "--regex", "aba*+a*ba", "--k-max", "4"});
  CHECK(s.out.find("search: found (k=3, t=2)") != std::string::npos);
  const auto a = run({"union", "--alphabet", "ab", "--regex", "aba*+a*ba", "--k", "3", "--t", "2", "--state-cap", "5"});
  CHECK(a.code == 3);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--maxlen", "3"}).code == 2);
  CHECK(run({"enumerate", "--regex", "ab", "--maxlen", "3"}).code == 2);
  CHECK(run({"enumerate", "--alphabet", "ab", "--regex", "a(", "--maxlen", "3"}).code == 2);
  CHECK(run({"enumerate", "--alphabet", "ab", "--regex", "ac", "--maxlen", "3"}).code == 2);
  CHECK(run({"equiv", "--mode", "xyz", "a", "b"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::vector<std::string> args{"classify", "--alphabet", "abc", "--regex", "c*ac*bc*"};
  CHECK(run(args).out == run(args).out);
}
