#include <doctest.h>

#include <map>
#include <random>

#include "revlang/error.hpp"
#include "revlang/ltt.hpp"
#include "revlang/profile_automaton.hpp"
#include "test_support.hpp"

using namespace revlang;
using namespace fixtures;

namespace {

Word rep(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out += w;
  return out;
}

/// Word pairs of length <= n in one class but split by the automaton.
bool brute_force_split(const Dfa& a, int k, int t, LocalMode mode, std::size_t n) {
  std::map<std::string, bool> seen;
  for (const Word& w : all_words(a.alphabet(), n)) {
    const std::string key = mode == LocalMode::Ltt ? to_string(ltt_class(w, k, t))
                                                   : to_string(lrtt_class(w, k, t));
    auto [it, fresh] = seen.try_emplace(key, a.accepts(w));
    if (!fresh && it->second != a.accepts(w)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("factor counts") {
  CHECK(count_factor("abbab", "bb") == 1);
  CHECK(count_factor("aaa", "aa") == 2);
  CHECK(count_factor("abab", "ba") == 1);
  CHECK(count_factor("ab", "abc") == 0);
  CHECK_THROWS_AS(count_factor("ab", ""), std::invalid_argument);

  CHECK(count_factor_rev("abab", "ab") == 3);
  CHECK(count_factor_rev("aaa", "aa") == 2);
  CHECK(count_factor_rev("", "a") == 0);
  CHECK_THROWS_AS(count_factor_rev("ab", ""), std::invalid_argument);
  for (const Word& w : all_words(ab(), 6)) {
    for (const Word& v : all_words(ab(), 3)) {
      if (v.empty()) continue;
      CHECK(count_factor_rev(w, v) == count_factor_rev(reversed(w), v));
      CHECK(count_factor_rev(w, v) == count_factor_rev(w, reversed(v)));
    }
  }
  CHECK(canonical_factor("ba") == "ab");
  CHECK(canonical_factor("aba") == "aba");
}

TEST_CASE("threshold equivalences") {
  CHECK(ltt_equiv("ababab", "abab", 2, 1));
  CHECK_FALSE(ltt_equiv("abab", "abbab", 2, 1));
  CHECK_FALSE(ltt_equiv("ababab", "abab", 2, 2));

  CHECK(lrtt_equiv("ab", "ba", 2, 1));
  CHECK_FALSE(lrtt_equiv("aba", "baa", 2, 1));
  const Word c3 = "ccc";
  CHECK(lrtt_equiv(c3 + "ab" + c3 + "ba" + c3 + "ab" + c3, c3 + "ab" + c3 + "ab" + c3 + "ab" + c3, 3, 2));

  // Short words: classes are {w} resp. {w, w^r}; length k-1 is still short.
  CHECK(ltt_equiv("a", "a", 2, 1));
  CHECK_FALSE(ltt_equiv("ab", "ba", 3, 1));
  CHECK(lrtt_equiv("ab", "ba", 3, 1));
  CHECK_FALSE(lrtt_equiv("ab", "aab", 3, 1));
  CHECK(std::holds_alternative<ShortWordClass>(lrtt_class("", 1, 1)));
  CHECK(std::holds_alternative<LrttProfile>(lrtt_class("a", 1, 1)));
  CHECK(to_string(ltt_class("abab", 2, 1)).find("ab:1") != std::string::npos);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 12), letter(0, 2);
  for (int i = 0; i < 300; ++i) {
    Word w;
    for (int j = len(rng); j > 0; --j) w.push_back(abc()[letter(rng)]);
    for (int k = 1; k <= 3; ++k) {
      for (int t = 1; t <= 3; ++t) CHECK(lrtt_equiv(w, reversed(w), k, t));
    }
  }
}

TEST_CASE("ltt refines lrtt") {
  const auto words = all_words(ab(), 5);
  for (int k = 1; k <= 3; ++k) {
    for (int t = 1; t <= 3; ++t) {
      for (const Word& u : words) {
        for (const Word& w : words) {
          if (ltt_equiv(u, w, k, t)) CHECK(lrtt_equiv(u, w, k, t));
        }
      }
    }
  }
}

TEST_CASE("one-sided congruence") {
  const auto words = all_words(ab(), 4);
  const auto contexts = all_words(ab(), 2);
  for (int k = 1; k <= 3; ++k) {
    for (int t = 1; t <= 2; ++t) {
      for (const Word& v : words) {
        for (const Word& w : words) {
          if (!lrtt_equiv(v, w, k, t)) continue;
          for (const Word& u : contexts) {
            CHECK((lrtt_equiv(u + v, u + w, k, t) || lrtt_equiv(u + v, u + reversed(w), k, t)));
            CHECK((lrtt_equiv(v + u, w + u, k, t) || lrtt_equiv(v + u, reversed(w) + u, k, t)));
          }
        }
      }
    }
  }
}

TEST_CASE("profile automaton reproduces profiles") {
  for (const Alphabet* a : {&ab(), &abc()}) {
    const std::size_t n = a->size() == 2 ? 8 : 6;
    const auto words = all_words(*a, n);
    for (int k = 1; k <= 3; ++k) {
      for (int t = 1; t <= 3; ++t) {
        const ProfileAutomaton ltt(*a, k, t, LocalMode::Ltt);
        const ProfileAutomaton lrtt(*a, k, t, LocalMode::Lrtt);
        for (const Word& w : words) {
          CHECK(ltt.ltt_class_of(ltt.run(w)) == ltt_class(w, k, t));
          CHECK(lrtt.lrtt_class_of(lrtt.run(w)) == lrtt_class(w, k, t));
        }
      }
    }
  }
}

TEST_CASE("factor_count_dfa") {
  using R = CountClause::Relation;
  const Dfa one_ab = factor_count_dfa(ab(), {{"ab", R::Eq, 1}});
  CHECK(one_ab.accepts("ab"));
  CHECK(one_ab.accepts("aab"));
  CHECK_FALSE(one_ab.accepts("abab"));
  CHECK_FALSE(one_ab.accepts("ba"));
  CHECK(factor_count_dfa(ab(), {}) == Dfa::universal(ab()));
  CHECK_THROWS_AS(factor_count_dfa(ab(), {{"ab", R::Ge, 9}}), CapExceeded);

  const Dfa ge = factor_count_dfa(abc(), {{"ab", R::Ge, 2}, {"c", R::Eq, 0}});
  for (const Word& w : all_words(abc(), 6)) {
    CHECK(ge.accepts(w) == (count_factor(w, "ab") >= 2 && count_factor(w, "c") == 0));
  }
  const Dfa ex5 = example5();
  CHECK(ex5.accepts("ccabccbaccabcc"));
  CHECK_FALSE(ex5.accepts("ccabccabccabcc"));
  CHECK(is_reversible(ex5));
}

TEST_CASE("union of classes: fixtures") {
  CHECK(is_union_of_classes(ab_star(), 2, 1, LocalMode::Ltt).kind == UnionVerdict::Kind::Yes);

  const Dfa l = c_a_c_b_c();
  const UnionVerdict v = is_union_of_classes(l, 2, 2, LocalMode::Ltt);
  REQUIRE(v.kind == UnionVerdict::Kind::No);
  const auto& [x, y] = *v.witness;
  CHECK(ltt_equiv(x, y, 2, 2));
  CHECK(l.accepts(x) != l.accepts(y));
  CHECK(x == "cacbc");
  CHECK(y == "cbcac");

  const Dfa ex5 = example5();
  const UnionVerdict r = is_union_of_classes(ex5, 2, 3, LocalMode::Lrtt);
  REQUIRE(r.kind == UnionVerdict::Kind::No);
  CHECK(lrtt_equiv(r.witness->first, r.witness->second, 2, 3));
  CHECK(ex5.accepts(r.witness->first) != ex5.accepts(r.witness->second));

  UnionOptions tiny;
  tiny.state_cap = 50;
  const UnionVerdict aborted = is_union_of_classes(ex5, 2, 3, LocalMode::Ltt, tiny);
  CHECK(aborted.kind == UnionVerdict::Kind::Aborted);
  CHECK(aborted.states_explored > 50);
}

TEST_CASE("union of classes: soundness on random languages") {
  std::mt19937 rng(23);
  for (int i = 0; i < 25; ++i) {
    const Dfa d = compile(random_regex(rng, ab(), 6), ab());
    for (auto mode : {LocalMode::Ltt, LocalMode::Lrtt}) {
      for (int k = 1; k <= 3; ++k) {
        for (int t = 1; t <= 2; ++t) {
          const UnionVerdict v = is_union_of_classes(d, k, t, mode);
          REQUIRE(v.kind != UnionVerdict::Kind::Aborted);
          if (v.kind == UnionVerdict::Kind::Yes) {
            CHECK_FALSE(brute_force_split(d, k, t, mode, 8));
          } else {
            const auto& [x, y] = *v.witness;
            CHECK(local_equiv(x, y, k, t, mode));
            CHECK(d.accepts(x) != d.accepts(y));
            CHECK(ab().shortlex_less(x, y));
          }
        }
      }
      // Monotone in both parameters.
      for (int k = 1; k <= 2; ++k) {
        for (int t = 1; t <= 2; ++t) {
          if (is_union_of_classes(d, k, t, mode).kind != UnionVerdict::Kind::Yes) continue;
          CHECK(is_union_of_classes(d, k + 1, t, mode).kind == UnionVerdict::Kind::Yes);
          CHECK(is_union_of_classes(d, k, t + 1, mode).kind == UnionVerdict::Kind::Yes);
        }
      }
    }
  }
}

TEST_CASE("search_params") {
  const ParamSearch s = search_params(aba_or_aba(), 4, 3, LocalMode::Lrtt);
  REQUIRE(s.outcome == ParamSearch::Outcome::Found);
  CHECK(s.k == 3);
  CHECK(s.t == 2);
  CHECK(s.trace.size() == 8);  // (1,1..3), (2,1..3), (3,1), (3,2)

  const ParamSearch ab = search_params(ab_star(), 3, 3, LocalMode::Ltt);
  REQUIRE(ab.outcome == ParamSearch::Outcome::Found);
  CHECK(ab.k == 2);
  CHECK(ab.t == 1);

  const ParamSearch none = search_params(c_a_c_b_c(), 3, 3, LocalMode::Ltt);
  CHECK(none.outcome == ParamSearch::Outcome::None);
  CHECK(none.trace.size() == 9);

  UnionOptions tiny;
  tiny.state_cap = 10;
  CHECK(search_params(c_a_c_b_c(), 1, 1, LocalMode::Ltt, tiny).outcome == ParamSearch::Outcome::None);
  CHECK(search_params(c_a_c_b_c(), 3, 3, LocalMode::Ltt, tiny).outcome == ParamSearch::Outcome::Aborted);
  CHECK(search_params(example5(), 2, 3, LocalMode::Ltt, tiny).outcome == ParamSearch::Outcome::Aborted);
}

TEST_CASE("pumping words are equivalent") {
  // (u^k) s (u^k)^r against its reverse, in small contexts.
  const int k = 3, t = 2;
  for (const Word& u : {Word("ab"), Word("a"), Word("aab")}) {
    for (const Word& s : {Word("b"), Word("abb"), Word("")}) {
      const Word w = rep(u, k) + s + reversed(rep(u, k));
      for (const Word& alpha : all_words(ab(), 2)) {
        for (const Word& beta : all_words(ab(), 2)) {
          CHECK(lrtt_equiv(alpha + w + beta, alpha + reversed(w) + beta, k, t));
        }
      }
    }
  }
}
