// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "revlang/classify.hpp"
#include "revlang/constructions.hpp"
#include "revlang/error.hpp"
#include "revlang/evaluate.hpp"
#include "revlang/ltt.hpp"
#include "revlang/profile_automaton.hpp"
#include "revlang/semigroup.hpp"
#include "revlang/syntactic.hpp"
#include "test_support.hpp"

using namespace revlang;
using namespace fixtures;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Word rep(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out += w;
  return out;
}

std::string pair_text(const std::pair<Word, Word>& p) {
  return "'" + p.first + "' / '" + p.second + "'";
}

/// A No verdict must come with an equivalent, membership-split pair.
void require_split(const Dfa& d, const UnionVerdict& v, int k, int t, LocalMode mode,
                   const std::string& label) {
  const std::string at = label + " at (" + std::to_string(k) + "," + std::to_string(t) + ")";
  require(v.kind == UnionVerdict::Kind::No, at + ": expected no");
  require(v.witness.has_value(), at + ": no witness");
  require(local_equiv(v.witness->first, v.witness->second, k, t, mode),
          at + ": witness not equivalent " + pair_text(*v.witness));
  require(d.accepts(v.witness->first) != d.accepts(v.witness->second),
          at + ": witness not split " + pair_text(*v.witness));
}

/// Membership constant on every class, among words of length <= n.
bool constant_on_classes(const Dfa& d, int k, int t, LocalMode mode, std::size_t n) {
  std::map<std::string, bool> seen;
  for (const Word& w : all_words(d.alphabet(), n)) {
    const std::string key = mode == LocalMode::Ltt ? to_string(ltt_class(w, k, t))
                                                   : to_string(lrtt_class(w, k, t));
    auto [it, fresh] = seen.try_emplace(key, d.accepts(w));
    if (!fresh && it->second != d.accepts(w)) return false;
  }
  return true;
}

std::vector<Word> symmetric_language(const Formula& f, const Alphabet& a, std::size_t n) {
  const CompiledFormula c(f);
  std::vector<Word> out;
  for (const Word& w : all_words(a, n)) {
    if (c.evaluate(w) || c.evaluate(reversed(w))) out.push_back(w);
  }
  return out;
}

void criterion1() {
  const Dfa l = abc_or_cba();
  require(is_reversible(l), "(abc)*+(cba)* not reversible");
  const Dfa q = quotient(l, "a", Side::Left);
  require(q == compile("bc(abc)*", abc()), "left quotient by a differs from bc(abc)*");
  require(!is_reversible(q), "bc(abc)* reported reversible");
}

void criterion2() {
  require(ltt_equiv("ababab", "abab", 2, 1), "ababab ~2,1 abab");
  require(!ltt_equiv("abab", "abbab", 2, 1), "abab !~2,1 abbab");
  require(!ltt_equiv("ababab", "abab", 2, 2), "ababab !~2,2 abab");
  require(lrtt_equiv("ab", "ba", 2, 1), "ab ~r ba");
  require(!lrtt_equiv("aba", "baa", 2, 1), "aba !~r baa");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> len(0, 16), letter(0, 2);
  for (int i = 0; i < 1000; ++i) {
    Word w;
    for (int j = len(rng); j > 0; --j) w.push_back(abc()[static_cast<std::size_t>(letter(rng))]);
    for (int k = 1; k <= 3; ++k) {
      for (int t = 1; t <= 3; ++t) {
        require(lrtt_equiv(w, reversed(w), k, t), "w !~r w^r for w=" + w);
      }
    }
  }
}

void criterion3() {
  const Dfa d = ab_star();
  require(is_union_of_classes(d, 2, 1, LocalMode::Ltt).kind == UnionVerdict::Kind::Yes,
          "(ab)* not a union of classes at (2,1)");
  std::map<std::string, std::set<Word>> classes;
  for (const Word& w : all_words(ab(), 8)) classes[to_string(ltt_class(w, 2, 1))].insert(w);
  std::set<std::set<Word>> inside;
  for (const auto& [key, members] : classes) {
    std::size_t accepted = 0;
    for (const Word& w : members) accepted += d.accepts(w);
    require(accepted == 0 || accepted == members.size(), "class split by (ab)*: " + key);
    if (accepted) inside.insert(members);
  }
  const std::set<std::set<Word>> expected{{""}, {"ab"}, {"abab", "ababab", "abababab"}};
  require(inside == expected, "classes of (ab)* up to length 8 are not {e}, {ab}, abab(ab)*");
}

void criterion4() {
  const Dfa d = c_a_c_b_c();
  const SyntacticData s = syntactic_monoid(d);
  require(is_aperiodic(s.monoid).aperiodic, "c*ac*bc* not aperiodic");
  require(!check_ltt_identity(syntactic_semigroup(s).semigroup).holds, "ltt identity holds");
  for (int k = 1; k <= 3; ++k) {
    for (int t = 1; t <= 3; ++t) {
      require_split(d, is_union_of_classes(d, k, t, LocalMode::Ltt), k, t, LocalMode::Ltt, "ltt");
    }
  }
}

void criterion5() {
  const Dfa d = example5();
  require(is_reversible(d), "fixture not reversible");
  const UnionVerdict ltt = is_union_of_classes(d, 2, 3, LocalMode::Ltt);
  require(ltt.kind == UnionVerdict::Kind::Yes, "ltt union check at (2,3) is not yes");
  const SyntacticData s = syntactic_monoid(d);
  const SyntacticSemigroup sg = syntactic_semigroup(s);
  const Involution star = restrict_involution(sg, involution_from_reverse(s, d));
  require(!check_involution_identity(sg.semigroup, star).holds, "involution identity holds");
  for (int k = 1; k <= 3; ++k) {
    for (int t = 1; t <= 3; ++t) {
      require_split(d, is_union_of_classes(d, k, t, LocalMode::Lrtt), k, t, LocalMode::Lrtt, "lrtt");
    }
  }
  const ClassificationReport r = classify(d);
  require(r.fo_n.kind == FoNVerdict::Kind::No, "classify does not report fo(N) = no");
}

std::pair<int, int> fo_n_params() {
  const ParamSearch s = search_params(aba_or_aba(), 4, 3, LocalMode::Lrtt);
  require(s.outcome == ParamSearch::Outcome::Found, "lrtt search found no parameters");
  return {s.k, s.t};
}

void criterion6() {
  const Dfa d = aba_or_aba();
  const ParamSearch s = search_params(d, 4, 3, LocalMode::Lrtt);
  require(s.outcome == ParamSearch::Outcome::Found, "lrtt search found no parameters");
  // Every rejected (k,t) before the answer carries a checked split pair.
  for (const auto& step : s.trace) {
    if (step.verdict.kind == UnionVerdict::Kind::No) {
      require_split(d, step.verdict, step.k, step.t, LocalMode::Lrtt, "lrtt");
    }
  }
  require(constant_on_classes(d, s.k, s.t, LocalMode::Lrtt, 9),
          "brute force finds a split class among words <= 9");
  ClassifyOptions opts;
  opts.k_max = 4;
  opts.t_max = 3;
  const ClassificationReport r = classify(d, opts);
  require(r.fo_n.kind == FoNVerdict::Kind::Yes, "classify does not report fo(N) = yes");
  const SyntacticData sd = syntactic_monoid(d);
  const SyntacticSemigroup sg = syntactic_semigroup(sd);
  require(check_involution_identity(sg.semigroup, restrict_involution(sg, involution_from_reverse(sd, d))).holds,
          "involution identity fails");
}

void criterion7() {
  struct Case {
    const char* file;
    Dfa dfa;
    bool prenex;
  };
  const std::vector<Case> cases{
      {"even_length_lt.sexp", even_length(), false},
      {"both_letters_lt.sexp", both_letters(), false},
      {"a_before_b_lt.sexp", compile("(a+b)*a(a+b)*b(a+b)*", ab()), false},
      {"bc_abc_lt.sexp", compile("bc(abc)*", abc()), false},
      {"a_then_b_prenex.sexp", compile("_+(a+b)*b", ab()), true},
      {"same_ends_prenex.sexp", compile("a+b+a(a+b)*a+b(a+b)*b", ab()), true},
  };
  for (const Case& c : cases) {
    const Formula f = load_formula(c.file);
    const Alphabet& a = c.dfa.alphabet();
    const auto own = language_of(f, a, 7);
    require(own == enumerate(c.dfa, 7), std::string(c.file) + ": fixture automaton disagrees");
    const auto expected = symmetric_language(f, a, 7);
    std::vector<RelativizeMode> modes{RelativizeMode::Mso};
    if (c.prenex) modes.push_back(RelativizeMode::Prenex);
    for (RelativizeMode m : modes) {
      const auto got = language_of(relativize(f, m), a, 7);
      const std::string label = std::string(c.file) + (m == RelativizeMode::Mso ? " (mso)" : " (prenex)");
      require(got == expected, label + ": relativized language differs from w|=f or w^r|=f");
      require((got == own) == is_reversible(c.dfa), label + ": equality with L(f) does not match reversibility");
    }
  }
}

void criterion8() {
  const auto words = all_words(ab(), 7);
  for (const Word& v : all_words(ab(), 3)) {
    if (v.empty()) continue;
    for (int m = 1; m <= 3; ++m) {
      const CompiledFormula f(build_count_formula(v, m));
      for (const Word& w : words) {
        require(f.evaluate(w) == (count_factor_rev(w, v) >= static_cast<std::size_t>(m)),
                "count formula v=" + v + " m=" + std::to_string(m) + " wrong on '" + w + "'");
      }
    }
  }
  for (auto [k, t] : {std::pair{2, 1}, std::pair{3, 1}}) {
    std::set<std::string> done;
    for (const Word& rep_word : words) {
      if (!done.insert(to_string(lrtt_class(rep_word, k, t))).second) continue;
      const CompiledFormula f(build_lrtt_class_formula(rep_word, k, t, ab()));
      for (const Word& w : words) {
        require(f.evaluate(w) == lrtt_equiv(w, rep_word, k, t),
                "class formula of '" + rep_word + "' at (" + std::to_string(k) + "," + std::to_string(t) +
                    ") wrong on '" + w + "'");
      }
    }
  }
}

void criterion9() {
  std::mt19937 rng(9);
  int checked = 0;
  while (checked < 10) {
    const std::string re = random_regex(rng, ab(), 7);
    const Dfa d = compile(re, ab());
    if (d.num_states() > 6 || d.num_states() < 2) continue;
    const SyntacticData s = syntactic_monoid(d);
    std::size_t longest = 0;
    for (const Word& w : s.witnesses) longest = std::max(longest, w.size());
    if (longest + 1 > 12) continue;
    ++checked;
    const auto classes = brute_force_congruence(d, longest + 1);
    require(classes.size() == s.size(), re + ": element count differs from brute force");
    std::set<SyntacticData::Element> seen;
    for (const auto& cls : classes) {
      const auto m = s.evaluate(cls.front());
      require(seen.insert(m).second, re + ": two classes map to one element");
      for (const Word& w : cls) require(s.evaluate(w) == m, re + ": class membership differs at '" + w + "'");
    }
  }
  require(syntactic_monoid(ab_star()).size() == 6, "M((ab)*) does not have 6 elements");
  const SyntacticData even = syntactic_monoid(even_length());
  require(even.size() == 2, "M(even length) does not have 2 elements");
  require(!is_aperiodic(even.monoid).aperiodic, "M(even length) aperiodic");
}

void criterion10() {
  for (const Dfa& d : reversible_fixtures()) {
    const SyntacticData s = syntactic_monoid(d);
    const Involution star = involution_from_reverse(s, d);
    for (SyntacticData::Element m = 0; m < s.size(); ++m) {
      require(star(star(m)) == m, "star is not an involution");
      for (SyntacticData::Element n = 0; n < s.size(); ++n) {
        require(star(s.monoid.mult(m, n)) == s.monoid.mult(star(n), star(m)), "anti-automorphism law fails");
      }
    }
    require(accepting_star_closed(s, star), "star(P) != P");
  }
  const Dfa bad = compile("bc(abc)*", abc());
  bool raised = false;
  try {
    involution_from_reverse(syntactic_monoid(bad), bad);
  } catch (const NotReversible&) {
    raised = true;
  }
  require(raised, "bc(abc)* did not raise NotReversible");
}

void criterion11() {
  const CompiledFormula n(expand_macro(Macro::NFromBet));
  const CompiledFormula b(expand_macro(Macro::BetFromN));
  Valuation v;
  for (const Word& w : all_words(ab(), 6)) {
    const int len = static_cast<int>(w.size());
    for (int x = 1; x <= len; ++x) {
      for (int y = 1; y <= len; ++y) {
        v.positions = {{"x", x}, {"y", y}};
        require(n.evaluate(w, v) == (x + 1 == y || y + 1 == x), "N macro wrong on '" + w + "'");
        for (int z = 1; z <= len; ++z) {
          v.positions["z"] = z;
          require(b.evaluate(w, v) == ((x < y && y < z) || (z < y && y < x)), "bet macro wrong on '" + w + "'");
        }
      }
    }
  }
}

void criterion12() {
  const auto [k, t] = fo_n_params();
  const SyntacticData s = syntactic_monoid(aba_or_aba());
  const SyntacticSemigroup sg = syntactic_semigroup(s);
  const auto contexts = all_words(ab(), 3);
  for (auto e : idempotents(sg.semigroup)) {
    const Word u = rep(sg.witnesses[e], k);
    for (const Word& x : s.witnesses) {
      const Word w = u + x + reversed(u);
      const Word wr = u + reversed(x) + reversed(u);
      require(wr == reversed(w), "pumped word is not the reverse");
      for (const Word& alpha : contexts) {
        for (const Word& beta : contexts) {
          require(lrtt_equiv(alpha + w + beta, alpha + wr + beta, k, t),
                  "'" + alpha + w + beta + "' !~r '" + alpha + wr + beta + "'");
        }
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "reversibility and quotient of (abc)*+(cba)*", 1, criterion1},
      {2, "threshold equivalence facts", 5, criterion2},
      {3, "(ab)* is a union of three (2,1)-classes", 10, criterion3},
      {4, "c*ac*bc* is aperiodic but not ltt", 30, criterion4},
      {5, "ab/ba counting language is ltt and reversible but not fo(N)", 60, criterion5},
      {6, "aba*+a*ba is fo(N) with certified parameters", 60, criterion6},
      {7, "relativization over < yields w|=f or w^r|=f", 60, criterion7},
      {8, "count and class formula builders", 90, criterion8},
      {9, "transition monoid agrees with brute-force congruence", 10, criterion9},
      {10, "involution axioms on reversible fixtures", 10, criterion10},
      {11, "bet and N macros agree with the primitives", 30, criterion11},
      {12, "pumped words are equivalent to their reverses in context", 10, criterion12},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.budget) {
      std::ostringstream msg;
      msg << "over time budget of " << c.budget << " s";
      error = msg.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    if (error.empty()) {
      std::cout << "PASS  criterion " << c.id << ": " << c.name << " (" << timing << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL  criterion " << c.id << ": " << c.name << " (" << timing << ") -- " << error << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
