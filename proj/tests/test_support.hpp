#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revlang/alphabet.hpp"
#include "revlang/dfa.hpp"
#include "revlang/formula.hpp"
#include "revlang/profile_automaton.hpp"

namespace fixtures {

using namespace revlang;

inline std::string data_path(const std::string& name) {
  return std::string(REVLANG_TEST_DATA) + "/" + name;
}

inline Formula load_formula(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_formula(ss.str());
}

inline const Alphabet& ab() {
  static const Alphabet a("ab");
  return a;
}
inline const Alphabet& abc() {
  static const Alphabet a("abc");
  return a;
}

/// (#ab = 2 and #ba = 1) or (#ab = 1 and #ba = 2) over {a,b,c}: locally
/// threshold testable and reversible, but not definable with N alone.
inline Dfa example5() {
  using R = CountClause::Relation;
  const Dfa l1 = factor_count_dfa(abc(), {{"ab", R::Eq, 2}, {"ba", R::Eq, 1}});
  const Dfa l2 = factor_count_dfa(abc(), {{"ab", R::Eq, 1}, {"ba", R::Eq, 2}});
  return boolean_op(l1, l2, BoolOp::Union);
}

inline Dfa abc_or_cba() { return compile("(abc)*+(cba)*", abc()); }
inline Dfa even_length() { return compile("((a+b)(a+b))*", ab()); }
inline Dfa both_letters() { return compile("(a+b)*a(a+b)*b(a+b)*+(a+b)*b(a+b)*a(a+b)*", ab()); }
inline Dfa aba_or_aba() { return compile("aba*+a*ba", ab()); }
inline Dfa ab_star() { return compile("(ab)*", ab()); }
inline Dfa c_a_c_b_c() { return compile("c*ac*bc*", abc()); }

/// Reversible languages used by closure and involution checks.
inline std::vector<Dfa> reversible_fixtures() {
  return {abc_or_cba(),
          even_length(),
          both_letters(),
          example5(),
          aba_or_aba(),
          compile("a*+b*", ab()),
          compile("(ab+ba)*", ab()),
          Dfa::universal(ab()),
          Dfa::empty_language(ab())};
}

/// Random regex over `alphabet` with roughly `size` operators.
inline std::string random_regex(std::mt19937& rng, const Alphabet& alphabet, int size) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  if (size <= 0) return std::string(1, alphabet[letter(rng)]);
  const int r = pick(rng);
  const int left = std::uniform_int_distribution<int>(0, size - 1)(rng);
  if (r < 4) {
    return random_regex(rng, alphabet, left) + random_regex(rng, alphabet, size - 1 - left);
  }
  if (r < 7) {
    return "(" + random_regex(rng, alphabet, left) + "+" +
           random_regex(rng, alphabet, size - 1 - left) + ")";
  }
  if (r < 9) return "(" + random_regex(rng, alphabet, size - 1) + ")*";
  return "_";
}

}  // namespace fixtures
