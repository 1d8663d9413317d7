#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "revlang/alphabet.hpp"
#include "revlang/dfa.hpp"
#include "revlang/semigroup.hpp"

namespace revlang {

/// Syntactic monoid of a regular language, realized as the transition monoid
/// of its minimal DFA. Elements are numbered in shortlex order of their least
/// witness words, so element 0 is the identity (witness ε).
struct SyntacticData {
  using Element = FiniteSemigroup::Element;

  Dfa dfa;  ///< minimal
  FiniteSemigroup monoid;
  std::vector<Word> witnesses;
  /// Images of non-empty words.
  std::vector<bool> in_semigroup;
  /// P: elements whose words lie in the language.
  std::vector<bool> accepting;
  /// State transformation of each element: transformations[m][q].
  std::vector<std::vector<Dfa::State>> transformations;
  /// right[m * |A| + letter] = m * letter.
  std::vector<Element> right;

  Element identity() const noexcept { return 0; }
  Element evaluate(std::string_view w) const;
  std::size_t size() const noexcept { return witnesses.size(); }
};

/// Throws CapExceeded past `element_cap` elements.
SyntacticData syntactic_monoid(const Dfa& a, std::size_t element_cap = 100'000);

/// The subsemigroup of images of non-empty words, renumbered in monoid order.
struct SyntacticSemigroup {
  FiniteSemigroup semigroup;
  std::vector<SyntacticData::Element> monoid_element;
  /// Shortlex-least non-empty witness of each element.
  std::vector<Word> witnesses;
};

SyntacticSemigroup syntactic_semigroup(const SyntacticData& s);

/// Words of length <= max_len grouped by their action on the minimal DFA,
/// computed by direct simulation. Classes appear in order of their shortlex
/// least member; members are in shortlex order.
std::vector<std::vector<Word>> brute_force_congruence(const Dfa& a, std::size_t max_len);

/// star(m) = [reverse(witness(m))]. Throws NotReversible when L(a) is not
/// closed under reversal and InvolutionInconsistent if any axiom, or
/// star(P) = P, fails.
Involution involution_from_reverse(const SyntacticData& s, const Dfa& a);

/// Restriction of a monoid involution to the syntactic semigroup.
Involution restrict_involution(const SyntacticSemigroup& sg, const Involution& star);

bool accepting_star_closed(const SyntacticData& s, const Involution& star);

}  // namespace revlang
