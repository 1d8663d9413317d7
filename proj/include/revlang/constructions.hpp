#pragma once

#include <string_view>

#include "revlang/alphabet.hpp"
#include "revlang/formula.hpp"

namespace revlang {

enum class RelativizeMode {
  Mso,     ///< any MSO(<) sentence; endpoint stated with the neighbour predicate
  Prenex,  ///< prenex FO(<) sentence with >= 2 blocks; output stays prenex
};

/// Rewrites a sentence over {<} (plus labels, equality and set membership)
/// relative to an endpoint e: every x < y becomes (e = x and x != y) or
/// bet(e, x, y), and the result is  exists e (endpoint(e) and body),
/// behind a vacuous universal quantifier when `f` holds on the empty word.
/// For every word w, the result holds iff w or w^r satisfies `f`.
/// Throws Error for non-sentences, other predicates, or (prenex mode)
/// non-prenex, second-order or single-block input.
Formula relativize(const Formula& f, RelativizeMode mode);

/// Existential bet-sentence for "u or u^r is a scattered subword".
/// Throws std::invalid_argument on empty `u`.
Formula build_subword_formula(std::string_view u);

enum class Macro {
  NFromBet,  ///< free (x, y): x != y and no z strictly between
  BetFromN,  ///< free (x, y, z): second-order path characterisation
};

Formula expand_macro(Macro kind);

/// Neighbour-sentence for count_factor_rev(w, v) >= m: m chains reading v
/// along N-steps without backtracking, with pairwise distinct unordered
/// endpoint pairs. Requires |v| >= 1 and m >= 1.
Formula build_count_formula(std::string_view v, int m);

/// Neighbour-sentence defining exactly {v, v^r}. Requires |v| >= 1.
Formula build_word_formula(std::string_view v);

/// Neighbour-sentence for {prefix_n(w), reverse(suffix_n(w))} = {x, y} with
/// n = |x| = |y| >= 1; false on words shorter than n.
Formula build_endpoints_formula(std::string_view x, std::string_view y);

/// Neighbour-sentence defining the (k,t) locally-reversible class of `w`
/// over `alphabet`.
Formula build_lrtt_class_formula(std::string_view w, int k, int t, const Alphabet& alphabet);

}  // namespace revlang
