#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "revlang/alphabet.hpp"
#include "revlang/regex.hpp"

namespace revlang {

/// Complete deterministic automaton. States are 0..n-1 and the transition
/// function is total. DFAs returned by `minimize` (and by every operation
/// below that documents a minimal result) are Myhill-Nerode minimal and
/// numbered in shortlex BFS order from the initial state, so two such DFAs
/// compare equal exactly when their languages are equal.
class Dfa {
 public:
  using State = std::uint32_t;

  /// `delta[q * |A| + i]` is the successor of `q` on the i-th letter.
  Dfa(Alphabet alphabet, std::size_t num_states, State initial,
      std::vector<bool> accepting, std::vector<State> delta);

  /// Builds a DFA from a possibly partial transition list; missing
  /// transitions go to a fresh non-accepting sink.
  static Dfa from_transitions(
      Alphabet alphabet, std::size_t num_states, State initial,
      const std::vector<State>& accepting,
      const std::vector<std::tuple<State, char, State>>& transitions);

  static Dfa universal(Alphabet alphabet);       ///< A*
  static Dfa empty_language(Alphabet alphabet);  ///< the empty set

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  State next(State q, std::size_t letter_index) const {
    return delta_[q * alphabet_.size() + letter_index];
  }
  /// Throws AlphabetError on a foreign letter.
  State run(State from, std::string_view word) const;
  bool accepts(std::string_view word) const { return is_accepting(run(initial_, word)); }

  bool is_minimal() const noexcept { return minimal_; }

  friend bool operator==(const Dfa& a, const Dfa& b);

 private:
  friend Dfa minimize(const Dfa& dfa);

  Alphabet alphabet_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
  bool minimal_ = false;
};

/// Nondeterministic automaton without epsilon moves; an intermediate for
/// reversal and regex compilation.
struct Nfa {
  explicit Nfa(Alphabet a, std::size_t n = 0)
      : alphabet(std::move(a)), accepting(n, false), delta(n * alphabet.size()) {}

  Alphabet alphabet;
  std::vector<Dfa::State> initials;
  std::vector<bool> accepting;
  std::vector<std::vector<Dfa::State>> delta;  ///< indexed q * |A| + letter

  std::size_t num_states() const noexcept { return accepting.size(); }
  std::vector<Dfa::State>& targets(Dfa::State q, std::size_t letter) {
    return delta[q * alphabet.size() + letter];
  }
  const std::vector<Dfa::State>& targets(Dfa::State q, std::size_t letter) const {
    return delta[q * alphabet.size() + letter];
  }
};

/// Glushkov position automaton of `r`.
Nfa glushkov(const Regex& r, const Alphabet& alphabet);

/// Subset construction; the result is complete but not minimized.
Dfa determinize(const Nfa& nfa);

/// Minimal canonical DFA for L(r).
Dfa compile(const Regex& r, const Alphabet& alphabet);
Dfa compile(std::string_view regex, const Alphabet& alphabet);

Dfa minimize(const Dfa& dfa);

/// Minimal DFA for the reversed language.
Dfa reverse(const Dfa& dfa);

/// Shortlex-least word in the symmetric difference, or nullopt when the
/// languages coincide. Throws AlphabetError on alphabet mismatch.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);

bool is_reversible(const Dfa& dfa);

enum class BoolOp { Union, Intersect, Difference };

/// Minimal DFA of the Boolean combination. Throws AlphabetError on mismatch.
Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);

enum class Side { Left, Right };

/// Left: w^-1 L = {x : wx in L}. Right: L w^-1 = {x : xw in L}.
Dfa quotient(const Dfa& a, std::string_view w, Side side);

/// u^-1 L v^-1  union  (v^r)^-1 L (u^r)^-1.
Dfa bidirectional_quotient(const Dfa& a, std::string_view u, std::string_view v);

/// Accepted words of length <= max_len, shortlex order.
std::vector<Word> enumerate(const Dfa& a, std::size_t max_len);

}  // namespace revlang
