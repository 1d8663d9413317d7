#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "revlang/alphabet.hpp"
#include "revlang/dfa.hpp"
#include "revlang/ltt.hpp"

namespace revlang {

/// Deterministic machine whose state after reading w determines the (L)TT
/// class of w: length up to k, the prefix of length k-1, a sliding window of
/// the last k-1 letters and the factor counts saturated at t. States are
/// bit-packed into a fixed number of 64-bit words.
class ProfileAutomaton {
 public:
  using State = std::vector<std::uint64_t>;

  ProfileAutomaton(Alphabet alphabet, int k, int t, LocalMode mode);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int k() const noexcept { return k_; }
  int t() const noexcept { return t_; }
  LocalMode mode() const noexcept { return mode_; }
  std::size_t words_per_state() const noexcept { return width_; }
  std::size_t num_slots() const noexcept { return slot_names_.size(); }

  State initial() const;
  State step(const State& s, std::size_t letter) const;
  State run(std::string_view w) const;

  /// Raw forms used by the exploration: `out` and `in` hold
  /// words_per_state() words each and must not alias.
  void step(const std::uint64_t* in, std::size_t letter, std::uint64_t* out) const;
  /// Two states have equal keys iff their words are in the same class.
  void class_key(const std::uint64_t* in, std::uint64_t* out) const;

  /// Decodes the class of the word that led to `s`.
  LttClass ltt_class_of(const State& s) const;
  LrttClass lrtt_class_of(const State& s) const;

 private:
  std::uint64_t field(const std::uint64_t* s, std::size_t offset, unsigned bits) const;
  void set_field(std::uint64_t* s, std::size_t offset, unsigned bits, std::uint64_t v) const;
  Word letters_at(const std::uint64_t* s, std::size_t offset, std::size_t n) const;
  std::size_t length_of(const std::uint64_t* s) const;

  Alphabet alphabet_;
  int k_;
  int t_;
  LocalMode mode_;
  unsigned len_bits_ = 0;
  unsigned letter_bits_ = 0;
  unsigned count_bits_ = 0;
  std::size_t prefix_off_ = 0;
  std::size_t window_off_ = 0;
  std::size_t counts_off_ = 0;
  std::size_t width_ = 0;
  /// code_base_[n] + base-|A| value of a factor of length n -> slot.
  std::vector<std::size_t> code_base_;
  std::vector<std::uint32_t> slot_of_code_;
  std::vector<Word> slot_names_;
};

struct UnionVerdict {
  enum class Kind { Yes, No, Aborted };
  Kind kind = Kind::Yes;
  /// On No: two equivalent words that L separates, the first shortlex-smaller.
  std::optional<std::pair<Word, Word>> witness;
  std::size_t states_explored = 0;
};

struct UnionOptions {
  std::size_t state_cap = 2'000'000;
};

/// Is membership in L(a) constant on every class of the (k,t) relation?
UnionVerdict is_union_of_classes(const Dfa& a, int k, int t, LocalMode mode,
                                 const UnionOptions& options = {});

struct ParamSearch {
  enum class Outcome { Found, None, Aborted };
  struct Step {
    int k;
    int t;
    UnionVerdict verdict;
  };
  Outcome outcome = Outcome::None;
  int k = 0;
  int t = 0;
  std::vector<Step> trace;
};

/// Least (k,t) <= (k_max,t_max), k outer and t inner, for which the union
/// check says yes.
ParamSearch search_params(const Dfa& a, int k_max, int t_max, LocalMode mode,
                          const UnionOptions& options = {});

struct CountClause {
  enum class Relation { Eq, Ge };
  Word factor;
  Relation relation = Relation::Eq;
  int value = 0;
};

/// Minimal DFA of the words satisfying every clause. Values above 8 raise
/// CapExceeded.
Dfa factor_count_dfa(const Alphabet& alphabet, const std::vector<CountClause>& clauses);

}  // namespace revlang
