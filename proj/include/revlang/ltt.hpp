#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "revlang/alphabet.hpp"

namespace revlang {

enum class LocalMode { Ltt, Lrtt };

/// Occurrences of `v` in `w`, overlaps included. Throws std::invalid_argument
/// on empty `v`.
std::size_t count_factor(std::string_view w, std::string_view v);

/// Positions where `v` or its reverse occurs; a palindromic occurrence counts
/// once.
std::size_t count_factor_rev(std::string_view w, std::string_view v);

/// Canonical representative of the factor class {v, v^r}.
inline Word canonical_factor(std::string_view v) {
  Word r = reversed(v);
  return std::min(Word(v), r);
}

/// Data deciding the threshold-k,t class of a word of length >= k.
struct LttProfile {
  int k = 1;
  int t = 1;
  Word prefix;  ///< length k-1
  Word suffix;  ///< length k-1
  /// Factors of length <= k that occur, mapped to min(count, t).
  std::map<Word, int> counts;

  friend auto operator<=>(const LttProfile&, const LttProfile&) = default;
};

/// Reversal-invariant counterpart of LttProfile.
struct LrttProfile {
  int k = 1;
  int t = 1;
  /// {prefix_{k-1}(w), reverse(suffix_{k-1}(w))}, stored sorted.
  std::pair<Word, Word> boundary;
  /// Canonical factor classes {v, v^r} with |v| <= k that occur, mapped to
  /// min(count_factor_rev, t).
  std::map<Word, int> counts;

  friend auto operator<=>(const LrttProfile&, const LrttProfile&) = default;
};

/// The class {w, w^r} of a word shorter than k, stored sorted.
struct ShortWordClass {
  Word first;
  Word second;

  friend auto operator<=>(const ShortWordClass&, const ShortWordClass&) = default;
};

/// Short words (|w| < k) form singleton classes.
using LttClass = std::variant<Word, LttProfile>;
using LrttClass = std::variant<ShortWordClass, LrttProfile>;

/// nullopt when |w| < k.
std::optional<LttProfile> ltt_profile(std::string_view w, int k, int t);
std::optional<LrttProfile> lrtt_profile(std::string_view w, int k, int t);

LttClass ltt_class(std::string_view w, int k, int t);
LrttClass lrtt_class(std::string_view w, int k, int t);

bool ltt_equiv(std::string_view u, std::string_view w, int k, int t);
bool lrtt_equiv(std::string_view u, std::string_view w, int k, int t);

bool local_equiv(std::string_view u, std::string_view w, int k, int t, LocalMode mode);

/// Profiles print as the boundary pair followed by `factor:count` lines
/// sorted by key.
std::string to_string(const LttClass& c);
std::string to_string(const LrttClass& c);

}  // namespace revlang
