#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revlang {

/// Words are plain strings of single-character letters.
using Word = std::string;

/// Ordered finite set of single-character letters. The declaration order is
/// the order used for shortlex enumeration.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  std::optional<std::size_t> index_of(char c) const noexcept {
    const auto i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  bool contains(char c) const noexcept { return index_of(c).has_value(); }

  /// Throws AlphabetError naming the first foreign letter.
  void validate(std::string_view word) const;

  /// Shortlex order: shorter first, then lexicographic in declaration order.
  bool shortlex_less(std::string_view u, std::string_view v) const;

  bool operator==(const Alphabet& other) const noexcept {
    return letters_ == other.letters_;
  }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_{};
};

Word reversed(std::string_view w);

inline bool is_palindrome(std::string_view w) { return reversed(w) == w; }

/// All words of length <= max_len in shortlex order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len);

/// All words of exactly `length` letters in lexicographic (declaration) order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length);

}  // namespace revlang
