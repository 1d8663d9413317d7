#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "revlang/alphabet.hpp"

namespace revlang {

/// Immutable regular-expression tree.
///
/// Concrete syntax: single-character letters, `+` union, juxtaposition for
/// concatenation, postfix `*`, parentheses, `_` for the empty word and `#`
/// for the empty language. Precedence is star > concat > union.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star };

  static Regex empty();
  static Regex epsilon();
  static Regex letter(char a);
  static Regex alt(Regex lhs, Regex rhs);
  static Regex concat(Regex lhs, Regex rhs);
  static Regex star(Regex inner);

  Kind kind() const noexcept;
  char symbol() const noexcept;  ///< Letter only.
  const Regex& lhs() const;      ///< Union/Concat, or the Star operand.
  const Regex& rhs() const;      ///< Union/Concat.

  /// Minimal-parenthesis rendering in the concrete syntax.
  std::string to_string() const;

  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws ParseError (with offset) on malformed input and AlphabetError when a
/// letter is not declared.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

}  // namespace revlang
