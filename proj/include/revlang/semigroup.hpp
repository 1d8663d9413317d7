#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace revlang {

/// Finite semigroup given by its multiplication table. Associativity is
/// verified at construction (Light's test over the generators when they
/// generate everything, the full cubic scan otherwise); a two-sided identity
/// is detected if present.
class FiniteSemigroup {
 public:
  using Element = std::uint32_t;

  /// `table[a * n + b]` is a*b. Throws std::invalid_argument when the table is
  /// malformed or not associative.
  FiniteSemigroup(std::size_t size, std::vector<Element> table,
                  std::map<char, Element> generators = {});

  std::size_t size() const noexcept { return size_; }
  Element mult(Element a, Element b) const { return table_[a * size_ + b]; }
  Element power(Element a, std::size_t n) const;  ///< n >= 1
  const std::optional<Element>& identity() const noexcept { return identity_; }
  const std::map<char, Element>& generators() const noexcept { return generators_; }
  const std::vector<Element>& table() const noexcept { return table_; }

 private:
  std::size_t size_;
  std::vector<Element> table_;
  std::map<char, Element> generators_;
  std::optional<Element> identity_;
};

/// Involutive anti-automorphism of a FiniteSemigroup. The axioms are checked
/// exhaustively; a violation raises InvolutionInconsistent.
class Involution {
 public:
  using Element = FiniteSemigroup::Element;

  Involution(const FiniteSemigroup& s, std::vector<Element> star);

  Element operator()(Element a) const { return star_[a]; }
  const std::vector<Element>& table() const noexcept { return star_; }

 private:
  std::vector<Element> star_;
};

std::vector<FiniteSemigroup::Element> idempotents(const FiniteSemigroup& s);

struct Aperiodicity {
  bool aperiodic = true;
  std::optional<FiniteSemigroup::Element> witness;  ///< least x with x^n != x^(n+1)
};

Aperiodicity is_aperiodic(const FiniteSemigroup& s);

/// e x f y e z f = e z f y e x f for idempotents e, f.
struct LttIdentityCheck {
  bool holds = true;
  /// Lexicographically least failing (e, f, x, y, z).
  std::optional<std::array<FiniteSemigroup::Element, 5>> counterexample;
};

LttIdentityCheck check_ltt_identity(const FiniteSemigroup& s);

/// e x e* = e x* e* for idempotent e.
struct InvolutionIdentityCheck {
  bool holds = true;
  std::optional<std::pair<FiniteSemigroup::Element, FiniteSemigroup::Element>> counterexample;
};

InvolutionIdentityCheck check_involution_identity(const FiniteSemigroup& s, const Involution& star);

}  // namespace revlang
