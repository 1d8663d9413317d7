#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace revlang {

/// Which atomic predicates a formula uses, and whether it quantifies over
/// position sets.
struct Signature {
  bool label = false;
  bool less = false;
  bool succ = false;
  bool bet = false;
  bool nbr = false;
  bool eq = false;
  bool in = false;
  bool second_order = false;

  /// E.g. "mso(bet,N)" or "fo(<)"; equality and labels are implicit.
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Immutable FO/MSO formula over word structures.
///
/// Variables are sorted by the case of their first character: lowercase names
/// denote positions, uppercase names denote sets of positions. Factories
/// reject sort violations with SortError. Free variables and the signature
/// are computed once at construction.
class Formula {
 public:
  enum class Kind {
    Label,  // (lab a x)
    Less,   // (< x y)
    Succ,   // (succ x y)    y = x + 1
    Bet,    // (bet x y z)   x < y < z or z < y < x
    Nbr,    // (N x y)       |x - y| = 1
    Eq,     // (= x y)
    In,     // (in x X)
    And,
    Or,
    Not,
    Exists,     // first-order
    Forall,     // first-order
    ExistsSet,  // second-order
    ForallSet,  // second-order
  };

  static Formula label(char letter, std::string x);
  static Formula less(std::string x, std::string y);
  static Formula succ(std::string x, std::string y);
  static Formula bet(std::string x, std::string y, std::string z);
  static Formula nbr(std::string x, std::string y);
  static Formula eq(std::string x, std::string y);
  static Formula in(std::string x, std::string set);
  /// Empty conjunction is true; empty disjunction is false.
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula negate(Formula f);
  static Formula exists(std::string x, Formula body);
  static Formula forall(std::string x, Formula body);
  static Formula exists_set(std::string set, Formula body);
  static Formula forall_set(std::string set, Formula body);

  Kind kind() const noexcept;
  char letter() const noexcept;  ///< Label only.
  /// Atom arguments, or the single bound variable of a quantifier.
  const std::vector<std::string>& vars() const noexcept;
  const std::vector<Formula>& children() const noexcept;
  const Formula& body() const;  ///< Not / quantifiers.

  /// Sorted, duplicate-free.
  const std::vector<std::string>& free_variables() const noexcept;
  bool is_sentence() const noexcept { return free_variables().empty(); }
  const Signature& signature() const noexcept;

  bool is_atom() const noexcept { return kind() <= Kind::In; }
  bool is_quantifier() const noexcept { return kind() >= Kind::Exists; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);
  std::shared_ptr<const Node> node_;
};

inline bool is_set_variable(std::string_view name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}
inline bool is_position_variable(std::string_view name) {
  return !name.empty() && name[0] >= 'a' && name[0] <= 'z';
}

Formula truth();
Formula falsity();
Formula neq(std::string x, std::string y);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);

/// Renames bound variables so every binder introduces a distinct name that
/// also differs from every free variable. Free variables keep their names.
Formula alpha_normalize(const Formula& f);

/// Every variable name occurring in `f`, bound or free.
std::vector<std::string> all_variables(const Formula& f);

/// Parses the S-expression syntax
///   (lab a x) (< x y) (succ x y) (bet x y z) (N x y) (= x y) (in x X)
///   (and f ...) (or f ...) (not f) (implies f g) (iff f g)
///   (exists x f) (forall x f) (existsS X f) (forallS X f)
/// with `;` line comments. The result is alpha-normalized. Throws ParseError
/// (syntax, arity) or SortError.
Formula parse_formula(std::string_view text);

/// S-expression rendering; `parse_formula(to_string(f))` reproduces `f` up to
/// alpha-renaming.
std::string to_string(const Formula& f);

}  // namespace revlang
