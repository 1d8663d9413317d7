#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revlang/alphabet.hpp"
#include "revlang/formula.hpp"

namespace revlang {

/// Assignment of free variables: positions are 1-based.
struct Valuation {
  std::map<std::string, int> positions;
  std::map<std::string, std::set<int>> sets;
};

/// Word-length caps for brute-force evaluation. Evaluating beyond the cap is
/// an error (CapExceeded), never a silent truncation.
struct EvalLimits {
  std::size_t fo_max_len = 12;
  std::size_t mso_max_len = 8;

  std::size_t cap_for(const Formula& f) const {
    return f.signature().second_order ? mso_max_len : fo_max_len;
  }
};

/// A formula prepared for repeated evaluation. Quantifier blocks are
/// flattened and each conjunct (disjunct under a universal block) is checked
/// as soon as all of its variables are bound.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f, EvalLimits limits = {});
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  /// Throws Error on an unassigned free variable or out-of-range position and
  /// CapExceeded when |word| exceeds the cap.
  bool evaluate(std::string_view word, const Valuation& valuation = {}) const;

  const Formula& formula() const noexcept { return formula_; }

 private:
  struct Program;
  Formula formula_;
  EvalLimits limits_;
  std::unique_ptr<Program> program_;
};

bool evaluate(std::string_view word, const Formula& f, const Valuation& valuation = {},
              EvalLimits limits = {});

/// All words of length <= max_len satisfying the sentence `f`, shortlex.
/// Throws Error when `f` has free variables and CapExceeded when max_len is
/// above the cap.
std::vector<Word> language_of(const Formula& f, const Alphabet& alphabet,
                              std::size_t max_len, EvalLimits limits = {});

}  // namespace revlang
