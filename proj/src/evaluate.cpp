#include "revlang/evaluate.hpp"

#include <algorithm>
#include <unordered_map>

#include "revlang/error.hpp"

namespace revlang {

namespace {

constexpr std::size_t kMaxSetPositions = 62;

using K = Formula::Kind;

struct Op {
  K kind = K::And;
  char letter = 0;
  int a = -1, b = -1, c = -1;  // variable slots of atoms
  std::vector<int> kids;       // And / Or / Not
  // Quantifier block: `vars[i]` is bound at depth i; `checks[i]` are the
  // parts whose variables are all bound once depth i is reached.
  bool universal = false;
  std::vector<int> vars;
  std::vector<char> var_is_set;
  std::vector<std::vector<int>> checks;
};

}  // namespace

struct CompiledFormula::Program {
  std::vector<Op> ops;
  int root = -1;
  std::unordered_map<std::string, int> slots;
  std::vector<std::string> free_positions;
  std::vector<std::string> free_sets;

  int slot(const std::string& name) {
    auto [it, inserted] = slots.emplace(name, static_cast<int>(slots.size()));
    return it->second;
  }

  void flatten(const Formula& f, K connective, std::vector<Formula>& out) {
    if (f.kind() == connective) {
      for (const Formula& k : f.children()) flatten(k, connective, out);
    } else {
      out.push_back(f);
    }
  }

  int compile(const Formula& f) {
    Op op;
    op.kind = f.kind();
    switch (f.kind()) {
      case K::Label:
        op.letter = f.letter();
        op.a = slot(f.vars()[0]);
        break;
      case K::Less:
      case K::Succ:
      case K::Nbr:
      case K::Eq:
      case K::In:
        op.a = slot(f.vars()[0]);
        op.b = slot(f.vars()[1]);
        break;
      case K::Bet:
        op.a = slot(f.vars()[0]);
        op.b = slot(f.vars()[1]);
        op.c = slot(f.vars()[2]);
        break;
      case K::And:
      case K::Or:
      case K::Not:
        for (const Formula& k : f.children()) op.kids.push_back(compile(k));
        break;
      case K::Exists:
      case K::ExistsSet:
      case K::Forall:
      case K::ForallSet: {
        op.universal = f.kind() == K::Forall || f.kind() == K::ForallSet;
        std::vector<std::string> names;
        const Formula* cur = &f;
        auto same_block = [&](K k) {
          return op.universal ? (k == K::Forall || k == K::ForallSet)
                              : (k == K::Exists || k == K::ExistsSet);
        };
        while (same_block(cur->kind())) {
          names.push_back(cur->vars()[0]);
          op.vars.push_back(slot(cur->vars()[0]));
          op.var_is_set.push_back(cur->kind() == K::ExistsSet || cur->kind() == K::ForallSet);
          cur = &cur->body();
        }
        std::vector<Formula> parts;
        flatten(*cur, op.universal ? K::Or : K::And, parts);
        op.checks.assign(names.size() + 1, {});
        for (const Formula& part : parts) {
          std::size_t depth = 0;
          for (const auto& v : part.free_variables()) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it != names.end()) {
              depth = std::max<std::size_t>(depth, static_cast<std::size_t>(it - names.begin()) + 1);
            }
          }
          op.checks[depth].push_back(compile(part));
        }
        // Cheap atoms first within each depth.
        for (auto& level : op.checks) {
          std::stable_sort(level.begin(), level.end(), [&](int x, int y) {
            return ops[x].kind <= K::In && ops[y].kind > K::In;
          });
        }
        break;
      }
    }
    ops.push_back(std::move(op));
    return static_cast<int>(ops.size()) - 1;
  }
};

namespace {

struct Machine {
  const std::vector<Op>& ops;
  std::string_view word;
  std::vector<std::uint64_t>& env;

  bool eval(int idx) const {
    const Op& op = ops[idx];
    switch (op.kind) {
      case K::Label:
        return word[env[op.a] - 1] == op.letter;
      case K::Less:
        return env[op.a] < env[op.b];
      case K::Succ:
        return env[op.a] + 1 == env[op.b];
      case K::Bet: {
        const auto x = env[op.a], y = env[op.b], z = env[op.c];
        return (x < y && y < z) || (z < y && y < x);
      }
      case K::Nbr:
        return env[op.a] + 1 == env[op.b] || env[op.b] + 1 == env[op.a];
      case K::Eq:
        return env[op.a] == env[op.b];
      case K::In:
        return (env[op.b] >> (env[op.a] - 1)) & 1U;
      case K::And:
        for (int k : op.kids) {
          if (!eval(k)) return false;
        }
        return true;
      case K::Or:
        for (int k : op.kids) {
          if (eval(k)) return true;
        }
        return false;
      case K::Not:
        return !eval(op.kids[0]);
      case K::Exists:
      case K::ExistsSet:
        return search(op, 0);
      case K::Forall:
      case K::ForallSet:
        return !search(op, 0);
    }
    return false;
  }

  // Existential block: finds an assignment making every part true.
  // Universal block: finds an assignment making every part false.
  bool search(const Op& op, std::size_t depth) const {
    const bool want = !op.universal;
    for (int k : op.checks[depth]) {
      if (eval(k) != want) return false;
    }
    if (depth == op.vars.size()) return true;
    auto& value = env[op.vars[depth]];
    const std::uint64_t n = word.size();
    if (op.var_is_set[depth]) {
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        value = mask;
        if (search(op, depth + 1)) return true;
      }
    } else {
      for (std::uint64_t p = 1; p <= n; ++p) {
        value = p;
        if (search(op, depth + 1)) return true;
      }
    }
    return false;
  }
};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, EvalLimits limits)
    : formula_(alpha_normalize(f)), limits_(limits), program_(std::make_unique<Program>()) {
  for (const auto& v : formula_.free_variables()) {
    program_->slot(v);
    (is_set_variable(v) ? program_->free_sets : program_->free_positions).push_back(v);
  }
  program_->root = program_->compile(formula_);
}

CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula&&) noexcept = default;
CompiledFormula& CompiledFormula::operator=(CompiledFormula&&) noexcept = default;

bool CompiledFormula::evaluate(std::string_view word, const Valuation& valuation) const {
  const std::size_t cap = limits_.cap_for(formula_);
  if (word.size() > cap) {
    throw CapExceeded("word length " + std::to_string(word.size()) +
                      " exceeds the evaluation cap " + std::to_string(cap));
  }
  if (formula_.signature().second_order && word.size() > kMaxSetPositions) {
    throw CapExceeded("set quantification supports at most " +
                      std::to_string(kMaxSetPositions) + " positions");
  }
  std::vector<std::uint64_t> env(program_->slots.size(), 0);
  const auto n = static_cast<int>(word.size());
  for (const auto& name : program_->free_positions) {
    auto it = valuation.positions.find(name);
    if (it == valuation.positions.end()) {
      throw Error("free variable '" + name + "' is not assigned");
    }
    if (it->second < 1 || it->second > n) {
      throw Error("position " + std::to_string(it->second) + " of '" + name +
                  "' is outside 1.." + std::to_string(n));
    }
    env[program_->slots.at(name)] = static_cast<std::uint64_t>(it->second);
  }
  for (const auto& name : program_->free_sets) {
    auto it = valuation.sets.find(name);
    if (it == valuation.sets.end()) {
      throw Error("free set variable '" + name + "' is not assigned");
    }
    std::uint64_t mask = 0;
    for (int p : it->second) {
      if (p < 1 || p > n) {
        throw Error("position " + std::to_string(p) + " in '" + name +
                    "' is outside 1.." + std::to_string(n));
      }
      mask |= std::uint64_t{1} << (p - 1);
    }
    env[program_->slots.at(name)] = mask;
  }
  Machine m{program_->ops, word, env};
  return m.eval(program_->root);
}

bool evaluate(std::string_view word, const Formula& f, const Valuation& valuation,
              EvalLimits limits) {
  return CompiledFormula(f, limits).evaluate(word, valuation);
}

std::vector<Word> language_of(const Formula& f, const Alphabet& alphabet,
                              std::size_t max_len, EvalLimits limits) {
  if (!f.is_sentence()) {
    throw Error("language_of needs a sentence; free variables remain");
  }
  const std::size_t cap = limits.cap_for(f);
  if (max_len > cap) {
    throw CapExceeded("max length " + std::to_string(max_len) +
                      " exceeds the evaluation cap " + std::to_string(cap));
  }
  const CompiledFormula compiled(f, limits);
  std::vector<Word> out;
  for (Word& w : all_words(alphabet, max_len)) {
    if (compiled.evaluate(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace revlang
