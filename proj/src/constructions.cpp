#include "revlang/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlang/error.hpp"
#include "revlang/evaluate.hpp"
#include "revlang/ltt.hpp"

namespace revlang {

namespace {

using K = Formula::Kind;

class FreshNames {
 public:
  explicit FreshNames(const Formula& f) {
    for (auto& v : all_variables(f)) used_.insert(std::move(v));
  }
  std::string operator()(const std::string& base) {
    std::string name = base;
    for (int i = 1; used_.count(name); ++i) name = base + "_" + std::to_string(i);
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

/// x < y  ~>  (e = x and x != y) or bet(e, x, y)
Formula relative_less(const std::string& e, const std::string& x, const std::string& y) {
  return disj(conj(Formula::eq(e, x), neq(x, y)), Formula::bet(e, x, y));
}

Formula substitute_less(const Formula& f, const std::string& e) {
  switch (f.kind()) {
    case K::Less:
      return relative_less(e, f.vars()[0], f.vars()[1]);
    case K::Label:
    case K::Succ:
    case K::Bet:
    case K::Nbr:
    case K::Eq:
    case K::In:
      return f;
    case K::And:
    case K::Or: {
      std::vector<Formula> kids;
      for (const Formula& k : f.children()) kids.push_back(substitute_less(k, e));
      return f.kind() == K::And ? Formula::conj(std::move(kids))
                                : Formula::disj(std::move(kids));
    }
    case K::Not:
      return Formula::negate(substitute_less(f.body(), e));
    case K::Exists:
      return Formula::exists(f.vars()[0], substitute_less(f.body(), e));
    case K::Forall:
      return Formula::forall(f.vars()[0], substitute_less(f.body(), e));
    case K::ExistsSet:
      return Formula::exists_set(f.vars()[0], substitute_less(f.body(), e));
    case K::ForallSet:
      return Formula::forall_set(f.vars()[0], substitute_less(f.body(), e));
  }
  return f;
}

bool quantifier_free(const Formula& f) {
  if (f.is_quantifier()) return false;
  for (const Formula& k : f.children()) {
    if (!quantifier_free(k)) return false;
  }
  return true;
}

/// e has at most one neighbour.
Formula endpoint_by_neighbour(const std::string& e, const std::string& p, const std::string& q) {
  return Formula::negate(Formula::exists(
      p, Formula::exists(q, Formula::conj({neq(p, q), Formula::nbr(e, p), Formula::nbr(e, q)}))));
}

std::string chain_var(const std::string& base, int i, int j) {
  return base + std::to_string(i) + "_" + std::to_string(j);
}

/// N-chain over `vars` reading `letters` with no immediate backtracking.
void append_chain(const std::vector<std::string>& vars, std::string_view letters,
                  std::vector<Formula>& parts) {
  const std::size_t n = vars.size();
  for (std::size_t j = 0; j + 1 < n; ++j) parts.push_back(Formula::nbr(vars[j], vars[j + 1]));
  for (std::size_t j = 1; j + 1 < n; ++j) parts.push_back(neq(vars[j - 1], vars[j + 1]));
  for (std::size_t j = 0; j < n; ++j) parts.push_back(Formula::label(letters[j], vars[j]));
}

Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::exists(*it, std::move(body));
  return body;
}

/// Some chain starting at `start` reads `s`.
Formula reads_from(const std::string& start, std::string_view s) {
  std::vector<std::string> vars{start};
  std::vector<std::string> bound;
  for (std::size_t j = 1; j < s.size(); ++j) {
    vars.push_back("p" + std::to_string(j + 1));
    bound.push_back(vars.back());
  }
  std::vector<Formula> parts;
  append_chain(vars, s, parts);
  return exists_all(bound, Formula::conj(std::move(parts)));
}

}  // namespace

Formula relativize(const Formula& f, RelativizeMode mode) {
  if (!f.is_sentence()) throw Error("relativize needs a sentence (no free variables)");
  const Signature& sig = f.signature();
  if (sig.succ || sig.bet || sig.nbr) {
    throw Error("relativize expects a formula over {<}; found " + sig.to_string());
  }
  FreshNames fresh(f);
  const std::string e = fresh("e");
  // The empty word has no endpoint, so "exists e" alone is false there. When
  // f holds on the empty word, a vacuous leading "forall d" restores that
  // (it is equivalent to its body on every non-empty word).
  const bool holds_on_empty = evaluate("", f);
  const std::string d = holds_on_empty ? fresh("d") : "";

  if (mode == RelativizeMode::Mso) {
    const std::string p = fresh("p");
    const std::string q = fresh("q");
    Formula chi = Formula::exists(e, conj(endpoint_by_neighbour(e, p, q), substitute_less(f, e)));
    if (holds_on_empty) chi = Formula::forall(d, std::move(chi));
    return alpha_normalize(chi);
  }

  if (sig.second_order) throw Error("prenex relativization needs a first-order sentence");
  struct Block {
    bool universal;
    std::vector<std::string> vars;
  };
  std::vector<Block> blocks;
  const Formula* cur = &f;
  while (cur->kind() == K::Exists || cur->kind() == K::Forall) {
    const bool universal = cur->kind() == K::Forall;
    if (blocks.empty() || blocks.back().universal != universal) blocks.push_back({universal, {}});
    blocks.back().vars.push_back(cur->vars()[0]);
    cur = &cur->body();
  }
  if (!quantifier_free(*cur)) throw Error("prenex relativization needs a prenex sentence");
  if (blocks.size() < 2) {
    throw Error(
        "prenex relativization needs at least two quantifier blocks; use the subword "
        "formula builder for existential sentences");
  }

  if (blocks.front().universal) {
    blocks.insert(blocks.begin(), Block{false, {e}});
  } else {
    blocks.front().vars.insert(blocks.front().vars.begin(), e);
  }
  const std::string x = fresh("x");
  const std::string y = fresh("y");
  for (Block& b : blocks) {
    if (b.universal) {
      b.vars.push_back(x);
      b.vars.push_back(y);
      break;
    }
  }
  if (holds_on_empty) blocks.insert(blocks.begin(), Block{true, {d}});
  Formula body = conj(Formula::negate(Formula::bet(x, e, y)), substitute_less(*cur, e));
  for (auto b = blocks.rbegin(); b != blocks.rend(); ++b) {
    for (auto v = b->vars.rbegin(); v != b->vars.rend(); ++v) {
      body = b->universal ? Formula::forall(*v, std::move(body))
                          : Formula::exists(*v, std::move(body));
    }
  }
  return alpha_normalize(body);
}

Formula build_subword_formula(std::string_view u) {
  if (u.empty()) throw std::invalid_argument("subword formula needs a non-empty word");
  std::vector<std::string> vars;
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    vars.push_back("x" + std::to_string(i + 1));
    parts.push_back(Formula::label(u[i], vars.back()));
  }
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    parts.push_back(Formula::bet(vars[i - 1], vars[i], vars[i + 1]));
  }
  // Two positions are not forced apart by an empty bet-chain.
  if (u.size() == 2) parts.push_back(neq(vars[0], vars[1]));
  return exists_all(vars, parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts)));
}

Formula expand_macro(Macro kind) {
  if (kind == Macro::NFromBet) {
    return conj(neq("x", "y"), Formula::forall("z", Formula::negate(Formula::bet("x", "z", "y"))));
  }
  // Every X containing x, z and some other position, in which every other
  // member has two neighbours in X, contains y. Such an X is exactly the
  // interval [x, z], which exists only when x and z are distinct and not
  // adjacent; those guards and y != x, z make the degenerate cases false.
  const Formula two_neighbours = Formula::exists(
      "q", Formula::exists("r", Formula::conj({neq("q", "r"), Formula::nbr("p", "q"),
                                                Formula::nbr("p", "r"), Formula::in("q", "X"),
                                                Formula::in("r", "X")})));
  const Formula closed = Formula::forall(
      "p", implies(Formula::conj({Formula::in("p", "X"), neq("p", "x"), neq("p", "z")}),
                   two_neighbours));
  const Formula antecedent = Formula::conj(
      {Formula::in("x", "X"), Formula::in("z", "X"),
       Formula::exists("p", Formula::conj({Formula::in("p", "X"), neq("p", "x"), neq("p", "z")})),
       closed});
  return alpha_normalize(Formula::conj(
      {neq("x", "y"), neq("y", "z"), neq("x", "z"), Formula::negate(Formula::nbr("x", "z")),
       Formula::forall_set("X", implies(antecedent, Formula::in("y", "X")))}));
}

Formula build_count_formula(std::string_view v, int m) {
  if (v.empty()) throw std::invalid_argument("count formula needs a non-empty factor");
  if (m < 1) throw std::invalid_argument("count formula needs m >= 1");
  const int n = static_cast<int>(v.size());
  std::vector<std::string> all;
  std::vector<Formula> parts;
  for (int i = 1; i <= m; ++i) {
    std::vector<std::string> chain;
    for (int j = 1; j <= n; ++j) chain.push_back(chain_var("x", i, j));
    append_chain(chain, v, parts);
    all.insert(all.end(), chain.begin(), chain.end());
    for (int h = 1; h < i; ++h) {
      const auto hs = chain_var("x", h, 1), he = chain_var("x", h, n);
      const auto is = chain_var("x", i, 1), ie = chain_var("x", i, n);
      parts.push_back(Formula::negate(
          disj(conj(Formula::eq(hs, is), Formula::eq(he, ie)),
               conj(Formula::eq(hs, ie), Formula::eq(he, is)))));
    }
  }
  return exists_all(all, Formula::conj(std::move(parts)));
}

Formula build_word_formula(std::string_view v) {
  if (v.empty()) throw std::invalid_argument("word formula needs a non-empty word");
  std::vector<std::string> chain;
  for (std::size_t j = 1; j <= v.size(); ++j) chain.push_back("y" + std::to_string(j));
  std::vector<Formula> parts;
  append_chain(chain, v, parts);
  std::vector<Formula> covered;
  for (const auto& y : chain) covered.push_back(Formula::eq("z", y));
  parts.push_back(Formula::forall("z", Formula::disj(std::move(covered))));
  return exists_all(chain, Formula::conj(std::move(parts)));
}

Formula build_endpoints_formula(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) throw std::invalid_argument("endpoint words must have equal length");
  if (x.empty()) throw std::invalid_argument("endpoint words must be non-empty");
  const Formula two_ends = Formula::exists(
      "e1", Formula::exists(
                "e2", Formula::conj({neq("e1", "e2"), endpoint_by_neighbour("e1", "q", "r"),
                                     endpoint_by_neighbour("e2", "q", "r"),
                                     disj(conj(reads_from("e1", x), reads_from("e2", y)),
                                          conj(reads_from("e1", y), reads_from("e2", x)))})));
  if (x.size() > 1) return alpha_normalize(two_ends);
  // A single-position word has one endpoint that is both prefix and suffix.
  const Formula single = Formula::exists(
      "e", Formula::conj({Formula::forall("z", Formula::eq("z", "e")), Formula::label(x[0], "e"),
                          Formula::label(y[0], "e")}));
  return alpha_normalize(disj(two_ends, single));
}

Formula build_lrtt_class_formula(std::string_view w, int k, int t, const Alphabet& alphabet) {
  if (k < 1 || t < 1) throw std::invalid_argument("k and t must be at least 1");
  alphabet.validate(w);
  const auto kk = static_cast<std::size_t>(k);
  if (w.size() < kk) {
    if (w.empty()) return Formula::negate(Formula::exists("y", Formula::eq("y", "y")));
    return alpha_normalize(build_word_formula(w));
  }
  std::vector<Formula> parts;
  for (std::size_t len = 1; len <= kk; ++len) {
    for (const Word& v : words_of_length(alphabet, len)) {
      if (canonical_factor(v) != v) continue;
      const int c = static_cast<int>(std::min<std::size_t>(count_factor_rev(w, v), t));
      if (c >= t) {
        parts.push_back(build_count_formula(v, t));
      } else {
        if (c >= 1) parts.push_back(build_count_formula(v, c));
        parts.push_back(Formula::negate(build_count_formula(v, c + 1)));
      }
    }
  }
  if (kk >= 2) {
    parts.push_back(
        build_endpoints_formula(w.substr(0, kk - 1), reversed(w.substr(w.size() - (kk - 1)))));
  }
  return alpha_normalize(Formula::conj(std::move(parts)));
}

}  // namespace revlang
