#include "revlang/syntactic.hpp"

#include <map>
#include <string>
#include <unordered_map>

#include "revlang/error.hpp"

namespace revlang {

namespace {

struct TransformationHash {
  std::size_t operator()(const std::vector<Dfa::State>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Dfa::State q : v) h = (h ^ q) * 1099511628211ull;
    return h;
  }
};

}  // namespace

SyntacticData::Element SyntacticData::evaluate(std::string_view w) const {
  const std::size_t letters = dfa.alphabet().size();
  Element m = identity();
  for (char c : w) {
    const auto i = dfa.alphabet().index_of(c);
    if (!i) throw AlphabetError(std::string("letter '") + c + "' is not in the alphabet");
    m = right[m * letters + *i];
  }
  return m;
}

SyntacticData syntactic_monoid(const Dfa& a, std::size_t element_cap) {
  Dfa dfa = a.is_minimal() ? a : minimize(a);
  const std::size_t states = dfa.num_states();
  const std::size_t letters = dfa.alphabet().size();

  std::vector<std::vector<Dfa::State>> trans;
  std::vector<Word> witnesses;
  std::vector<SyntacticData::Element> right;
  std::unordered_map<std::vector<Dfa::State>, SyntacticData::Element, TransformationHash> ids;

  std::vector<Dfa::State> id(states);
  for (std::size_t q = 0; q < states; ++q) id[q] = static_cast<Dfa::State>(q);
  ids.emplace(id, 0);
  trans.push_back(std::move(id));
  witnesses.emplace_back();

  for (std::size_t m = 0; m < trans.size(); ++m) {
    for (std::size_t c = 0; c < letters; ++c) {
      std::vector<Dfa::State> next(states);
      for (std::size_t q = 0; q < states; ++q) next[q] = dfa.next(trans[m][q], c);
      auto [it, fresh] = ids.try_emplace(next, static_cast<SyntacticData::Element>(trans.size()));
      if (fresh) {
        if (trans.size() >= element_cap) {
          throw CapExceeded("syntactic monoid exceeds " + std::to_string(element_cap) + " elements");
        }
        trans.push_back(std::move(next));
        witnesses.push_back(witnesses[m] + dfa.alphabet()[c]);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = trans.size();
  // x * y: run y's witness from x along the right Cayley graph.
  std::vector<SyntacticData::Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto m = static_cast<SyntacticData::Element>(x);
      for (char c : witnesses[y]) m = right[m * letters + *dfa.alphabet().index_of(c)];
      table[x * n + y] = m;
    }
  }
  std::map<char, SyntacticData::Element> generators;
  for (std::size_t c = 0; c < letters; ++c) generators[dfa.alphabet()[c]] = right[c];

  std::vector<bool> in_semigroup(n, true);
  in_semigroup[0] = false;
  for (auto r : right) {
    if (r == 0) in_semigroup[0] = true;
  }
  std::vector<bool> accepting(n);
  for (std::size_t m = 0; m < n; ++m) accepting[m] = dfa.is_accepting(trans[m][dfa.initial()]);

  FiniteSemigroup monoid(n, std::move(table), std::move(generators));
  return SyntacticData{std::move(dfa),          std::move(monoid),   std::move(witnesses),
                       std::move(in_semigroup), std::move(accepting), std::move(trans),
                       std::move(right)};
}

SyntacticSemigroup syntactic_semigroup(const SyntacticData& s) {
  const std::size_t letters = s.dfa.alphabet().size();
  std::vector<SyntacticData::Element> members;
  std::vector<std::uint32_t> index(s.size(), 0);
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (s.in_semigroup[m]) {
      index[m] = static_cast<std::uint32_t>(members.size());
      members.push_back(static_cast<SyntacticData::Element>(m));
    }
  }
  std::vector<Word> witnesses;
  for (auto m : members) {
    if (m != s.identity()) {
      witnesses.push_back(s.witnesses[m]);
      continue;
    }
    // Least non-empty word acting as the identity: extend a least witness.
    Word best;
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t c = 0; c < letters; ++c) {
        if (s.right[x * letters + c] != s.identity()) continue;
        Word cand = s.witnesses[x] + s.dfa.alphabet()[c];
        if (best.empty() || s.dfa.alphabet().shortlex_less(cand, best)) best = std::move(cand);
      }
    }
    witnesses.push_back(std::move(best));
  }
  const std::size_t n = members.size();
  std::vector<FiniteSemigroup::Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index[s.monoid.mult(members[i], members[j])];
  }
  std::map<char, FiniteSemigroup::Element> generators;
  for (const auto& [c, g] : s.monoid.generators()) generators[c] = index[g];
  return SyntacticSemigroup{FiniteSemigroup(n, std::move(table), std::move(generators)),
                            std::move(members), std::move(witnesses)};
}

std::vector<std::vector<Word>> brute_force_congruence(const Dfa& a, std::size_t max_len) {
  const Dfa dfa = a.is_minimal() ? a : minimize(a);
  std::map<std::vector<Dfa::State>, std::size_t> classes;
  std::vector<std::vector<Word>> out;
  for (const Word& w : all_words(dfa.alphabet(), max_len)) {
    std::vector<Dfa::State> action(dfa.num_states());
    for (std::size_t q = 0; q < dfa.num_states(); ++q) {
      action[q] = dfa.run(static_cast<Dfa::State>(q), w);
    }
    auto [it, fresh] = classes.try_emplace(std::move(action), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(w);
  }
  return out;
}

Involution involution_from_reverse(const SyntacticData& s, const Dfa& a) {
  if (!is_reversible(a)) throw NotReversible("the language is not closed under reversal");
  std::vector<FiniteSemigroup::Element> star(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) star[m] = s.evaluate(reversed(s.witnesses[m]));
  Involution inv(s.monoid, std::move(star));
  if (!accepting_star_closed(s, inv)) {
    throw InvolutionInconsistent("the accepting set is not closed under the involution");
  }
  return inv;
}

Involution restrict_involution(const SyntacticSemigroup& sg, const Involution& star) {
  std::map<SyntacticData::Element, FiniteSemigroup::Element> index;
  for (std::size_t i = 0; i < sg.monoid_element.size(); ++i) {
    index[sg.monoid_element[i]] = static_cast<FiniteSemigroup::Element>(i);
  }
  std::vector<FiniteSemigroup::Element> table;
  for (auto m : sg.monoid_element) {
    auto it = index.find(star(m));
    if (it == index.end()) {
      throw InvolutionInconsistent("the involution leaves the syntactic semigroup");
    }
    table.push_back(it->second);
  }
  return Involution(sg.semigroup, std::move(table));
}

bool accepting_star_closed(const SyntacticData& s, const Involution& star) {
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (s.accepting[m] != s.accepting[star(static_cast<FiniteSemigroup::Element>(m))]) return false;
  }
  return true;
}

}  // namespace revlang
