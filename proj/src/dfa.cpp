#include "revlang/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "revlang/error.hpp"

namespace revlang {

using State = Dfa::State;

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State initial,
         std::vector<bool> accepting, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (num_states == 0) throw Error("a DFA needs at least one state");
  if (accepting_.size() != num_states) {
    throw Error("accepting vector does not match the number of states");
  }
  if (delta_.size() != num_states * alphabet_.size()) {
    throw Error("transition table is not total");
  }
  if (initial_ >= num_states) throw Error("initial state out of range");
  for (State q : delta_) {
    if (q >= num_states) throw Error("transition target out of range");
  }
}

Dfa Dfa::from_transitions(
    Alphabet alphabet, std::size_t num_states, State initial,
    const std::vector<State>& accepting,
    const std::vector<std::tuple<State, char, State>>& transitions) {
  constexpr State kUnset = static_cast<State>(-1);
  const std::size_t m = alphabet.size();
  std::vector<State> delta(num_states * m, kUnset);
  for (const auto& [from, letter, to] : transitions) {
    if (from >= num_states || to >= num_states) {
      throw Error("transition refers to a state out of range");
    }
    const auto idx = alphabet.index_of(letter);
    if (!idx) {
      throw AlphabetError(std::string("transition letter '") + letter +
                          "' is not in alphabet \"" + alphabet.letters() + "\"");
    }
    State& slot = delta[from * m + *idx];
    if (slot != kUnset && slot != to) {
      throw Error("nondeterministic transition from state " +
                  std::to_string(from) + " on '" + letter + "'");
    }
    slot = to;
  }
  std::size_t n = num_states;
  if (std::find(delta.begin(), delta.end(), kUnset) != delta.end()) {
    const auto sink = static_cast<State>(n++);
    delta.resize(n * m, sink);
    for (State& s : delta) {
      if (s == kUnset) s = sink;
    }
  }
  std::vector<bool> acc(n, false);
  for (State q : accepting) {
    if (q >= num_states) throw Error("accepting state out of range");
    acc[q] = true;
  }
  return Dfa(std::move(alphabet), n, initial, std::move(acc), std::move(delta));
}

Dfa Dfa::universal(Alphabet alphabet) {
  const std::size_t m = alphabet.size();
  return minimize(Dfa(std::move(alphabet), 1, 0, {true}, std::vector<State>(m, 0)));
}

Dfa Dfa::empty_language(Alphabet alphabet) {
  const std::size_t m = alphabet.size();
  return minimize(Dfa(std::move(alphabet), 1, 0, {false}, std::vector<State>(m, 0)));
}

State Dfa::run(State from, std::string_view word) const {
  State q = from;
  for (char c : word) {
    const auto idx = alphabet_.index_of(c);
    if (!idx) {
      throw AlphabetError(std::string("letter '") + c +
                          "' is not in alphabet \"" + alphabet_.letters() + "\"");
    }
    q = next(q, *idx);
  }
  return q;
}

bool operator==(const Dfa& a, const Dfa& b) {
  return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ &&
         a.accepting_ == b.accepting_ && a.delta_ == b.delta_;
}

// ---------------------------------------------------------------------------
// Regex compilation

namespace {

struct PositionInfo {
  bool nullable = false;
  std::vector<State> first;
  std::vector<State> last;
};

std::vector<State> merge_sets(const std::vector<State>& a,
                              const std::vector<State>& b) {
  std::vector<State> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class GlushkovBuilder {
 public:
  explicit GlushkovBuilder(const Alphabet& alphabet) : alphabet_(alphabet) {
    // Position 0 is the initial state and carries no letter.
    letters_.push_back(0);
    follow_.emplace_back();
  }

  PositionInfo visit(const Regex& r) {
    switch (r.kind()) {
      case Regex::Kind::Empty:
        return {};
      case Regex::Kind::Epsilon:
        return {true, {}, {}};
      case Regex::Kind::Letter: {
        const auto idx = alphabet_.index_of(r.symbol());
        if (!idx) {
          throw AlphabetError(std::string("letter '") + r.symbol() +
                              "' is not in alphabet \"" + alphabet_.letters() + "\"");
        }
        const auto p = static_cast<State>(letters_.size());
        letters_.push_back(*idx);
        follow_.emplace_back();
        return {false, {p}, {p}};
      }
      case Regex::Kind::Union: {
        auto a = visit(r.lhs());
        auto b = visit(r.rhs());
        return {a.nullable || b.nullable, merge_sets(a.first, b.first),
                merge_sets(a.last, b.last)};
      }
      case Regex::Kind::Concat: {
        auto a = visit(r.lhs());
        auto b = visit(r.rhs());
        for (State p : a.last) add_follow(p, b.first);
        return {a.nullable && b.nullable,
                a.nullable ? merge_sets(a.first, b.first) : a.first,
                b.nullable ? merge_sets(a.last, b.last) : b.last};
      }
      case Regex::Kind::Star: {
        auto a = visit(r.lhs());
        for (State p : a.last) add_follow(p, a.first);
        a.nullable = true;
        return a;
      }
    }
    return {};
  }

  Nfa build(const Regex& r) {
    const PositionInfo root = visit(r);
    Nfa nfa(alphabet_, letters_.size());
    nfa.initials = {0};
    nfa.accepting[0] = root.nullable;
    for (State p : root.last) nfa.accepting[p] = true;
    for (State q : root.first) nfa.targets(0, letters_[q]).push_back(q);
    for (State p = 1; p < letters_.size(); ++p) {
      for (State q : follow_[p]) nfa.targets(p, letters_[q]).push_back(q);
    }
    return nfa;
  }

 private:
  void add_follow(State p, const std::vector<State>& qs) {
    follow_[p] = merge_sets(follow_[p], qs);
  }

  const Alphabet& alphabet_;
  std::vector<std::size_t> letters_;
  std::vector<std::vector<State>> follow_;
};

}  // namespace

Nfa glushkov(const Regex& r, const Alphabet& alphabet) {
  return GlushkovBuilder(alphabet).build(r);
}

Dfa determinize(const Nfa& nfa) {
  const std::size_t m = nfa.alphabet.size();
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  std::vector<State> delta;

  auto intern = [&](std::vector<State> set) {
    auto [it, inserted] = ids.emplace(set, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(set));
    return it->second;
  };

  std::vector<State> start = nfa.initials;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  intern(std::move(start));

  std::vector<char> seen(nfa.num_states(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<State> target;
      for (State q : subsets[i]) {
        for (State r : nfa.targets(q, a)) {
          if (!seen[r]) {
            seen[r] = 1;
            target.push_back(r);
          }
        }
      }
      for (State r : target) seen[r] = 0;
      std::sort(target.begin(), target.end());
      delta.push_back(intern(std::move(target)));
    }
  }

  std::vector<bool> accepting(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                               [&](State q) { return nfa.accepting[q]; });
  }
  return Dfa(nfa.alphabet, subsets.size(), 0, std::move(accepting), std::move(delta));
}

Dfa compile(const Regex& r, const Alphabet& alphabet) {
  return minimize(determinize(glushkov(r, alphabet)));
}

Dfa compile(std::string_view regex, const Alphabet& alphabet) {
  return compile(parse_regex(regex, alphabet), alphabet);
}

// ---------------------------------------------------------------------------
// Minimization (Hopcroft partition refinement + shortlex BFS renumbering)

Dfa minimize(const Dfa& dfa) {
  const std::size_t m = dfa.alphabet().size();

  // Restrict to reachable states.
  constexpr State kNone = static_cast<State>(-1);
  std::vector<State> local(dfa.num_states(), kNone);
  std::vector<State> reachable{dfa.initial()};
  local[dfa.initial()] = 0;
  for (std::size_t i = 0; i < reachable.size(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      const State r = dfa.next(reachable[i], a);
      if (local[r] == kNone) {
        local[r] = static_cast<State>(reachable.size());
        reachable.push_back(r);
      }
    }
  }
  const std::size_t n = reachable.size();
  std::vector<State> delta(n * m);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < m; ++a) {
      delta[q * m + a] = local[dfa.next(reachable[q], a)];
    }
  }

  // Inverse transitions in CSR form, one block per letter.
  std::vector<std::size_t> pred_start((n + 1) * m, 0);
  std::vector<State> preds(n * m);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < m; ++a) ++pred_start[a * (n + 1) + delta[q * m + a] + 1];
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t q = 0; q < n; ++q) {
      pred_start[a * (n + 1) + q + 1] += pred_start[a * (n + 1) + q];
    }
  }
  {
    std::vector<std::size_t> fill(pred_start);
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < m; ++a) {
        const State r = delta[q * m + a];
        preds[a * n + fill[a * (n + 1) + r]++] = static_cast<State>(q);
      }
    }
  }

  std::vector<std::vector<State>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<State> acc, rej;
    for (std::size_t q = 0; q < n; ++q) {
      (dfa.is_accepting(reachable[q]) ? acc : rej).push_back(static_cast<State>(q));
    }
    if (!acc.empty()) blocks.push_back(std::move(acc));
    if (!rej.empty()) blocks.push_back(std::move(rej));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (State q : blocks[b]) block_of[q] = b;
  }

  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<char> in_work;
  auto schedule = [&](std::size_t b, std::size_t a) {
    if (in_work.size() < (b + 1) * m) in_work.resize((b + 1) * m, 0);
    if (!in_work[b * m + a]) {
      in_work[b * m + a] = 1;
      work.emplace_back(b, a);
    }
  };
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (std::size_t a = 0; a < m; ++a) schedule(smaller, a);
  }

  std::vector<char> marked(n, 0);
  std::vector<std::vector<State>> marked_in;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    const auto [splitter, a] = work.front();
    work.pop_front();
    in_work[splitter * m + a] = 0;

    const std::vector<State> members = blocks[splitter];
    marked_in.resize(blocks.size());
    for (State s : members) {
      const std::size_t lo = pred_start[a * (n + 1) + s];
      const std::size_t hi = pred_start[a * (n + 1) + s + 1];
      for (std::size_t i = lo; i < hi; ++i) {
        const State p = preds[a * n + i];
        if (marked[p]) continue;
        marked[p] = 1;
        const std::size_t y = block_of[p];
        if (marked_in[y].empty()) touched.push_back(y);
        marked_in[y].push_back(p);
      }
    }

    for (std::size_t y : touched) {
      std::vector<State>& hit = marked_in[y];
      if (hit.size() < blocks[y].size()) {
        std::vector<State> rest;
        rest.reserve(blocks[y].size() - hit.size());
        for (State q : blocks[y]) {
          if (!marked[q]) rest.push_back(q);
        }
        const std::size_t z = blocks.size();
        blocks[y] = std::move(rest);
        blocks.push_back(hit);
        for (State q : blocks[z]) block_of[q] = z;
        for (std::size_t c = 0; c < m; ++c) {
          if (y * m + c < in_work.size() && in_work[y * m + c]) {
            schedule(z, c);
          } else {
            schedule(blocks[y].size() <= blocks[z].size() ? y : z, c);
          }
        }
      }
      for (State q : hit) marked[q] = 0;
      hit.clear();
    }
    touched.clear();
  }

  // Canonical numbering: BFS over blocks from the initial block, letters in
  // alphabet order.
  std::vector<State> canon(blocks.size(), kNone);
  std::vector<std::size_t> order{block_of[0]};
  canon[block_of[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State rep = blocks[order[i]].front();
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t b = block_of[delta[rep * m + c]];
      if (canon[b] == kNone) {
        canon[b] = static_cast<State>(order.size());
        order.push_back(b);
      }
    }
  }

  std::vector<State> out_delta(order.size() * m);
  std::vector<bool> out_acc(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State rep = blocks[order[i]].front();
    out_acc[i] = dfa.is_accepting(reachable[rep]);
    for (std::size_t c = 0; c < m; ++c) {
      out_delta[i * m + c] = canon[block_of[delta[rep * m + c]]];
    }
  }
  Dfa out(dfa.alphabet(), order.size(), 0, std::move(out_acc), std::move(out_delta));
  out.minimal_ = true;
  return out;
}

// ---------------------------------------------------------------------------
// Language operations

Dfa reverse(const Dfa& dfa) {
  const std::size_t m = dfa.alphabet().size();
  Nfa nfa(dfa.alphabet(), dfa.num_states());
  for (State q = 0; q < dfa.num_states(); ++q) {
    if (dfa.is_accepting(q)) nfa.initials.push_back(q);
    for (std::size_t a = 0; a < m; ++a) nfa.targets(dfa.next(q, a), a).push_back(q);
  }
  nfa.accepting[dfa.initial()] = true;
  return minimize(determinize(nfa));
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetError("alphabet mismatch: \"" + a.alphabet().letters() +
                        "\" vs \"" + b.alphabet().letters() + "\"");
  }
}

}  // namespace

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const std::size_t m = a.alphabet().size();
  struct Visit {
    State p, q;
    std::size_t parent;
    char letter;
  };
  std::vector<Visit> nodes{{a.initial(), b.initial(), 0, 0}};
  std::vector<char> seen(a.num_states() * b.num_states(), 0);
  seen[a.initial() * b.num_states() + b.initial()] = 1;
  // BFS order is shortlex order of access words, so the first disagreeing
  // pair yields the shortlex-least witness.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Visit v = nodes[i];
    if (a.is_accepting(v.p) != b.is_accepting(v.q)) {
      Word w;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) w += nodes[j].letter;
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t c = 0; c < m; ++c) {
      const State p = a.next(v.p, c);
      const State q = b.next(v.q, c);
      char& flag = seen[p * b.num_states() + q];
      if (!flag) {
        flag = 1;
        nodes.push_back({p, q, i, a.alphabet()[c]});
      }
    }
  }
  return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) { return !distinguishing_word(a, b); }

bool is_reversible(const Dfa& dfa) { return equivalent(dfa, reverse(dfa)); }

Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a, b);
  const std::size_t m = a.alphabet().size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> delta;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = ids.emplace(std::pair{p, q}, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      const auto [p, q] = pairs[i];
      delta.push_back(intern(a.next(p, c), b.next(q, c)));
    }
  }
  std::vector<bool> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool x = a.is_accepting(pairs[i].first);
    const bool y = b.is_accepting(pairs[i].second);
    switch (op) {
      case BoolOp::Union:
        acc[i] = x || y;
        break;
      case BoolOp::Intersect:
        acc[i] = x && y;
        break;
      case BoolOp::Difference:
        acc[i] = x && !y;
        break;
    }
  }
  return minimize(Dfa(a.alphabet(), pairs.size(), 0, std::move(acc), std::move(delta)));
}

Dfa complement(const Dfa& a) {
  std::vector<bool> acc(a.num_states());
  std::vector<State> delta;
  delta.reserve(a.num_states() * a.alphabet().size());
  for (State q = 0; q < a.num_states(); ++q) {
    acc[q] = !a.is_accepting(q);
    for (std::size_t c = 0; c < a.alphabet().size(); ++c) delta.push_back(a.next(q, c));
  }
  return minimize(Dfa(a.alphabet(), a.num_states(), a.initial(), std::move(acc),
                      std::move(delta)));
}

Dfa quotient(const Dfa& a, std::string_view w, Side side) {
  std::vector<State> delta;
  delta.reserve(a.num_states() * a.alphabet().size());
  for (State q = 0; q < a.num_states(); ++q) {
    for (std::size_t c = 0; c < a.alphabet().size(); ++c) delta.push_back(a.next(q, c));
  }
  if (side == Side::Left) {
    const State start = a.run(a.initial(), w);
    std::vector<bool> acc(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) acc[q] = a.is_accepting(q);
    return minimize(Dfa(a.alphabet(), a.num_states(), start, std::move(acc),
                        std::move(delta)));
  }
  std::vector<bool> acc(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) acc[q] = a.is_accepting(a.run(q, w));
  return minimize(Dfa(a.alphabet(), a.num_states(), a.initial(), std::move(acc),
                      std::move(delta)));
}

Dfa bidirectional_quotient(const Dfa& a, std::string_view u, std::string_view v) {
  const Dfa forward = quotient(quotient(a, u, Side::Left), v, Side::Right);
  const Dfa backward =
      quotient(quotient(a, reversed(v), Side::Left), reversed(u), Side::Right);
  return boolean_op(forward, backward, BoolOp::Union);
}

std::vector<Word> enumerate(const Dfa& a, std::size_t max_len) {
  const std::size_t m = a.alphabet().size();
  const std::size_t n = a.num_states();
  // live[len][q]: some word of exactly `len` letters leads from q to acceptance.
  std::vector<std::vector<char>> live(max_len + 1, std::vector<char>(n, 0));
  for (State q = 0; q < n; ++q) live[0][q] = a.is_accepting(q);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (State q = 0; q < n; ++q) {
      for (std::size_t c = 0; c < m && !live[len][q]; ++c) {
        live[len][q] = live[len - 1][a.next(q, c)];
      }
    }
  }

  std::vector<Word> out;
  Word current;
  auto extend = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      const State r = a.next(q, c);
      if (!live[remaining - 1][r]) continue;
      current.push_back(a.alphabet()[c]);
      self(self, r, remaining - 1);
      current.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (live[len][a.initial()]) extend(extend, a.initial(), len);
  }
  return out;
}

}  // namespace revlang
