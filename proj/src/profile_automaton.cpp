#include "revlang/profile_automaton.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "revlang/error.hpp"

namespace revlang {

namespace {

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

/// Insert-or-find set of fixed-width keys stored in one flat arena. Indices
/// are dense and follow insertion order.
class PackedSet {
 public:
  explicit PackedSet(std::size_t width) : width_(width), table_(1024, kEmpty) {}

  std::size_t size() const noexcept { return count_; }
  const std::uint64_t* key(std::size_t i) const { return arena_.data() + i * width_; }

  std::pair<std::size_t, bool> insert(const std::uint64_t* k) {
    if (2 * (count_ + 1) > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    for (std::size_t h = hash(k) & mask;; h = (h + 1) & mask) {
      if (table_[h] == kEmpty) {
        table_[h] = static_cast<std::uint32_t>(count_);
        arena_.insert(arena_.end(), k, k + width_);
        return {count_++, true};
      }
      if (std::equal(k, k + width_, key(table_[h]))) return {table_[h], false};
    }
  }

 private:
  std::size_t hash(const std::uint64_t* k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::size_t i = 0; i < width_; ++i) {
      h ^= k[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<std::uint32_t> next(table_.size() * 2, kEmpty);
    const std::size_t mask = next.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t h = hash(key(i)) & mask;
      while (next[h] != kEmpty) h = (h + 1) & mask;
      next[h] = static_cast<std::uint32_t>(i);
    }
    table_.swap(next);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> table_;
};

unsigned bits_for(std::uint64_t max_value) {
  return std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
}

}  // namespace

ProfileAutomaton::ProfileAutomaton(Alphabet alphabet, int k, int t, LocalMode mode)
    : alphabet_(std::move(alphabet)), k_(k), t_(t), mode_(mode) {
  if (k < 1 || t < 1) throw std::invalid_argument("k and t must be at least 1");
  if (k > 32) throw std::invalid_argument("k above 32 is not supported");
  const std::size_t n = alphabet_.size();
  len_bits_ = bits_for(static_cast<std::uint64_t>(k));
  letter_bits_ = bits_for(n - 1);
  count_bits_ = bits_for(static_cast<std::uint64_t>(t));
  const auto kk = static_cast<std::size_t>(k);
  prefix_off_ = len_bits_;
  window_off_ = prefix_off_ + (kk - 1) * letter_bits_;
  counts_off_ = window_off_ + (kk - 1) * letter_bits_;

  code_base_.assign(kk + 2, 0);
  std::size_t power = 1;
  for (std::size_t len = 1; len <= kk; ++len) {
    power *= n;
    code_base_[len + 1] = code_base_[len] + power;
  }
  slot_of_code_.assign(code_base_[kk + 1], 0);
  std::map<Word, std::uint32_t> slots;
  for (std::size_t len = 1; len <= kk; ++len) {
    std::size_t code = 0;
    for (const Word& v : words_of_length(alphabet_, len)) {
      const Word name = mode_ == LocalMode::Lrtt ? canonical_factor(v) : v;
      auto [it, fresh] = slots.try_emplace(name, static_cast<std::uint32_t>(slot_names_.size()));
      if (fresh) slot_names_.push_back(name);
      slot_of_code_[code_base_[len] + code++] = it->second;
    }
  }
  const std::size_t bits = counts_off_ + slot_names_.size() * count_bits_;
  width_ = (bits + 63) / 64;
}

std::uint64_t ProfileAutomaton::field(const std::uint64_t* s, std::size_t offset,
                                      unsigned bits) const {
  const std::size_t i = offset / 64;
  const unsigned b = offset % 64;
  std::uint64_t v = s[i] >> b;
  if (b + bits > 64) v |= s[i + 1] << (64 - b);
  return v & ((std::uint64_t{1} << bits) - 1);
}

void ProfileAutomaton::set_field(std::uint64_t* s, std::size_t offset, unsigned bits,
                                 std::uint64_t v) const {
  const std::size_t i = offset / 64;
  const unsigned b = offset % 64;
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  s[i] = (s[i] & ~(mask << b)) | (v << b);
  if (b + bits > 64) {
    const unsigned spill = 64 - b;
    s[i + 1] = (s[i + 1] & ~(mask >> spill)) | (v >> spill);
  }
}

std::size_t ProfileAutomaton::length_of(const std::uint64_t* s) const {
  return static_cast<std::size_t>(field(s, 0, len_bits_));
}

Word ProfileAutomaton::letters_at(const std::uint64_t* s, std::size_t offset,
                                  std::size_t n) const {
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(alphabet_[field(s, offset + i * letter_bits_, letter_bits_)]);
  }
  return w;
}

ProfileAutomaton::State ProfileAutomaton::initial() const { return State(width_, 0); }

void ProfileAutomaton::step(const std::uint64_t* in, std::size_t letter,
                            std::uint64_t* out) const {
  std::copy(in, in + width_, out);
  const auto kk = static_cast<std::size_t>(k_);
  const std::size_t n = length_of(in);
  const std::size_t m = std::min(n, kk - 1);

  std::size_t ext[64];
  for (std::size_t i = 0; i < m; ++i) {
    ext[i] = static_cast<std::size_t>(field(in, window_off_ + i * letter_bits_, letter_bits_));
  }
  ext[m] = letter;

  const std::size_t base = alphabet_.size();
  std::size_t code = 0;
  std::size_t power = 1;
  for (std::size_t len = 1; len <= m + 1; ++len) {
    code += ext[m + 1 - len] * power;
    power *= base;
    const std::size_t slot_off = counts_off_ + slot_of_code_[code_base_[len] + code] * count_bits_;
    const std::uint64_t c = field(in, slot_off, count_bits_);
    if (c < static_cast<std::uint64_t>(t_)) set_field(out, slot_off, count_bits_, c + 1);
  }

  if (n < kk - 1) set_field(out, prefix_off_ + n * letter_bits_, letter_bits_, letter);
  const std::size_t keep = std::min(n + 1, kk - 1);
  for (std::size_t i = 0; i < keep; ++i) {
    set_field(out, window_off_ + i * letter_bits_, letter_bits_, ext[m + 1 - keep + i]);
  }
  set_field(out, 0, len_bits_, std::min(n + 1, kk));
}

ProfileAutomaton::State ProfileAutomaton::step(const State& s, std::size_t letter) const {
  State out(width_);
  step(s.data(), letter, out.data());
  return out;
}

ProfileAutomaton::State ProfileAutomaton::run(std::string_view w) const {
  State s = initial();
  for (char c : w) {
    const auto i = alphabet_.index_of(c);
    if (!i) throw AlphabetError(std::string("letter '") + c + "' is not in the alphabet");
    s = step(s, *i);
  }
  return s;
}

void ProfileAutomaton::class_key(const std::uint64_t* in, std::uint64_t* out) const {
  std::copy(in, in + width_, out);
  if (mode_ == LocalMode::Ltt) return;
  const auto kk = static_cast<std::size_t>(k_);
  const std::size_t n = length_of(in);
  auto read = [&](std::size_t off, std::size_t len) {
    std::vector<std::uint64_t> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = field(in, off + i * letter_bits_, letter_bits_);
    return v;
  };
  auto write = [&](std::size_t off, const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) set_field(out, off + i * letter_bits_, letter_bits_, v[i]);
  };
  if (n < kk) {
    auto w = read(prefix_off_, n);
    auto r = std::vector<std::uint64_t>(w.rbegin(), w.rend());
    const auto& least = std::min(w, r);
    write(prefix_off_, least);
    write(window_off_, least);
    return;
  }
  auto p = read(prefix_off_, kk - 1);
  auto s = read(window_off_, kk - 1);
  std::reverse(s.begin(), s.end());
  if (s < p) std::swap(p, s);
  write(prefix_off_, p);
  write(window_off_, s);
}

LttClass ProfileAutomaton::ltt_class_of(const State& s) const {
  const auto kk = static_cast<std::size_t>(k_);
  const std::size_t n = length_of(s.data());
  if (n < kk) return letters_at(s.data(), prefix_off_, n);
  LttProfile p;
  p.k = k_;
  p.t = t_;
  p.prefix = letters_at(s.data(), prefix_off_, kk - 1);
  p.suffix = letters_at(s.data(), window_off_, kk - 1);
  for (std::size_t i = 0; i < slot_names_.size(); ++i) {
    const auto c = field(s.data(), counts_off_ + i * count_bits_, count_bits_);
    if (c > 0) p.counts[slot_names_[i]] = static_cast<int>(c);
  }
  return p;
}

LrttClass ProfileAutomaton::lrtt_class_of(const State& s) const {
  const auto kk = static_cast<std::size_t>(k_);
  const std::size_t n = length_of(s.data());
  if (n < kk) {
    Word w = letters_at(s.data(), prefix_off_, n);
    Word r = reversed(w);
    if (r < w) std::swap(w, r);
    return ShortWordClass{w, r};
  }
  LrttProfile p;
  p.k = k_;
  p.t = t_;
  Word x = letters_at(s.data(), prefix_off_, kk - 1);
  Word y = reversed(letters_at(s.data(), window_off_, kk - 1));
  if (y < x) std::swap(x, y);
  p.boundary = {x, y};
  for (std::size_t i = 0; i < slot_names_.size(); ++i) {
    const auto c = field(s.data(), counts_off_ + i * count_bits_, count_bits_);
    if (c > 0) p.counts[slot_names_[i]] = static_cast<int>(c);
  }
  return p;
}

UnionVerdict is_union_of_classes(const Dfa& a, int k, int t, LocalMode mode,
                                 const UnionOptions& options) {
  const ProfileAutomaton pa(a.alphabet(), k, t, mode);
  const std::size_t w = pa.words_per_state();
  const std::size_t letters = a.alphabet().size();

  // Node key: packed profile state followed by the DFA state.
  PackedSet nodes(w + 1);
  PackedSet groups(w);
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> via;
  std::vector<std::uint32_t> group_first;

  auto word_of = [&](std::size_t node) {
    Word out;
    while (node != 0) {
      out.push_back(a.alphabet()[via[node]]);
      node = parent[node];
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  std::vector<std::uint64_t> key(w + 1, 0);
  std::vector<std::uint64_t> next(w + 1, 0);
  std::vector<std::uint64_t> group_key(w, 0);

  UnionVerdict verdict;
  // Returns true when the new node conflicts with an earlier one of its class.
  auto admit = [&](std::size_t node) {
    const std::uint64_t* k = nodes.key(node);
    pa.class_key(k, group_key.data());
    auto [g, fresh] = groups.insert(group_key.data());
    if (fresh) {
      group_first.push_back(static_cast<std::uint32_t>(node));
      return false;
    }
    const std::size_t other = group_first[g];
    const auto q = static_cast<Dfa::State>(k[w]);
    const auto q_other = static_cast<Dfa::State>(nodes.key(other)[w]);
    if (a.is_accepting(q) == a.is_accepting(q_other)) return false;
    verdict.kind = UnionVerdict::Kind::No;
    verdict.witness = std::make_pair(word_of(other), word_of(node));
    return true;
  };

  key[w] = a.initial();
  nodes.insert(key.data());
  parent.push_back(0);
  via.push_back(0);
  admit(0);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::copy(nodes.key(i), nodes.key(i) + w + 1, key.begin());
    for (std::size_t c = 0; c < letters; ++c) {
      pa.step(key.data(), c, next.data());
      next[w] = a.next(static_cast<Dfa::State>(key[w]), c);
      auto [id, fresh] = nodes.insert(next.data());
      if (!fresh) continue;
      parent.push_back(static_cast<std::uint32_t>(i));
      via.push_back(static_cast<std::uint8_t>(c));
      if (admit(id)) {
        verdict.states_explored = nodes.size();
        return verdict;
      }
      if (nodes.size() > options.state_cap) {
        verdict.kind = UnionVerdict::Kind::Aborted;
        verdict.states_explored = nodes.size();
        return verdict;
      }
    }
  }
  verdict.states_explored = nodes.size();
  return verdict;
}

ParamSearch search_params(const Dfa& a, int k_max, int t_max, LocalMode mode,
                          const UnionOptions& options) {
  if (k_max < 1 || t_max < 1) throw std::invalid_argument("search bounds must be at least 1");
  ParamSearch result;
  bool aborted = false;
  for (int k = 1; k <= k_max; ++k) {
    for (int t = 1; t <= t_max; ++t) {
      UnionVerdict v = is_union_of_classes(a, k, t, mode, options);
      const auto kind = v.kind;
      result.trace.push_back({k, t, std::move(v)});
      if (kind == UnionVerdict::Kind::Yes) {
        result.outcome = ParamSearch::Outcome::Found;
        result.k = k;
        result.t = t;
        return result;
      }
      if (kind == UnionVerdict::Kind::Aborted) aborted = true;
    }
  }
  result.outcome = aborted ? ParamSearch::Outcome::Aborted : ParamSearch::Outcome::None;
  return result;
}

Dfa factor_count_dfa(const Alphabet& alphabet, const std::vector<CountClause>& clauses) {
  std::size_t longest = 0;
  for (const CountClause& c : clauses) {
    if (c.factor.empty()) throw std::invalid_argument("count clause needs a non-empty factor");
    alphabet.validate(c.factor);
    if (c.value < 0) throw std::invalid_argument("count clause value must be non-negative");
    if (c.value > 8) throw CapExceeded("count clause value " + std::to_string(c.value) + " exceeds 8");
    longest = std::max(longest, c.factor.size());
  }
  if (clauses.empty()) return Dfa::universal(alphabet);

  // State: window of the last (longest-1) letters, then one saturating
  // counter byte per clause.
  const std::size_t keep = longest - 1;
  std::map<std::string, Dfa::State> ids;
  std::vector<std::string> states;
  std::vector<Dfa::State> delta;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = ids.try_emplace(s, static_cast<Dfa::State>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  intern(std::string(clauses.size(), '\0'));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      const std::string cur = states[i];
      const std::size_t wlen = cur.size() - clauses.size();
      std::string ext = cur.substr(0, wlen) + alphabet[c];
      std::string counts = cur.substr(wlen);
      for (std::size_t j = 0; j < clauses.size(); ++j) {
        const Word& f = clauses[j].factor;
        if (ext.size() >= f.size() && ext.compare(ext.size() - f.size(), f.size(), f) == 0) {
          counts[j] = static_cast<char>(std::min(counts[j] + 1, clauses[j].value + 1));
        }
      }
      if (ext.size() > keep) ext.erase(0, ext.size() - keep);
      delta.push_back(intern(ext + counts));
    }
  }
  std::vector<bool> accepting;
  for (const std::string& s : states) {
    const std::string counts = s.substr(s.size() - clauses.size());
    bool ok = true;
    for (std::size_t j = 0; j < clauses.size() && ok; ++j) {
      const int c = counts[j];
      ok = clauses[j].relation == CountClause::Relation::Eq ? c == clauses[j].value
                                                             : c >= clauses[j].value;
    }
    accepting.push_back(ok);
  }
  return minimize(Dfa(alphabet, states.size(), 0, std::move(accepting), std::move(delta)));
}

}  // namespace revlang
