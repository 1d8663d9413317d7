#include "revlang/ltt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace revlang {

namespace {

void require_parameters(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("k and t must be at least 1");
}

std::string show(std::string_view w) { return w.empty() ? "_" : std::string(w); }

}  // namespace

std::size_t count_factor(std::string_view w, std::string_view v) {
  if (v.empty()) throw std::invalid_argument("factor must be non-empty");
  if (v.size() > w.size()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
    if (w.substr(i, v.size()) == v) ++n;
  }
  return n;
}

std::size_t count_factor_rev(std::string_view w, std::string_view v) {
  if (v.empty()) throw std::invalid_argument("factor must be non-empty");
  if (v.size() > w.size()) return 0;
  const Word vr = reversed(v);
  std::size_t n = 0;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
    const auto window = w.substr(i, v.size());
    if (window == v || window == vr) ++n;
  }
  return n;
}

std::optional<LttProfile> ltt_profile(std::string_view w, int k, int t) {
  require_parameters(k, t);
  const auto kk = static_cast<std::size_t>(k);
  if (w.size() < kk) return std::nullopt;
  LttProfile p;
  p.k = k;
  p.t = t;
  p.prefix = Word(w.substr(0, kk - 1));
  p.suffix = Word(w.substr(w.size() - (kk - 1)));
  for (std::size_t len = 1; len <= kk; ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      int& c = p.counts[Word(w.substr(i, len))];
      c = std::min(c + 1, t);
    }
  }
  return p;
}

std::optional<LrttProfile> lrtt_profile(std::string_view w, int k, int t) {
  require_parameters(k, t);
  const auto kk = static_cast<std::size_t>(k);
  if (w.size() < kk) return std::nullopt;
  LrttProfile p;
  p.k = k;
  p.t = t;
  Word x(w.substr(0, kk - 1));
  Word y = reversed(w.substr(w.size() - (kk - 1)));
  if (y < x) std::swap(x, y);
  p.boundary = {std::move(x), std::move(y)};
  for (std::size_t len = 1; len <= kk; ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      int& c = p.counts[canonical_factor(w.substr(i, len))];
      c = std::min(c + 1, t);
    }
  }
  return p;
}

LttClass ltt_class(std::string_view w, int k, int t) {
  if (auto p = ltt_profile(w, k, t)) return std::move(*p);
  return Word(w);
}

LrttClass lrtt_class(std::string_view w, int k, int t) {
  if (auto p = lrtt_profile(w, k, t)) return std::move(*p);
  Word a(w);
  Word b = reversed(w);
  if (b < a) std::swap(a, b);
  return ShortWordClass{std::move(a), std::move(b)};
}

bool ltt_equiv(std::string_view u, std::string_view w, int k, int t) {
  return ltt_class(u, k, t) == ltt_class(w, k, t);
}

bool lrtt_equiv(std::string_view u, std::string_view w, int k, int t) {
  return lrtt_class(u, k, t) == lrtt_class(w, k, t);
}

bool local_equiv(std::string_view u, std::string_view w, int k, int t, LocalMode mode) {
  return mode == LocalMode::Ltt ? ltt_equiv(u, w, k, t) : lrtt_equiv(u, w, k, t);
}

std::string to_string(const LttClass& c) {
  std::ostringstream os;
  if (const auto* w = std::get_if<Word>(&c)) {
    os << "short word: " << show(*w) << '\n';
    return os.str();
  }
  const auto& p = std::get<LttProfile>(c);
  os << "prefix: " << show(p.prefix) << '\n' << "suffix: " << show(p.suffix) << '\n';
  for (const auto& [v, n] : p.counts) os << v << ':' << n << (n == p.t ? "+" : "") << '\n';
  return os.str();
}

std::string to_string(const LrttClass& c) {
  std::ostringstream os;
  if (const auto* s = std::get_if<ShortWordClass>(&c)) {
    os << "short word class: {" << show(s->first) << ", " << show(s->second) << "}\n";
    return os.str();
  }
  const auto& p = std::get<LrttProfile>(c);
  os << "boundary: {" << show(p.boundary.first) << ", " << show(p.boundary.second) << "}\n";
  for (const auto& [v, n] : p.counts) os << v << ':' << n << (n == p.t ? "+" : "") << '\n';
  return os.str();
}

}  // namespace revlang
