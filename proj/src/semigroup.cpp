#include "revlang/semigroup.hpp"

#include <stdexcept>
#include <string>

#include "revlang/error.hpp"

namespace revlang {

namespace {

using Element = FiniteSemigroup::Element;

/// True when the generators reach every element under right multiplication.
bool generates(const FiniteSemigroup& s) {
  if (s.generators().empty()) return false;
  std::vector<bool> seen(s.size(), false);
  std::vector<Element> queue;
  for (const auto& [c, g] : s.generators()) {
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& [c, g] : s.generators()) {
      const Element next = s.mult(queue[i], g);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == s.size();
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::size_t size, std::vector<Element> table,
                                 std::map<char, Element> generators)
    : size_(size), table_(std::move(table)), generators_(std::move(generators)) {
  if (size_ == 0) throw std::invalid_argument("a semigroup needs at least one element");
  if (table_.size() != size_ * size_) throw std::invalid_argument("multiplication table has wrong size");
  for (Element e : table_) {
    if (e >= size_) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (const auto& [c, g] : generators_) {
    if (g >= size_) throw std::invalid_argument("generator out of range");
  }

  // Light's test: associativity on generators implies it everywhere once
  // they generate the semigroup.
  std::vector<Element> middles;
  if (generates(*this)) {
    for (const auto& [c, g] : generators_) middles.push_back(g);
  } else {
    for (Element g = 0; g < size_; ++g) middles.push_back(g);
  }
  for (Element a = 0; a < size_; ++a) {
    for (Element g : middles) {
      const Element ag = mult(a, g);
      for (Element b = 0; b < size_; ++b) {
        if (mult(ag, b) != mult(a, mult(g, b))) {
          throw std::invalid_argument("table is not associative at (" + std::to_string(a) + ", " +
                                      std::to_string(g) + ", " + std::to_string(b) + ")");
        }
      }
    }
  }

  for (Element e = 0; e < size_ && !identity_; ++e) {
    bool ok = true;
    for (Element a = 0; a < size_ && ok; ++a) ok = mult(e, a) == a && mult(a, e) == a;
    if (ok) identity_ = e;
  }
}

Element FiniteSemigroup::power(Element a, std::size_t n) const {
  if (n == 0) throw std::invalid_argument("power needs an exponent >= 1");
  std::optional<Element> result;
  Element base = a;
  while (n > 0) {
    if (n & 1) result = result ? mult(*result, base) : base;
    n >>= 1;
    if (n > 0) base = mult(base, base);
  }
  return *result;
}

Involution::Involution(const FiniteSemigroup& s, std::vector<Element> star) : star_(std::move(star)) {
  const std::size_t n = s.size();
  if (star_.size() != n) throw InvolutionInconsistent("involution table has wrong size");
  for (Element a = 0; a < n; ++a) {
    if (star_[a] >= n) throw InvolutionInconsistent("involution entry out of range");
  }
  for (Element a = 0; a < n; ++a) {
    if (star_[star_[a]] != a) {
      throw InvolutionInconsistent("(a*)* != a for element " + std::to_string(a));
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (star_[s.mult(a, b)] != s.mult(star_[b], star_[a])) {
        throw InvolutionInconsistent("(ab)* != b*a* for elements " + std::to_string(a) + ", " +
                                     std::to_string(b));
      }
    }
  }
  if (s.identity() && star_[*s.identity()] != *s.identity()) {
    throw InvolutionInconsistent("the identity is not fixed by the involution");
  }
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element e = 0; e < s.size(); ++e) {
    if (s.mult(e, e) == e) out.push_back(e);
  }
  return out;
}

Aperiodicity is_aperiodic(const FiniteSemigroup& s) {
  for (Element x = 0; x < s.size(); ++x) {
    const Element xn = s.power(x, s.size());
    if (s.mult(xn, x) != xn) return {false, x};
  }
  return {};
}

LttIdentityCheck check_ltt_identity(const FiniteSemigroup& s) {
  const auto idem = idempotents(s);
  const std::size_t n = s.size();
  std::vector<Element> sandwich(n);
  std::vector<Element> reps;
  std::vector<bool> seen(n);
  for (Element e : idem) {
    for (Element f : idem) {
      // Only e x f matters, so x (and z) range over the least element
      // producing each value; that keeps the first hit lexicographically least.
      reps.clear();
      std::fill(seen.begin(), seen.end(), false);
      for (Element x = 0; x < n; ++x) {
        sandwich[x] = s.mult(s.mult(e, x), f);
        if (!seen[sandwich[x]]) {
          seen[sandwich[x]] = true;
          reps.push_back(x);
        }
      }
      for (Element x : reps) {
        const Element a = sandwich[x];
        for (Element y = 0; y < n; ++y) {
          const Element ay = s.mult(a, y);
          for (Element z : reps) {
            const Element b = sandwich[z];
            if (s.mult(ay, b) != s.mult(s.mult(b, y), a)) {
              return {false, std::array<Element, 5>{e, f, x, y, z}};
            }
          }
        }
      }
    }
  }
  return {};
}

InvolutionIdentityCheck check_involution_identity(const FiniteSemigroup& s, const Involution& star) {
  for (Element e : idempotents(s)) {
    const Element es = star(e);
    for (Element x = 0; x < s.size(); ++x) {
      const Element lhs = s.mult(s.mult(e, x), es);
      const Element rhs = s.mult(s.mult(e, star(x)), es);
      if (lhs != rhs) return {false, std::make_pair(e, x)};
    }
  }
  return {};
}

}  // namespace revlang
