#include "revlang/regex.hpp"

#include <cctype>
#include <vector>

#include "revlang/error.hpp"

namespace revlang {

struct Regex::Node {
  Kind kind;
  char symbol = 0;
  std::vector<Regex> operands;
};

Regex Regex::empty() { return Regex(std::make_shared<Node>(Node{Kind::Empty, 0, {}})); }
Regex Regex::epsilon() {
  return Regex(std::make_shared<Node>(Node{Kind::Epsilon, 0, {}}));
}
Regex Regex::letter(char a) {
  return Regex(std::make_shared<Node>(Node{Kind::Letter, a, {}}));
}
Regex Regex::alt(Regex lhs, Regex rhs) {
  return Regex(std::make_shared<Node>(
      Node{Kind::Union, 0, {std::move(lhs), std::move(rhs)}}));
}
Regex Regex::concat(Regex lhs, Regex rhs) {
  return Regex(std::make_shared<Node>(
      Node{Kind::Concat, 0, {std::move(lhs), std::move(rhs)}}));
}
Regex Regex::star(Regex inner) {
  return Regex(std::make_shared<Node>(Node{Kind::Star, 0, {std::move(inner)}}));
}

Regex::Kind Regex::kind() const noexcept { return node_->kind; }
char Regex::symbol() const noexcept { return node_->symbol; }

const Regex& Regex::lhs() const { return node_->operands.at(0); }
const Regex& Regex::rhs() const { return node_->operands.at(1); }

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      return true;
    case Regex::Kind::Letter:
      return a.symbol() == b.symbol();
    case Regex::Kind::Star:
      return a.lhs() == b.lhs();
    case Regex::Kind::Union:
    case Regex::Kind::Concat:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

int precedence(Regex::Kind k) {
  switch (k) {
    case Regex::Kind::Union:
      return 0;
    case Regex::Kind::Concat:
      return 1;
    case Regex::Kind::Star:
      return 2;
    default:
      return 3;
  }
}

void render(const Regex& r, int context, std::string& out) {
  const bool wrap = precedence(r.kind()) < context;
  if (wrap) out += '(';
  switch (r.kind()) {
    case Regex::Kind::Empty:
      out += '#';
      break;
    case Regex::Kind::Epsilon:
      out += '_';
      break;
    case Regex::Kind::Letter:
      out += r.symbol();
      break;
    case Regex::Kind::Union:
      render(r.lhs(), 0, out);
      out += '+';
      render(r.rhs(), 0, out);
      break;
    case Regex::Kind::Concat:
      render(r.lhs(), 1, out);
      render(r.rhs(), 1, out);
      break;
    case Regex::Kind::Star:
      render(r.lhs(), 3, out);
      out += '*';
      break;
  }
  if (wrap) out += ')';
}

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = parse_union();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c != '+' && c != ')' && c != '*';
  }

  Regex parse_union() {
    Regex r = parse_concat();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        r = Regex::alt(std::move(r), parse_concat());
      } else {
        return r;
      }
    }
  }

  Regex parse_concat() {
    Regex r = parse_star();
    while (at_atom_start()) r = Regex::concat(std::move(r), parse_star());
    return r;
  }

  Regex parse_star() {
    Regex r = parse_atom();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        r = Regex::star(std::move(r));
      } else {
        return r;
      }
    }
  }

  Regex parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of regex", pos_);
    const char c = text_[pos_];
    switch (c) {
      case '(': {
        ++pos_;
        Regex inner = parse_union();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
          throw ParseError("expected ')'", pos_);
        }
        ++pos_;
        return inner;
      }
      case '_':
        ++pos_;
        return Regex::epsilon();
      case '#':
        ++pos_;
        return Regex::empty();
      case '+':
      case ')':
      case '*':
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
      default:
        if (!alphabet_.contains(c)) {
          throw AlphabetError(std::string("letter '") + c + "' at offset " +
                              std::to_string(pos_) + " is not in alphabet \"" +
                              alphabet_.letters() + "\"");
        }
        ++pos_;
        return Regex::letter(c);
    }
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Regex::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return RegexParser(text, alphabet).parse();
}

}  // namespace revlang
