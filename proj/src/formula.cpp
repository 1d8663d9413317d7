#include "revlang/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "revlang/error.hpp"

namespace revlang {

struct Formula::Node {
  Kind kind;
  char letter = 0;
  std::vector<std::string> vars;
  std::vector<Formula> kids;
  std::vector<std::string> free;
  Signature sig;
};

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

void require_position(const std::string& name) {
  if (!valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'");
  if (!is_position_variable(name)) {
    throw SortError("sort error: '" + name +
                    "' is a set variable but a position variable is required");
  }
}

void require_set(const std::string& name) {
  if (!valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'");
  if (!is_set_variable(name)) {
    throw SortError("sort error: '" + name +
                    "' is a position variable but a set variable is required");
  }
}

Signature merge(Signature a, const Signature& b) {
  a.label |= b.label;
  a.less |= b.less;
  a.succ |= b.succ;
  a.bet |= b.bet;
  a.nbr |= b.nbr;
  a.eq |= b.eq;
  a.in |= b.in;
  a.second_order |= b.second_order;
  return a;
}

}  // namespace

std::string Signature::to_string() const {
  std::vector<std::string> preds;
  if (less) preds.emplace_back("<");
  if (succ) preds.emplace_back("succ");
  if (bet) preds.emplace_back("bet");
  if (nbr) preds.emplace_back("N");
  std::string out = second_order ? "mso(" : "fo(";
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (i) out += ',';
    out += preds[i];
  }
  return out + ')';
}

Formula Formula::make(Node node) {
  switch (node.kind) {
    case Kind::Label:
    case Kind::Less:
    case Kind::Succ:
    case Kind::Bet:
    case Kind::Nbr:
    case Kind::Eq:
    case Kind::In: {
      node.free = node.vars;
      std::sort(node.free.begin(), node.free.end());
      node.free.erase(std::unique(node.free.begin(), node.free.end()), node.free.end());
      auto& s = node.sig;
      s.label = node.kind == Kind::Label;
      s.less = node.kind == Kind::Less;
      s.succ = node.kind == Kind::Succ;
      s.bet = node.kind == Kind::Bet;
      s.nbr = node.kind == Kind::Nbr;
      s.eq = node.kind == Kind::Eq;
      s.in = node.kind == Kind::In;
      break;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Not: {
      std::set<std::string> free;
      for (const Formula& k : node.kids) {
        free.insert(k.free_variables().begin(), k.free_variables().end());
        node.sig = merge(node.sig, k.signature());
      }
      node.free.assign(free.begin(), free.end());
      break;
    }
    case Kind::Exists:
    case Kind::Forall:
    case Kind::ExistsSet:
    case Kind::ForallSet: {
      const Formula& b = node.kids.front();
      node.free = b.free_variables();
      std::erase(node.free, node.vars.front());
      node.sig = b.signature();
      if (node.kind == Kind::ExistsSet || node.kind == Kind::ForallSet) {
        node.sig.second_order = true;
      }
      break;
    }
  }
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::label(char letter, std::string x) {
  require_position(x);
  return make(Node{Kind::Label, letter, {std::move(x)}, {}, {}, {}});
}

Formula Formula::less(std::string x, std::string y) {
  require_position(x);
  require_position(y);
  return make(Node{Kind::Less, 0, {std::move(x), std::move(y)}, {}, {}, {}});
}

Formula Formula::succ(std::string x, std::string y) {
  require_position(x);
  require_position(y);
  return make(Node{Kind::Succ, 0, {std::move(x), std::move(y)}, {}, {}, {}});
}

Formula Formula::bet(std::string x, std::string y, std::string z) {
  require_position(x);
  require_position(y);
  require_position(z);
  return make(
      Node{Kind::Bet, 0, {std::move(x), std::move(y), std::move(z)}, {}, {}, {}});
}

Formula Formula::nbr(std::string x, std::string y) {
  require_position(x);
  require_position(y);
  return make(Node{Kind::Nbr, 0, {std::move(x), std::move(y)}, {}, {}, {}});
}

Formula Formula::eq(std::string x, std::string y) {
  require_position(x);
  require_position(y);
  return make(Node{Kind::Eq, 0, {std::move(x), std::move(y)}, {}, {}, {}});
}

Formula Formula::in(std::string x, std::string set) {
  require_position(x);
  require_set(set);
  return make(Node{Kind::In, 0, {std::move(x), std::move(set)}, {}, {}, {}});
}

Formula Formula::conj(std::vector<Formula> parts) {
  return make(Node{Kind::And, 0, {}, std::move(parts), {}, {}});
}

Formula Formula::disj(std::vector<Formula> parts) {
  return make(Node{Kind::Or, 0, {}, std::move(parts), {}, {}});
}

Formula Formula::negate(Formula f) {
  return make(Node{Kind::Not, 0, {}, {std::move(f)}, {}, {}});
}

Formula Formula::exists(std::string x, Formula body) {
  require_position(x);
  return make(Node{Kind::Exists, 0, {std::move(x)}, {std::move(body)}, {}, {}});
}

Formula Formula::forall(std::string x, Formula body) {
  require_position(x);
  return make(Node{Kind::Forall, 0, {std::move(x)}, {std::move(body)}, {}, {}});
}

Formula Formula::exists_set(std::string set, Formula body) {
  require_set(set);
  return make(Node{Kind::ExistsSet, 0, {std::move(set)}, {std::move(body)}, {}, {}});
}

Formula Formula::forall_set(std::string set, Formula body) {
  require_set(set);
  return make(Node{Kind::ForallSet, 0, {std::move(set)}, {std::move(body)}, {}, {}});
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
char Formula::letter() const noexcept { return node_->letter; }
const std::vector<std::string>& Formula::vars() const noexcept { return node_->vars; }
const std::vector<Formula>& Formula::children() const noexcept { return node_->kids; }
const Formula& Formula::body() const { return node_->kids.at(0); }
const std::vector<std::string>& Formula::free_variables() const noexcept {
  return node_->free;
}
const Signature& Formula::signature() const noexcept { return node_->sig; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.letter() == b.letter() && a.vars() == b.vars() &&
         a.children() == b.children();
}

Formula truth() { return Formula::conj({}); }
Formula falsity() { return Formula::disj({}); }
Formula neq(std::string x, std::string y) {
  return Formula::negate(Formula::eq(std::move(x), std::move(y)));
}
Formula implies(Formula a, Formula b) {
  return Formula::disj({Formula::negate(std::move(a)), std::move(b)});
}
Formula iff(Formula a, Formula b) {
  return Formula::conj({implies(a, b), implies(b, a)});
}
Formula conj(Formula a, Formula b) { return Formula::conj({std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return Formula::disj({std::move(a), std::move(b)}); }

// ---------------------------------------------------------------------------

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  out.insert(f.vars().begin(), f.vars().end());
  for (const Formula& k : f.children()) collect_variables(k, out);
}

class Renamer {
 public:
  explicit Renamer(const Formula& f)
      : used_(f.free_variables().begin(), f.free_variables().end()) {}

  Formula rename(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Label:
        return Formula::label(f.letter(), lookup(f.vars()[0]));
      case K::Less:
        return Formula::less(lookup(f.vars()[0]), lookup(f.vars()[1]));
      case K::Succ:
        return Formula::succ(lookup(f.vars()[0]), lookup(f.vars()[1]));
      case K::Bet:
        return Formula::bet(lookup(f.vars()[0]), lookup(f.vars()[1]),
                            lookup(f.vars()[2]));
      case K::Nbr:
        return Formula::nbr(lookup(f.vars()[0]), lookup(f.vars()[1]));
      case K::Eq:
        return Formula::eq(lookup(f.vars()[0]), lookup(f.vars()[1]));
      case K::In:
        return Formula::in(lookup(f.vars()[0]), lookup(f.vars()[1]));
      case K::And:
      case K::Or: {
        std::vector<Formula> kids;
        kids.reserve(f.children().size());
        for (const Formula& k : f.children()) kids.push_back(rename(k));
        return f.kind() == K::And ? Formula::conj(std::move(kids))
                                  : Formula::disj(std::move(kids));
      }
      case K::Not:
        return Formula::negate(rename(f.body()));
      case K::Exists:
      case K::Forall:
      case K::ExistsSet:
      case K::ForallSet: {
        const std::string& original = f.vars()[0];
        std::string fresh = original;
        for (int i = 1; used_.count(fresh); ++i) {
          fresh = original + "_" + std::to_string(i);
        }
        used_.insert(fresh);
        auto previous = scope_.find(original);
        std::optional<std::string> saved;
        if (previous != scope_.end()) saved = previous->second;
        scope_[original] = fresh;
        Formula body = rename(f.body());
        if (saved) {
          scope_[original] = *saved;
        } else {
          scope_.erase(original);
        }
        switch (f.kind()) {
          case K::Exists:
            return Formula::exists(fresh, std::move(body));
          case K::Forall:
            return Formula::forall(fresh, std::move(body));
          case K::ExistsSet:
            return Formula::exists_set(fresh, std::move(body));
          default:
            return Formula::forall_set(fresh, std::move(body));
        }
      }
    }
    return f;
  }

 private:
  std::string lookup(const std::string& name) const {
    auto it = scope_.find(name);
    return it == scope_.end() ? name : it->second;
  }

  std::set<std::string> used_;
  std::map<std::string, std::string> scope_;
};

// S-expression reader -------------------------------------------------------

struct Token {
  enum class Type { Open, Close, Symbol, End } type;
  std::string text;
  std::size_t offset;
};

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = parse_formula_expr();
    if (current_.type != Token::Type::End) {
      throw ParseError("trailing input '" + current_.text + "'", current_.offset);
    }
    return f;
  }

 private:
  void advance() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) {
      current_ = {Token::Type::End, "", pos_};
      return;
    }
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      current_ = {c == '(' ? Token::Type::Open : Token::Type::Close, std::string(1, c), pos_};
      ++pos_;
      return;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      ++pos_;
    }
    current_ = {Token::Type::Symbol, std::string(text_.substr(start, pos_ - start)), start};
  }

  Token expect(Token::Type type, const char* what) {
    if (current_.type != type) {
      throw ParseError(std::string("expected ") + what +
                           (current_.type == Token::Type::End ? " but input ended"
                                                              : ", found '" + current_.text + "'"),
                       current_.offset);
    }
    Token t = current_;
    advance();
    return t;
  }

  std::vector<Token> symbols_until_close() {
    std::vector<Token> out;
    while (current_.type == Token::Type::Symbol) {
      out.push_back(current_);
      advance();
    }
    return out;
  }

  template <typename Fn>
  auto with_offset(std::size_t offset, Fn&& fn) {
    try {
      return fn();
    } catch (const SortError& e) {
      if (e.offset() != ParseError::npos) throw;
      throw SortError(e.what(), offset);
    } catch (const ParseError& e) {
      if (e.offset() != ParseError::npos) throw;
      throw ParseError(e.what(), offset);
    }
  }

  Formula parse_formula_expr() {
    const Token open = expect(Token::Type::Open, "'('");
    const Token head = expect(Token::Type::Symbol, "an operator");
    const std::string& op = head.text;

    auto atom_args = [&](std::size_t arity) {
      auto args = symbols_until_close();
      if (args.size() != arity || current_.type != Token::Type::Close) {
        throw ParseError("arity error: '" + op + "' expects " + std::to_string(arity) +
                             " variables",
                         open.offset);
      }
      advance();
      return args;
    };

    if (op == "lab") {
      auto args = atom_args(2);
      if (args[0].text.size() != 1) {
        throw ParseError("label must be a single letter", args[0].offset);
      }
      return with_offset(args[1].offset,
                         [&] { return Formula::label(args[0].text[0], args[1].text); });
    }
    if (op == "<" || op == "succ" || op == "N" || op == "=" || op == "in") {
      auto args = atom_args(2);
      return with_offset(args[0].offset, [&] {
        if (op == "<") return Formula::less(args[0].text, args[1].text);
        if (op == "succ") return Formula::succ(args[0].text, args[1].text);
        if (op == "N") return Formula::nbr(args[0].text, args[1].text);
        if (op == "=") return Formula::eq(args[0].text, args[1].text);
        return Formula::in(args[0].text, args[1].text);
      });
    }
    if (op == "bet") {
      auto args = atom_args(3);
      return with_offset(args[0].offset, [&] {
        return Formula::bet(args[0].text, args[1].text, args[2].text);
      });
    }
    if (op == "and" || op == "or" || op == "not" || op == "implies" || op == "iff") {
      std::vector<Formula> kids;
      while (current_.type == Token::Type::Open) kids.push_back(parse_formula_expr());
      if (current_.type != Token::Type::Close) {
        throw ParseError("expected a subformula or ')'", current_.offset);
      }
      advance();
      const std::size_t arity = op == "not" ? 1 : 2;
      if ((op == "not" || op == "implies" || op == "iff") && kids.size() != arity) {
        throw ParseError("arity error: '" + op + "' expects " + std::to_string(arity) +
                             " subformulas",
                         open.offset);
      }
      if (op == "and") return Formula::conj(std::move(kids));
      if (op == "or") return Formula::disj(std::move(kids));
      if (op == "not") return Formula::negate(std::move(kids[0]));
      if (op == "implies") return implies(std::move(kids[0]), std::move(kids[1]));
      return iff(std::move(kids[0]), std::move(kids[1]));
    }
    if (op == "exists" || op == "forall" || op == "existsS" || op == "forallS") {
      const Token var = expect(Token::Type::Symbol, "a variable");
      Formula body = parse_formula_expr();
      expect(Token::Type::Close, "')'");
      return with_offset(var.offset, [&] {
        if (op == "exists") return Formula::exists(var.text, body);
        if (op == "forall") return Formula::forall(var.text, body);
        if (op == "existsS") return Formula::exists_set(var.text, body);
        return Formula::forall_set(var.text, body);
      });
    }
    throw ParseError("unknown operator '" + op + "'", head.offset);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Type::End, "", 0};
};

void render(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto atom = [&](const char* name) {
    out += '(';
    out += name;
    for (const auto& v : f.vars()) {
      out += ' ';
      out += v;
    }
    out += ')';
  };
  switch (f.kind()) {
    case K::Label:
      out += "(lab ";
      out += f.letter();
      out += ' ';
      out += f.vars()[0];
      out += ')';
      return;
    case K::Less:
      return atom("<");
    case K::Succ:
      return atom("succ");
    case K::Bet:
      return atom("bet");
    case K::Nbr:
      return atom("N");
    case K::Eq:
      return atom("=");
    case K::In:
      return atom("in");
    case K::And:
    case K::Or:
      out += f.kind() == K::And ? "(and" : "(or";
      for (const Formula& k : f.children()) {
        out += ' ';
        render(k, out);
      }
      out += ')';
      return;
    case K::Not:
      out += "(not ";
      render(f.body(), out);
      out += ')';
      return;
    case K::Exists:
    case K::Forall:
    case K::ExistsSet:
    case K::ForallSet: {
      static constexpr const char* names[] = {"exists", "forall", "existsS", "forallS"};
      out += '(';
      out += names[static_cast<int>(f.kind()) - static_cast<int>(K::Exists)];
      out += ' ';
      out += f.vars()[0];
      out += ' ';
      render(f.body(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

Formula alpha_normalize(const Formula& f) { return Renamer(f).rename(f); }

std::vector<std::string> all_variables(const Formula& f) {
  std::set<std::string> names;
  collect_variables(f, names);
  return {names.begin(), names.end()};
}

Formula parse_formula(std::string_view text) {
  return alpha_normalize(FormulaParser(text).parse());
}

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

}  // namespace revlang
