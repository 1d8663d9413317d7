#include "revlang/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "revlang/classify.hpp"
#include "revlang/constructions.hpp"
#include "revlang/dfa.hpp"
#include "revlang/dfa_io.hpp"
#include "revlang/error.hpp"
#include "revlang/evaluate.hpp"
#include "revlang/formula.hpp"
#include "revlang/ltt.hpp"
#include "revlang/profile_automaton.hpp"
#include "revlang/semigroup.hpp"
#include "revlang/syntactic.hpp"

namespace revlang {

namespace {

using json = nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct LanguageSource {
  std::string alphabet;
  std::string regex;
  std::string dfa_file;
};

void add_language(CLI::App* sub, LanguageSource& src) {
  sub->add_option("--alphabet", src.alphabet, "Alphabet letters in order, e.g. abc");
  sub->add_option("--regex", src.regex, "Regular expression (+ union, * star, _ empty word, # empty set)");
  sub->add_option("--dfa", src.dfa_file, "DFA file in JSON format");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dfa load_language(const LanguageSource& src) {
  const bool has_regex = !src.regex.empty();
  const bool has_dfa = !src.dfa_file.empty();
  if (has_regex == has_dfa) throw UsageError("give exactly one of --regex or --dfa");
  if (has_regex) {
    if (src.alphabet.empty()) throw UsageError("--regex needs --alphabet");
    return compile(src.regex, Alphabet(src.alphabet));
  }
  Dfa dfa = minimize(dfa_from_json(read_file(src.dfa_file)));
  if (!src.alphabet.empty() && !(Alphabet(src.alphabet) == dfa.alphabet())) {
    throw AlphabetError("--alphabet '" + src.alphabet + "' differs from the file's alphabet '" +
                        dfa.alphabet().letters() + "'");
  }
  return dfa;
}

/// "_" is accepted for the empty word on the command line.
Word word_arg(const std::string& s) { return s == "_" ? Word() : s; }

std::string show(const Word& w) { return w.empty() ? "ε" : w; }

LocalMode mode_arg(const std::string& m) { return m == "ltt" ? LocalMode::Ltt : LocalMode::Lrtt; }

Formula load_formula(const std::string& path) { return parse_formula(read_file(path)); }

void print_words(std::ostream& out, const std::vector<Word>& words, bool as_json) {
  if (as_json) {
    out << json(words).dump() << "\n";
    return;
  }
  for (const Word& w : words) out << show(w) << "\n";
}

void print_dfa(std::ostream& out, const Dfa& dfa, const std::string& format) {
  if (format == "json") {
    out << dfa_to_json(dfa) << "\n";
  } else if (format == "dot") {
    out << dfa_to_dot(dfa);
  } else {
    out << dfa_to_text(dfa);
  }
}

std::string union_text(const UnionVerdict& v) {
  switch (v.kind) {
    case UnionVerdict::Kind::Yes:
      return "yes";
    case UnionVerdict::Kind::No:
      return "no (" + show(v.witness->first) + " / " + show(v.witness->second) + ")";
    case UnionVerdict::Kind::Aborted:
      break;
  }
  return "aborted after " + std::to_string(v.states_explored) + " states";
}

json union_json(const UnionVerdict& v) {
  json j;
  j["verdict"] = v.kind == UnionVerdict::Kind::Yes  ? "yes"
                 : v.kind == UnionVerdict::Kind::No ? "no"
                                                    : "aborted";
  j["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
  j["states_explored"] = v.states_explored;
  return j;
}

void render_monoid(std::ostream& out, const Dfa& dfa, bool as_json) {
  const SyntacticData s = syntactic_monoid(dfa);
  const SyntacticSemigroup sg = syntactic_semigroup(s);
  const std::size_t n = s.size();
  const auto idem = idempotents(s.monoid);
  const bool aperiodic = is_aperiodic(s.monoid).aperiodic;
  const bool ltt_identity = check_ltt_identity(sg.semigroup).holds;
  std::optional<Involution> star;
  std::optional<bool> inv_identity;
  std::optional<bool> star_closed;
  if (is_reversible(dfa)) {
    star = involution_from_reverse(s, dfa);
    inv_identity = check_involution_identity(sg.semigroup, restrict_involution(sg, *star)).holds;
    star_closed = accepting_star_closed(s, *star);
  }

  if (as_json) {
    json j;
    j["elements"] = json::array();
    for (std::size_t m = 0; m < n; ++m) {
      j["elements"].push_back({{"id", m},
                               {"witness", s.witnesses[m]},
                               {"accepting", static_cast<bool>(s.accepting[m])},
                               {"in_semigroup", static_cast<bool>(s.in_semigroup[m])}});
    }
    json table = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) row.push_back(s.monoid.mult(a, b));
      table.push_back(row);
    }
    j["table"] = table;
    j["involution"] = star ? json(star->table()) : json(nullptr);
    j["idempotents"] = idem;
    j["aperiodic"] = aperiodic;
    j["ltt_identity"] = ltt_identity;
    j["involution_identity"] = inv_identity ? json(*inv_identity) : json(nullptr);
    j["accepting_star_closed"] = star_closed ? json(*star_closed) : json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }

  std::size_t wide = 1;
  for (const Word& w : s.witnesses) wide = std::max(wide, show(w).size());
  const int cell = static_cast<int>(std::to_string(n).size());
  out << "elements: " << n << "\n";
  for (std::size_t m = 0; m < n; ++m) {
    out << "  " << std::setw(cell) << m << "  " << std::left << std::setw(static_cast<int>(wide))
        << show(s.witnesses[m]) << std::right;
    if (s.accepting[m]) out << "  in P";
    if (!s.in_semigroup[m]) out << "  (monoid only)";
    out << "\n";
  }
  out << "multiplication:\n" << std::string(static_cast<std::size_t>(cell) + 4, ' ');
  for (std::size_t b = 0; b < n; ++b) out << std::setw(cell) << b << " ";
  out << "\n";
  for (std::size_t a = 0; a < n; ++a) {
    out << "  " << std::setw(cell) << a << "  ";
    for (std::size_t b = 0; b < n; ++b) out << std::setw(cell) << s.monoid.mult(a, b) << " ";
    out << "\n";
  }
  if (star) {
    out << "involution:";
    for (auto v : star->table()) out << " " << v;
    out << "\n";
  }
  out << "idempotents:";
  for (auto e : idem) out << " " << e;
  out << "\n";
  out << "aperiodic: " << (aperiodic ? "yes" : "no") << "\n";
  out << "ltt-identity: " << (ltt_identity ? "holds" : "fails") << "\n";
  out << "involution-identity: " << (inv_identity ? (*inv_identity ? "holds" : "fails") : "n/a")
      << "\n";
  out << "P star-closed: " << (star_closed ? (*star_closed ? "yes" : "no") : "n/a") << "\n";
}

void run_check(std::ostream& out, const std::string& property, const Dfa& dfa) {
  if (property == "reversible") {
    const auto w = distinguishing_word(dfa, reverse(dfa));
    out << "reversible: " << (w ? "no (witness " + show(*w) + ")" : "yes") << "\n";
    return;
  }
  const SyntacticData s = syntactic_monoid(dfa);
  if (property == "aperiodic") {
    const Aperiodicity ap = is_aperiodic(s.monoid);
    out << "aperiodic: " << (ap.aperiodic ? "yes" : "no (witness " + show(s.witnesses[*ap.witness]) + ")")
        << "\n";
    return;
  }
  const SyntacticSemigroup sg = syntactic_semigroup(s);
  if (property == "ltt-identity") {
    const LttIdentityCheck c = check_ltt_identity(sg.semigroup);
    out << "ltt-identity: ";
    if (c.holds) {
      out << "holds\n";
    } else {
      const auto& t = *c.counterexample;
      out << "fails (e=" << sg.witnesses[t[0]] << " f=" << sg.witnesses[t[1]]
          << " x=" << sg.witnesses[t[2]] << " y=" << sg.witnesses[t[3]]
          << " z=" << sg.witnesses[t[4]] << ")\n";
    }
    return;
  }
  if (!is_reversible(dfa)) {
    out << "inv-identity: n/a (not reversible)\n";
    return;
  }
  const Involution star = involution_from_reverse(s, dfa);
  const InvolutionIdentityCheck c = check_involution_identity(sg.semigroup, restrict_involution(sg, star));
  out << "inv-identity: ";
  if (c.holds) {
    out << "holds\n";
  } else {
    out << "fails (e=" << sg.witnesses[c.counterexample->first]
        << " x=" << sg.witnesses[c.counterexample->second] << ")\n";
  }
}

/// "x=3" binds a position, "X=1,2" (or "X=") a set.
Valuation parse_assignments(const std::vector<std::string>& items) {
  Valuation v;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad assignment '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (is_set_variable(name)) {
        std::set<int> members;
        std::stringstream ss(value);
        for (std::string part; std::getline(ss, part, ',');) {
          if (!part.empty()) members.insert(std::stoi(part));
        }
        v.sets[name] = std::move(members);
      } else {
        v.positions[name] = std::stoi(value);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad assignment '" + item + "'");
    }
  }
  return v;
}


}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Definability of reversal-closed regular languages", "revlang"};
  app.require_subcommand(1);

  LanguageSource lang;
  std::string format = "text";
  std::string dfa_format = "text";
  std::string mode = "lrtt";
  std::string side = "left";
  std::string property;
  std::string formula_file;
  std::string word;
  std::string u, v;
  std::string kind;
  std::vector<std::string> rest;
  std::vector<std::string> assignments;
  std::string w1, w2;
  int k = 2, t = 1, k_max = 3, t_max = 3;
  std::size_t maxlen = 6;
  std::size_t state_cap = UnionOptions{}.state_cap;
  std::size_t fo_cap = EvalLimits{}.fo_max_len;
  std::size_t mso_cap = EvalLimits{}.mso_max_len;
  const auto formats = CLI::IsMember({"text", "json"});
  const auto dfa_formats = CLI::IsMember({"text", "json", "dot"});
  const auto modes = CLI::IsMember({"ltt", "lrtt"});

  auto caps = [&](CLI::App* sub) {
    sub->add_option("--fo-cap", fo_cap, "Longest word for first-order evaluation");
    sub->add_option("--mso-cap", mso_cap, "Longest word for second-order evaluation");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Per-fragment definability report");
  add_language(classify_cmd, lang);
  classify_cmd->add_option("--k-max", k_max, "Largest window length searched")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--t-max", t_max, "Largest threshold searched")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--state-cap", state_cap, "Exploration cap per (k,t)");
  classify_cmd->add_option("--format", format)->check(formats);

  auto* check_cmd = app.add_subcommand("check", "Decide a single property");
  check_cmd->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"reversible", "aperiodic", "ltt-identity", "inv-identity"}));
  add_language(check_cmd, lang);

  auto* monoid_cmd = app.add_subcommand("monoid", "Syntactic monoid, involution and identity flags");
  add_language(monoid_cmd, lang);
  monoid_cmd->add_option("--format", format)->check(formats);

  auto* equiv_cmd = app.add_subcommand("equiv", "Are two words (k,t)-equivalent?");
  equiv_cmd->add_option("--mode", mode)->check(modes);
  equiv_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--t", t)->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--alphabet", lang.alphabet, "Validate the words against this alphabet");
  equiv_cmd->add_option("w1", w1)->required();
  equiv_cmd->add_option("w2", w2)->required();

  auto* profile_cmd = app.add_subcommand("profile", "Class data of a word");
  profile_cmd->add_option("--mode", mode)->check(modes);
  profile_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  profile_cmd->add_option("--t", t)->check(CLI::PositiveNumber);
  profile_cmd->add_option("--alphabet", lang.alphabet, "Validate the word against this alphabet");
  profile_cmd->add_option("w", w1)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a word");
  eval_cmd->add_option("--formula", formula_file, "S-expression file")->required();
  eval_cmd->add_option("--word", word, "Word (_ for the empty word)")->required();
  eval_cmd->add_option("--assign", assignments, "Free variables: x=3 or X=1,2");
  caps(eval_cmd);

  auto* lang_cmd = app.add_subcommand("lang", "Words up to a length satisfying a sentence");
  lang_cmd->add_option("--formula", formula_file, "S-expression file")->required();
  lang_cmd->add_option("--alphabet", lang.alphabet)->required();
  lang_cmd->add_option("--maxlen", maxlen)->required();
  lang_cmd->add_option("--format", format)->check(formats);
  caps(lang_cmd);

  auto* rel_cmd = app.add_subcommand("relativize", "Rewrite a sentence over < into one over bet/N");
  rel_cmd->add_option("--formula", formula_file, "S-expression file")->required();
  rel_cmd->add_option("--mode", mode, "mso or prenex")->check(CLI::IsMember({"mso", "prenex"}));

  auto* build_cmd = app.add_subcommand("build-formula", "Emit one of the constructed sentences");
  build_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"count", "word", "endpoints", "class", "subword", "n-from-bet", "bet-from-n"}));
  build_cmd->add_option("args", rest, "count V M | word V | endpoints X Y | class W | subword U");
  build_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  build_cmd->add_option("--t", t)->check(CLI::PositiveNumber);
  build_cmd->add_option("--alphabet", lang.alphabet, "Alphabet (class formulas)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Accepted words up to a length");
  add_language(enum_cmd, lang);
  enum_cmd->add_option("--maxlen", maxlen)->required();
  enum_cmd->add_option("--format", format)->check(formats);

  auto* quot_cmd = app.add_subcommand("quotient", "Left or right quotient by a word");
  add_language(quot_cmd, lang);
  quot_cmd->add_option("--word", word)->required();
  quot_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  quot_cmd->add_option("--format", dfa_format)->check(dfa_formats);

  auto* bq_cmd = app.add_subcommand("birquotient", "u^-1 L v^-1 union (v^r)^-1 L (u^r)^-1");
  add_language(bq_cmd, lang);
  bq_cmd->add_option("--u", u, "Left word (default empty)");
  bq_cmd->add_option("--v", v, "Right word (default empty)");
  bq_cmd->add_option("--format", dfa_format)->check(dfa_formats);

  auto* compile_cmd = app.add_subcommand("compile", "Minimal DFA of a language");
  add_language(compile_cmd, lang);
  compile_cmd->add_option("--format", dfa_format)->check(dfa_formats);

  auto* union_cmd = app.add_subcommand("union", "Is the language a union of (k,t) classes?");
  add_language(union_cmd, lang);
  union_cmd->add_option("--mode", mode)->check(modes);
  union_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  union_cmd->add_option("--t", t)->check(CLI::PositiveNumber);
  union_cmd->add_option("--state-cap", state_cap);
  union_cmd->add_option("--format", format)->check(formats);

  auto* search_cmd = app.add_subcommand("search", "Least (k,t) making the language a union of classes");
  add_language(search_cmd, lang);
  search_cmd->add_option("--mode", mode)->check(modes);
  search_cmd->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
  search_cmd->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
  search_cmd->add_option("--state-cap", state_cap);
  search_cmd->add_option("--format", format)->check(formats);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  const bool as_json = format == "json";
  const EvalLimits limits{fo_cap, mso_cap};
  const UnionOptions union_options{state_cap};

  try {
    if (classify_cmd->parsed()) {
      ClassifyOptions opts;
      opts.k_max = k_max;
      opts.t_max = t_max;
      opts.union_options = union_options;
      out << render_report(classify(load_language(lang), opts),
                           as_json ? ReportFormat::Json : ReportFormat::Text);
    } else if (check_cmd->parsed()) {
      run_check(out, property, load_language(lang));
    } else if (monoid_cmd->parsed()) {
      render_monoid(out, load_language(lang), as_json);
    } else if (equiv_cmd->parsed() || profile_cmd->parsed()) {
      const Word a = word_arg(w1);
      const Word b = word_arg(w2);
      if (!lang.alphabet.empty()) {
        Alphabet(lang.alphabet).validate(a);
        Alphabet(lang.alphabet).validate(b);
      }
      if (equiv_cmd->parsed()) {
        out << "equivalent: " << (local_equiv(a, b, k, t, mode_arg(mode)) ? "yes" : "no") << "\n";
      } else if (mode_arg(mode) == LocalMode::Ltt) {
        out << to_string(ltt_class(a, k, t)) << "\n";
      } else {
        out << to_string(lrtt_class(a, k, t)) << "\n";
      }
    } else if (eval_cmd->parsed()) {
      const Formula f = load_formula(formula_file);
      out << (evaluate(word_arg(word), f, parse_assignments(assignments), limits) ? "true" : "false")
          << "\n";
    } else if (lang_cmd->parsed()) {
      print_words(out, language_of(load_formula(formula_file), Alphabet(lang.alphabet), maxlen, limits),
                  as_json);
    } else if (rel_cmd->parsed()) {
      const auto m = mode == "prenex" ? RelativizeMode::Prenex : RelativizeMode::Mso;
      out << to_string(relativize(load_formula(formula_file), m)) << "\n";
    } else if (build_cmd->parsed()) {
      auto need = [&](std::size_t n) {
        if (rest.size() != n) {
          throw UsageError("build-formula " + kind + " takes " + std::to_string(n) + " argument(s)");
        }
      };
      Formula f = truth();
      if (kind == "count") {
        need(2);
        int m = 0;
        try {
          m = std::stoi(rest[1]);
        } catch (const std::logic_error&) {
          throw UsageError("count threshold must be a number");
        }
        f = build_count_formula(rest[0], m);
      } else if (kind == "word") {
        need(1);
        f = build_word_formula(rest[0]);
      } else if (kind == "endpoints") {
        need(2);
        f = build_endpoints_formula(rest[0], rest[1]);
      } else if (kind == "class") {
        need(1);
        if (lang.alphabet.empty()) throw UsageError("class formulas need --alphabet");
        f = build_lrtt_class_formula(word_arg(rest[0]), k, t, Alphabet(lang.alphabet));
      } else if (kind == "subword") {
        need(1);
        f = build_subword_formula(rest[0]);
      } else {
        need(0);
        f = expand_macro(kind == "n-from-bet" ? Macro::NFromBet : Macro::BetFromN);
      }
      out << to_string(f) << "\n";
    } else if (enum_cmd->parsed()) {
      print_words(out, enumerate(load_language(lang), maxlen), as_json);
    } else if (quot_cmd->parsed()) {
      print_dfa(out, quotient(load_language(lang), word_arg(word), side == "left" ? Side::Left : Side::Right),
                dfa_format);
    } else if (bq_cmd->parsed()) {
      print_dfa(out, bidirectional_quotient(load_language(lang), word_arg(u), word_arg(v)), dfa_format);
    } else if (compile_cmd->parsed()) {
      print_dfa(out, load_language(lang), dfa_format);
    } else if (union_cmd->parsed()) {
      const UnionVerdict verdict = is_union_of_classes(load_language(lang), k, t, mode_arg(mode), union_options);
      if (as_json) {
        out << union_json(verdict).dump(2) << "\n";
      } else {
        out << "union of classes: " << union_text(verdict) << "\n";
      }
      if (verdict.kind == UnionVerdict::Kind::Aborted) return 3;
    } else if (search_cmd->parsed()) {
      const ParamSearch s = search_params(load_language(lang), k_max, t_max, mode_arg(mode), union_options);
      const char* outcome = s.outcome == ParamSearch::Outcome::Found  ? "found"
                            : s.outcome == ParamSearch::Outcome::None ? "none"
                                                                      : "aborted";
      if (as_json) {
        json j;
        j["outcome"] = outcome;
        j["params"] = s.outcome == ParamSearch::Outcome::Found ? json::array({s.k, s.t}) : json(nullptr);
        j["trace"] = json::array();
        for (const auto& step : s.trace) {
          json e = union_json(step.verdict);
          e["k"] = step.k;
          e["t"] = step.t;
          j["trace"].push_back(e);
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& step : s.trace) {
          out << "k=" << step.k << " t=" << step.t << ": " << union_text(step.verdict) << "\n";
        }
        out << "search: " << outcome;
        if (s.outcome == ParamSearch::Outcome::Found) out << " (k=" << s.k << ", t=" << s.t << ")";
        out << "\n";
      }
      if (s.outcome == ParamSearch::Outcome::Aborted) return 3;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace revlang
