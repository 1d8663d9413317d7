#include "revlang/dfa_io.hpp"

#include <sstream>

#include <json.hpp>

#include "revlang/error.hpp"

namespace revlang {

using json = nlohmann::json;

Dfa dfa_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid DFA JSON: ") + e.what(), e.byte);
  }
  try {
    Alphabet alphabet(doc.at("alphabet").get<std::string>());
    const auto n = doc.at("states").get<std::size_t>();
    const auto initial = doc.at("initial").get<Dfa::State>();
    const auto accepting = doc.at("accepting").get<std::vector<Dfa::State>>();
    std::vector<std::tuple<Dfa::State, char, Dfa::State>> transitions;
    for (const auto& t : doc.at("transitions")) {
      if (!t.is_array() || t.size() != 3) {
        throw ParseError("each transition must be [from, \"letter\", to]");
      }
      const auto letter = t[1].get<std::string>();
      if (letter.size() != 1) {
        throw ParseError("transition letter must be a single character");
      }
      transitions.emplace_back(t[0].get<Dfa::State>(), letter[0],
                               t[2].get<Dfa::State>());
    }
    return Dfa::from_transitions(std::move(alphabet), n, initial, accepting,
                                 transitions);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid DFA JSON: ") + e.what());
  }
}

std::string dfa_to_json(const Dfa& dfa) {
  json doc;
  doc["alphabet"] = dfa.alphabet().letters();
  doc["states"] = dfa.num_states();
  doc["initial"] = dfa.initial();
  json accepting = json::array();
  json transitions = json::array();
  for (Dfa::State q = 0; q < dfa.num_states(); ++q) {
    if (dfa.is_accepting(q)) accepting.push_back(q);
    for (std::size_t c = 0; c < dfa.alphabet().size(); ++c) {
      transitions.push_back(
          json::array({q, std::string(1, dfa.alphabet()[c]), dfa.next(q, c)}));
    }
  }
  doc["accepting"] = std::move(accepting);
  doc["transitions"] = std::move(transitions);
  return doc.dump();
}

std::string dfa_to_dot(const Dfa& dfa) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (Dfa::State q = 0; q < dfa.num_states(); ++q) {
    os << "  " << q << " [shape=" << (dfa.is_accepting(q) ? "doublecircle" : "circle")
       << "];\n";
  }
  os << "  start -> " << dfa.initial() << ";\n";
  for (Dfa::State q = 0; q < dfa.num_states(); ++q) {
    for (std::size_t c = 0; c < dfa.alphabet().size(); ++c) {
      os << "  " << q << " -> " << dfa.next(q, c) << " [label=\""
         << dfa.alphabet()[c] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string dfa_to_text(const Dfa& dfa) {
  std::ostringstream os;
  os << "states: " << dfa.num_states() << "\n";
  os << "       ";
  for (char c : dfa.alphabet().letters()) os << ' ' << std::string(5, ' ') << c;
  os << '\n';
  for (Dfa::State q = 0; q < dfa.num_states(); ++q) {
    std::string tag;
    tag += q == dfa.initial() ? '>' : ' ';
    tag += dfa.is_accepting(q) ? '*' : ' ';
    std::string id = std::to_string(q);
    os << tag << std::string(5 - std::min<std::size_t>(5, id.size()), ' ') << id;
    for (std::size_t c = 0; c < dfa.alphabet().size(); ++c) {
      std::string t = std::to_string(dfa.next(q, c));
      os << ' ' << std::string(6 - std::min<std::size_t>(6, t.size()), ' ') << t;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace revlang
