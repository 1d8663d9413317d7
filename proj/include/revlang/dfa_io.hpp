#pragma once

#include <string>
#include <string_view>

#include "revlang/dfa.hpp"

namespace revlang {

/// Reads the JSON DFA format
///   {"alphabet":"abc","states":N,"initial":i,"accepting":[...],
///    "transitions":[[from,"a",to],...]}
/// Missing transitions are completed to a fresh sink. Throws ParseError.
Dfa dfa_from_json(std::string_view text);

/// Writes the same format; transitions sorted by (from, letter order).
std::string dfa_to_json(const Dfa& dfa);

std::string dfa_to_dot(const Dfa& dfa);

/// Aligned state/transition table for terminal output.
std::string dfa_to_text(const Dfa& dfa);

}  // namespace revlang
