#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "revlang/dfa.hpp"
#include "revlang/profile_automaton.hpp"

namespace revlang {

/// Caveat attached to Unknown FO(N) verdicts: the identity conditions are
/// necessary, but nobody knows whether they suffice.
inline constexpr std::string_view kConverseOpen = "converse direction open";

struct FoNVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<std::pair<int, int>> params;  ///< on Yes
  /// On No: not-reversible | not-ltt | involution-identity-fails.
  /// On Unknown: kConverseOpen.
  std::string reason;

  friend bool operator==(const FoNVerdict&, const FoNVerdict&) = default;
};

struct ClassificationReport {
  bool reversible = false;
  bool mso_bet = false;  ///< = reversible
  bool fo_bet = false;   ///< = reversible and aperiodic
  bool aperiodic = false;
  bool ltt_definable = false;
  std::optional<std::pair<int, int>> ltt_params;
  FoNVerdict fo_n;
  std::size_t monoid_size = 0;
  std::map<std::string, std::string> evidence;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
  int k_max = 3;
  int t_max = 3;
  UnionOptions union_options;
  std::size_t element_cap = 100'000;
};

ClassificationReport classify(const Dfa& a, const ClassifyOptions& options = {});

enum class ReportFormat { Text, Json };

std::string render_report(const ClassificationReport& r, ReportFormat format);

/// Inverse of the JSON rendering. Throws ParseError.
ClassificationReport report_from_json(std::string_view text);

}  // namespace revlang
