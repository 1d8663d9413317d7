#include "revlang/classify.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "revlang/error.hpp"
#include "revlang/semigroup.hpp"
#include "revlang/syntactic.hpp"

namespace revlang {

namespace {

using json = nlohmann::json;

std::string show(const Word& w) { return w.empty() ? "ε" : w; }

std::string params_text(const std::pair<int, int>& p) {
  return "k=" + std::to_string(p.first) + ", t=" + std::to_string(p.second);
}

std::string search_summary(const ParamSearch& s, int k_max, int t_max) {
  switch (s.outcome) {
    case ParamSearch::Outcome::Found:
      return "found " + params_text({s.k, s.t});
    case ParamSearch::Outcome::Aborted:
      return "aborted within k<=" + std::to_string(k_max) + ", t<=" + std::to_string(t_max);
    case ParamSearch::Outcome::None:
      break;
  }
  std::string out = "none within k<=" + std::to_string(k_max) + ", t<=" + std::to_string(t_max);
  const auto& last = s.trace.back().verdict;
  if (last.witness) {
    out += "; last split " + show(last.witness->first) + " / " + show(last.witness->second);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json params_json(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

std::optional<std::pair<int, int>> params_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return std::make_pair(j.at(0).get<int>(), j.at(1).get<int>());
}

}  // namespace

ClassificationReport classify(const Dfa& a, const ClassifyOptions& options) {
  if (options.k_max < 1 || options.t_max < 1) {
    throw std::invalid_argument("search bounds must be at least 1");
  }
  ClassificationReport r;
  const Dfa dfa = a.is_minimal() ? a : minimize(a);

  r.reversible = is_reversible(dfa);
  if (!r.reversible) {
    r.evidence["reversal_witness"] = show(*distinguishing_word(dfa, reverse(dfa)));
  }
  r.mso_bet = r.reversible;

  const SyntacticData s = syntactic_monoid(dfa, options.element_cap);
  r.monoid_size = s.size();
  const Aperiodicity ap = is_aperiodic(s.monoid);
  r.aperiodic = ap.aperiodic;
  if (ap.witness) r.evidence["aperiodicity_witness"] = show(s.witnesses[*ap.witness]);
  r.fo_bet = r.reversible && r.aperiodic;

  const SyntacticSemigroup sg = syntactic_semigroup(s);
  const LttIdentityCheck ltt = check_ltt_identity(sg.semigroup);
  if (ltt.counterexample) {
    const auto& c = *ltt.counterexample;
    r.evidence["ltt_identity_counterexample"] =
        "e=" + sg.witnesses[c[0]] + " f=" + sg.witnesses[c[1]] + " x=" + sg.witnesses[c[2]] +
        " y=" + sg.witnesses[c[3]] + " z=" + sg.witnesses[c[4]];
  }
  r.ltt_definable = r.aperiodic && ltt.holds;
  if (r.ltt_definable) {
    const ParamSearch search =
        search_params(dfa, options.k_max, options.t_max, LocalMode::Ltt, options.union_options);
    r.evidence["ltt_search"] = search_summary(search, options.k_max, options.t_max);
    if (search.outcome == ParamSearch::Outcome::Found) r.ltt_params = std::make_pair(search.k, search.t);
  }

  std::optional<InvolutionIdentityCheck> inv_check;
  if (r.reversible) {
    const Involution star = involution_from_reverse(s, dfa);
    r.evidence["accepting_star_closed"] = yes_no(accepting_star_closed(s, star));
    inv_check = check_involution_identity(sg.semigroup, restrict_involution(sg, star));
    if (inv_check->counterexample) {
      const auto [e, x] = *inv_check->counterexample;
      r.evidence["involution_identity_counterexample"] =
          "e=" + sg.witnesses[e] + " x=" + sg.witnesses[x];
    }
  }

  if (!r.reversible) {
    r.fo_n = {FoNVerdict::Kind::No, std::nullopt, "not-reversible"};
  } else if (!r.ltt_definable) {
    r.fo_n = {FoNVerdict::Kind::No, std::nullopt, "not-ltt"};
  } else if (!inv_check->holds) {
    r.fo_n = {FoNVerdict::Kind::No, std::nullopt, "involution-identity-fails"};
  } else {
    const ParamSearch search =
        search_params(dfa, options.k_max, options.t_max, LocalMode::Lrtt, options.union_options);
    r.evidence["lrtt_search"] = search_summary(search, options.k_max, options.t_max);
    if (search.outcome == ParamSearch::Outcome::Found) {
      r.fo_n = {FoNVerdict::Kind::Yes, std::make_pair(search.k, search.t), ""};
    } else {
      r.fo_n = {FoNVerdict::Kind::Unknown, std::nullopt, std::string(kConverseOpen)};
    }
  }
  return r;
}

std::string render_report(const ClassificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json j;
    j["reversible"] = r.reversible;
    j["mso_bet"] = r.mso_bet;
    j["fo_bet"] = r.fo_bet;
    j["aperiodic"] = r.aperiodic;
    j["ltt"] = {{"definable", r.ltt_definable}, {"params", params_json(r.ltt_params)}};
    const char* verdict = r.fo_n.kind == FoNVerdict::Kind::Yes  ? "yes"
                          : r.fo_n.kind == FoNVerdict::Kind::No ? "no"
                                                                : "unknown";
    j["fo_n"] = {{"verdict", verdict},
                 {"params", params_json(r.fo_n.params)},
                 {"reason", r.fo_n.reason.empty() ? json(nullptr) : json(r.fo_n.reason)}};
    j["monoid_size"] = r.monoid_size;
    j["evidence"] = r.evidence;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "reversible: " << yes_no(r.reversible) << "\n";
  out << "mso(bet) = mso(N): " << yes_no(r.mso_bet) << "\n";
  out << "fo(bet): " << yes_no(r.fo_bet) << "\n";
  out << "aperiodic: " << yes_no(r.aperiodic) << "\n";
  out << "ltt = fo(+1): " << yes_no(r.ltt_definable);
  if (r.ltt_params) out << " (" << params_text(*r.ltt_params) << ")";
  out << "\n";
  out << "fo(N): ";
  switch (r.fo_n.kind) {
    case FoNVerdict::Kind::Yes:
      out << "yes (" << params_text(*r.fo_n.params) << ")";
      break;
    case FoNVerdict::Kind::No:
      out << "no (" << r.fo_n.reason << ")";
      break;
    case FoNVerdict::Kind::Unknown:
      out << "unknown (" << r.fo_n.reason << ")";
      break;
  }
  out << "\n";
  out << "monoid size: " << r.monoid_size << "\n";
  if (!r.evidence.empty()) {
    out << "evidence:\n";
    for (const auto& [key, value] : r.evidence) out << "  " << key << ": " << value << "\n";
  }
  return out.str();
}

ClassificationReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ClassificationReport r;
    r.reversible = j.at("reversible").get<bool>();
    r.mso_bet = j.at("mso_bet").get<bool>();
    r.fo_bet = j.at("fo_bet").get<bool>();
    r.aperiodic = j.at("aperiodic").get<bool>();
    r.ltt_definable = j.at("ltt").at("definable").get<bool>();
    r.ltt_params = params_from(j.at("ltt").at("params"));
    const auto& fo = j.at("fo_n");
    const auto verdict = fo.at("verdict").get<std::string>();
    if (verdict == "yes") {
      r.fo_n.kind = FoNVerdict::Kind::Yes;
    } else if (verdict == "no") {
      r.fo_n.kind = FoNVerdict::Kind::No;
    } else if (verdict == "unknown") {
      r.fo_n.kind = FoNVerdict::Kind::Unknown;
    } else {
      throw ParseError("unknown fo_n verdict '" + verdict + "'");
    }
    r.fo_n.params = params_from(fo.at("params"));
    if (!fo.at("reason").is_null()) r.fo_n.reason = fo.at("reason").get<std::string>();
    r.monoid_size = j.at("monoid_size").get<std::size_t>();
    r.evidence = j.at("evidence").get<std::map<std::string, std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace revlang
