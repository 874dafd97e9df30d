#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpod/equivalence.hpp"
#include "lpod/fuzz.hpp"
#include "lpod/interpretation.hpp"
#include "lpod/reductions.hpp"
#include "lpod/semantics.hpp"

namespace lpod::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "lpod-lab/1";

enum class Format { text, structured };

/// Interpretations serialize as sorted [atom, value] pairs with the values
/// spelled "F", "F*", "T*", "T"; programs embed as source text.
Json to_json(const Interpretation& interp);
Json to_json(const AnswerSet& answer_set);
Json to_json(const EquivalenceVerdict& verdict);
Json to_json(const ReductionOutput& reduction);
Json to_json(const ReductionCheck& check);
Json to_json(const CampaignReport& report);

std::string render_interpretation(const Interpretation& interp);

/// Wraps a payload into a schema-tagged document, `kind` naming the payload.
Json document(std::string_view kind, Json payload);

std::string models_report(const std::vector<Interpretation>& models, Format format);
std::string answer_sets_report(const std::vector<AnswerSet>& sets,
                               std::string_view kind, Format format);
std::string stable_models_report(const std::vector<std::set<std::string>>& models,
                                 Format format);
std::string verdict_report(const EquivalenceVerdict& verdict, Format format);
std::string reduction_report(const ReductionOutput& reduction, Format format);
std::string reduction_check_report(const std::vector<ReductionCheck>& checks,
                                   Format format);
std::string campaign_report(const CampaignReport& report, Format format);

}  // namespace lpod::report
