#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ftopsis/engine.hpp"
#include "ftopsis/problem.hpp"

// JSON mapping for problems, assessments and traces. Schema errors throw
// ValidationError with a JSON-path style prefix such as "criteria[1].sense".

namespace ftopsis::json {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

Json to_json(const Tfn& t);
Tfn tfn_from_json(const Json& value, const std::string& path);

Json assessment_to_json(const Assessment& assessment);
/// A term code string or a [lower, modal, upper] array.
Assessment assessment_from_json(const Json& value, const std::string& path);

Json scale_to_json(const LinguisticScale& scale);
LinguisticScale scale_from_json(const Json& value, ScaleRole role, const std::string& path);

/// criteria, alternatives, decisionMakers, plus scales when they differ from the defaults.
Json structure_to_json(const ProblemStructure& structure);
ProblemStructure structure_from_json(const Json& doc);

/// Upsert {"criterion": value} weights and {"alternative": {"criterion": value}} ratings for one decision maker.
void apply_decision_maker_assessments(ProblemDraft& draft, std::string_view dm, const Json& payload,
                                      const std::string& path);

/// Structure plus whatever "weights" and "ratings" the document carries.
ProblemDraft draft_from_json(const Json& doc);

Json problem_to_json(const DecisionProblem& problem);
/// Requires a complete document (CompletenessError otherwise).
DecisionProblem problem_from_json(const Json& doc);

Json missing_to_json(const std::vector<MissingCell>& missing);

/// Full trace at full precision; trace_from_json(trace_to_json(t)) == t.
Json trace_to_json(const EvaluationTrace& trace);
EvaluationTrace trace_from_json(const Json& doc);

/// Ranking and closeness table only.
Json summary_to_json(const EvaluationTrace& trace);

}  // namespace ftopsis::json
