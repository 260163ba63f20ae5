#pragma once

#include <string>
#include <string_view>

#include "ftopsis/problem.hpp"

namespace ftopsis {

/**
 * Parse a UTF-8 problem document (JSON, schemaVersion "1").
 *
 * Omitted scales default to the five-term 1..9 scales. Errors:
 *   ParseError         malformed JSON, with line and column
 *   ValidationError    schema violations, empty rosters, duplicate ids
 *   ReferenceError     a weight or rating naming an unknown id or term
 *   CompletenessError  every missing (dm, alternative, criterion) cell
 */
DecisionProblem parse_problem(std::string_view text);

/// Pretty-printed document; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const DecisionProblem& problem);

/// Read a whole file. Throws std::system_error (ENOENT etc.) when unreadable.
std::string read_file(const std::string& path);

}  // namespace ftopsis
