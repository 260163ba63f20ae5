#include "ftopsis/errors.hpp"

#include <utility>

namespace ftopsis {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe_all(const std::vector<MissingCell>& missing) {
  std::vector<std::string> parts;
  parts.reserve(missing.size());
  for (const auto& cell : missing) parts.push_back(cell.describe());
  return "incomplete assessments, missing " + std::to_string(missing.size()) + " cell(s): " + join(parts, "; ");
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ReferenceError::ReferenceError(const std::string& message, std::string reference)
    : ValidationError(message), reference_(std::move(reference)) {}

UnknownTermError::UnknownTermError(const std::string& code, std::vector<std::string> valid_codes,
                                   const std::string& context)
    : ReferenceError("unknown term '" + code + "'" + (context.empty() ? "" : " in " + context) +
                         " (valid terms: " + join(valid_codes, ", ") + ")",
                     code),
      valid_codes_(std::move(valid_codes)) {}

std::string MissingCell::describe() const {
  if (alternative) return "rating " + decision_maker + "/" + *alternative + "/" + criterion;
  return "weight " + decision_maker + "/" + criterion;
}

CompletenessError::CompletenessError(std::vector<MissingCell> missing)
    : ValidationError(describe_all(missing)), missing_(std::move(missing)) {}

DomainError::DomainError(const std::string& message, std::string alternative, std::string criterion)
    : Error(message), alternative_(std::move(alternative)), criterion_(std::move(criterion)) {}

}  // namespace ftopsis
