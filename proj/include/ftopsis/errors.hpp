#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftopsis {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid problem: empty rosters, duplicate ids, malformed scales or fuzzy numbers.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A reference that does not resolve (unknown decision maker, alternative, criterion or term).
class ReferenceError : public ValidationError {
 public:
  ReferenceError(const std::string& message, std::string reference);

  const std::string& reference() const noexcept { return reference_; }

 private:
  std::string reference_;
};

class UnknownTermError : public ReferenceError {
 public:
  /// context, when given, names where the code appeared (e.g. "rating DM1/A1/C1").
  UnknownTermError(const std::string& code, std::vector<std::string> valid_codes, const std::string& context = {});

  const std::string& code() const noexcept { return reference(); }
  const std::vector<std::string>& valid_codes() const noexcept { return valid_codes_; }

 private:
  std::vector<std::string> valid_codes_;
};

/// One hole in the ratings or weights map. A weight cell has no alternative.
struct MissingCell {
  std::string decision_maker;
  std::optional<std::string> alternative;
  std::string criterion;

  std::string describe() const;
  friend bool operator==(const MissingCell&, const MissingCell&) = default;
};

class CompletenessError : public ValidationError {
 public:
  explicit CompletenessError(std::vector<MissingCell> missing);

  const std::vector<MissingCell>& missing() const noexcept { return missing_; }

 private:
  std::vector<MissingCell> missing_;
};

/// Arithmetic outside the method's domain, e.g. a zero component in a cost column.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message, std::string alternative = {}, std::string criterion = {});

  const std::string& alternative() const noexcept { return alternative_; }
  const std::string& criterion() const noexcept { return criterion_; }

 private:
  std::string alternative_;
  std::string criterion_;
};

}  // namespace ftopsis
