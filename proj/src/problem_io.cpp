#include "ftopsis/problem_io.hpp"

#include <cerrno>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ftopsis/errors.hpp"
#include "ftopsis/json_codec.hpp"

namespace ftopsis {

namespace {

// nlohmann reports a 1-based byte offset; translate it to line and column.
std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

DecisionProblem parse_problem(std::string_view text) {
  json::Json doc;
  try {
    doc = json::Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    std::string message = e.what();
    // Strip nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
    if (auto pos = message.find(": "); pos != std::string::npos) message = message.substr(pos + 2);
    throw ParseError(message, line, column);
  }
  return json::problem_from_json(doc);
}

std::string serialize_problem(const DecisionProblem& problem) { return json::problem_to_json(problem).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno ? errno : ENOENT, std::generic_category(), path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ftopsis
