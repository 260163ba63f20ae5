#include "ftopsis/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <system_error>

#include "CLI11.hpp"

#include "ftopsis/engine.hpp"
#include "ftopsis/errors.hpp"
#include "ftopsis/http_service.hpp"
#include "ftopsis/problem_io.hpp"
#include "ftopsis/report.hpp"
#include "ftopsis/sensitivity.hpp"

namespace ftopsis::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "table";
  int precision = 3;
  std::string output;
  std::vector<std::string> perturbations;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string state;
  std::string static_dir;
};

ReportFormat report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Structured;
  return ReportFormat::Table;
}

DecisionProblem load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::system_error& e) {
    if (e.code() == std::errc::no_such_file_or_directory) {
      throw std::system_error(e.code(), "file not found: " + path);
    }
    throw std::system_error(e.code(), "cannot read " + path);
  }
  return parse_problem(text);
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw std::system_error(std::make_error_code(std::errc::io_error), "cannot write " + path.string());
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const auto trace = evaluate(load(o.input));
  out << render_report(trace, {report_format(o.format), o.precision, false});
  return kOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const auto trace = evaluate(load(o.input));
  const auto format = report_format(o.format);
  if (format == ReportFormat::Csv) {
    std::filesystem::create_directories(o.output);
    for (const auto& [name, body] : render_stage_csvs(trace, o.precision)) {
      write_file(std::filesystem::path(o.output) / name, body);
      out << (std::filesystem::path(o.output) / name).string() << '\n';
    }
    return kOk;
  }
  const auto report = render_report(trace, {format, o.precision, true});
  if (o.output.empty()) {
    out << report;
    return kOk;
  }
  std::filesystem::create_directories(o.output);
  const auto path = std::filesystem::path(o.output) / (format == ReportFormat::Structured ? "trace.json" : "trace.txt");
  write_file(path, report);
  out << path.string() << '\n';
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto problem = load(o.input);
  out << "valid: " << problem.alternative_count() << " alternatives, " << problem.criterion_count() << " criteria, "
      << problem.decision_maker_count() << " decision makers\n";
  return kOk;
}

int cmd_sensitivity(const Options& o, std::ostream& out) {
  const auto problem = load(o.input);
  std::vector<PerturbationSpec> specs;
  for (const auto& text : o.perturbations) specs.push_back(parse_perturbation(text));
  out << sensitivity_csv(run_sensitivity(problem, specs), o.precision);
  return kOk;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<std::filesystem::path> state;
  if (!o.state.empty()) state = o.state;
  std::optional<std::filesystem::path> static_dir;
  if (!o.static_dir.empty()) static_dir = o.static_dir;

  service::SessionStore store(state);
  service::HttpService http(store, static_dir);
  out << "serving on http://" << o.host << ':' << o.port << " (" << store.size() << " session(s) restored)"
      << std::endl;
  if (!http.listen(o.host, o.port)) {
    err << "error: cannot listen on " << o.host << ':' << o.port << '\n';
    return kIoError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy TOPSIS group decision engine", "ftopsis"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Problem JSON file")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json", "structured"}))
        ->transform([](std::string v) { return v == "structured" ? std::string("json") : v; });
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Decimal places in table and CSV output")->check(CLI::Range(0, 17));
  };

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Rank the alternatives of a problem file");
  add_input(evaluate_cmd);
  add_format(evaluate_cmd);
  add_precision(evaluate_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "Print every intermediate table");
  add_input(trace_cmd);
  add_format(trace_cmd);
  add_precision(trace_cmd);
  trace_cmd->add_option("--output", o.output, "Directory for the report (one CSV per stage with --format csv)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a problem file without evaluating it");
  add_input(validate_cmd);

  auto* sensitivity_cmd = app.add_subcommand("sensitivity", "Closeness coefficients under perturbations, as CSV");
  add_input(sensitivity_cmd);
  add_precision(sensitivity_cmd);
  sensitivity_cmd->add_option("--perturb", o.perturbations,
                              "weight:DM:C | rating:DM:A:C | factor:ROLE:X | shift:ROLE:X (repeatable)");

  auto* serve_cmd = app.add_subcommand("serve", "Run the decision session HTTP service");
  serve_cmd->add_option("--host", o.host, "Listen address");
  serve_cmd->add_option("--port", o.port, "Listen port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--state", o.state, "Directory for per-session event logs");
  serve_cmd->add_option("--static", o.static_dir, "Directory with the workbench UI assets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (trace_cmd->parsed() && o.format == "csv" && o.output.empty()) {
      throw CLI::ValidationError("--output", "trace --format csv needs --output DIR");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (evaluate_cmd->parsed()) return cmd_evaluate(o, out);
    if (trace_cmd->parsed()) return cmd_trace(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (sensitivity_cmd->parsed()) return cmd_sensitivity(o, out);
    if (serve_cmd->parsed()) return cmd_serve(o, out, err);
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsage;
}

}  // namespace ftopsis::cli
