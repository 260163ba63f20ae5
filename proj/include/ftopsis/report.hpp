#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ftopsis/engine.hpp"

namespace ftopsis {

enum class ReportFormat { Table, Csv, Structured };

struct ReportOptions {
  ReportFormat format = ReportFormat::Table;
  /// Decimal places for table and CSV output. Structured output is always full precision.
  int precision = 3;
  /// Include every intermediate stage, not just the closeness table and ranking.
  bool full = false;
};

/**
 * Render a trace deterministically.
 *
 * Table: pipe-separated sections in pipeline order (aggregated weights,
 * aggregate matrix, normalized, weighted, ideals, distances, closeness,
 * ranking). Matrix sections list criteria as rows and alternatives as columns.
 * Csv: the closeness table (rank, alternative, d*, d-, closeness).
 * Structured: JSON; the full trace when options.full, else the summary.
 */
std::string render_report(const EvaluationTrace& trace, const ReportOptions& options = {});

/// One (file name, CSV body) pair per pipeline stage, in pipeline order.
std::vector<std::pair<std::string, std::string>> render_stage_csvs(const EvaluationTrace& trace, int precision = 3);

/// RFC 4180 field quoting: quote when the field holds a comma, quote, CR or LF.
std::string csv_field(const std::string& field);

/// Fixed-point formatting used by every text report.
std::string format_fixed(double value, int precision);

}  // namespace ftopsis
