#include "ftopsis/report.hpp"

#include <iomanip>
#include <sstream>

#include "ftopsis/json_codec.hpp"

namespace ftopsis {

namespace {

std::string format_tfn(const Tfn& t, int precision) {
  return "(" + format_fixed(t.lower(), precision) + ", " + format_fixed(t.modal(), precision) + ", " +
         format_fixed(t.upper(), precision) + ")";
}

void matrix_section(std::ostringstream& os, const char* title, const EvaluationTrace& trace, const FuzzyMatrix& matrix,
                    int precision) {
  os << "== " << title << " ==\n";
  os << "Criteria";
  for (const auto& a : trace.alternatives) os << " | " << a.id;
  os << '\n';
  for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
    os << trace.criteria[j].id;
    for (std::size_t i = 0; i < trace.alternatives.size(); ++i) os << " | " << format_tfn(matrix(i, j), precision);
    os << '\n';
  }
  os << '\n';
}

void closeness_section(std::ostringstream& os, const EvaluationTrace& trace, int precision) {
  os << "== Closeness coefficients ==\n";
  os << "Rank | Alternative | d* | d- | CC\n";
  for (std::size_t r = 0; r < trace.ranking.size(); ++r) {
    const std::size_t i = trace.ranking[r];
    os << (r + 1) << " | " << trace.alternatives[i].id << " | " << format_fixed(trace.d_star[i], precision) << " | "
       << format_fixed(trace.d_minus[i], precision) << " | " << format_fixed(trace.closeness[i], precision) << '\n';
  }
  os << '\n';
  os << "Ranking: ";
  const auto ids = trace.ranked_ids();
  for (std::size_t r = 0; r < ids.size(); ++r) os << (r == 0 ? "" : " > ") << ids[r];
  os << '\n';
  for (const auto& w : trace.warnings) os << "Warning: " << w << '\n';
}

std::string render_table(const EvaluationTrace& trace, int precision, bool full) {
  std::ostringstream os;
  if (full) {
    os << "== Aggregated criterion weights ==\n";
    os << "Criteria | Sense | Weight\n";
    for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
      os << trace.criteria[j].id << " | " << to_string(trace.criteria[j].sense) << " | "
         << format_tfn(trace.aggregate_weights[j], precision) << '\n';
    }
    os << '\n';
    matrix_section(os, "Aggregate fuzzy decision matrix", trace, trace.aggregate_ratings, precision);
    matrix_section(os, "Normalized fuzzy decision matrix", trace, trace.normalized, precision);
    matrix_section(os, "Weighted normalized fuzzy decision matrix", trace, trace.weighted, precision);

    os << "== Ideal solutions ==\n";
    os << "Criteria | FPIS | FNIS\n";
    for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
      os << trace.criteria[j].id << " | " << format_fixed(trace.ideals.fpis[j].upper(), precision) << " | "
         << format_fixed(trace.ideals.fnis[j].lower(), precision) << '\n';
    }
    os << '\n';

    os << "== Distances from FPIS and FNIS ==\n";
    os << "Criteria";
    for (const auto& a : trace.alternatives) os << " | FPIS(" << a.id << ")";
    for (const auto& a : trace.alternatives) os << " | FNIS(" << a.id << ")";
    os << '\n';
    for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
      os << trace.criteria[j].id;
      for (std::size_t i = 0; i < trace.alternatives.size(); ++i) {
        os << " | " << format_fixed(trace.distances(i, j).to_fpis, precision);
      }
      for (std::size_t i = 0; i < trace.alternatives.size(); ++i) {
        os << " | " << format_fixed(trace.distances(i, j).to_fnis, precision);
      }
      os << '\n';
    }
    os << '\n';
  }
  closeness_section(os, trace, precision);
  return os.str();
}

std::string closeness_csv(const EvaluationTrace& trace, int precision) {
  std::ostringstream os;
  os << "rank,alternative,d_star,d_minus,closeness\r\n";
  for (std::size_t r = 0; r < trace.ranking.size(); ++r) {
    const std::size_t i = trace.ranking[r];
    os << (r + 1) << ',' << csv_field(trace.alternatives[i].id) << ',' << format_fixed(trace.d_star[i], precision)
       << ',' << format_fixed(trace.d_minus[i], precision) << ',' << format_fixed(trace.closeness[i], precision)
       << "\r\n";
  }
  return os.str();
}

std::string matrix_csv(const EvaluationTrace& trace, const FuzzyMatrix& matrix, int precision) {
  std::ostringstream os;
  os << "alternative,criterion,lower,modal,upper\r\n";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const auto& t = matrix(i, j);
      os << csv_field(trace.alternatives[i].id) << ',' << csv_field(trace.criteria[j].id) << ','
         << format_fixed(t.lower(), precision) << ',' << format_fixed(t.modal(), precision) << ','
         << format_fixed(t.upper(), precision) << "\r\n";
    }
  }
  return os.str();
}

}  // namespace

std::string format_fixed(double value, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << value;
  std::string out = os.str();
  // Values that round to zero print without a sign.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_report(const EvaluationTrace& trace, const ReportOptions& options) {
  switch (options.format) {
    case ReportFormat::Table:
      return render_table(trace, options.precision, options.full);
    case ReportFormat::Csv:
      return closeness_csv(trace, options.precision);
    case ReportFormat::Structured: {
      const auto doc = options.full ? json::trace_to_json(trace) : json::summary_to_json(trace);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> render_stage_csvs(const EvaluationTrace& trace, int precision) {
  std::vector<std::pair<std::string, std::string>> files;

  std::ostringstream weights;
  weights << "criterion,sense,lower,modal,upper\r\n";
  for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
    const auto& w = trace.aggregate_weights[j];
    weights << csv_field(trace.criteria[j].id) << ',' << to_string(trace.criteria[j].sense) << ','
            << format_fixed(w.lower(), precision) << ',' << format_fixed(w.modal(), precision) << ','
            << format_fixed(w.upper(), precision) << "\r\n";
  }
  files.emplace_back("01_aggregate_weights.csv", weights.str());
  files.emplace_back("02_aggregate_ratings.csv", matrix_csv(trace, trace.aggregate_ratings, precision));
  files.emplace_back("03_normalized.csv", matrix_csv(trace, trace.normalized, precision));
  files.emplace_back("04_weighted.csv", matrix_csv(trace, trace.weighted, precision));

  std::ostringstream ideals;
  ideals << "criterion,fpis,fnis\r\n";
  for (std::size_t j = 0; j < trace.criteria.size(); ++j) {
    ideals << csv_field(trace.criteria[j].id) << ',' << format_fixed(trace.ideals.fpis[j].upper(), precision) << ','
           << format_fixed(trace.ideals.fnis[j].lower(), precision) << "\r\n";
  }
  files.emplace_back("05_ideals.csv", ideals.str());

  std::ostringstream distances;
  distances << "alternative,criterion,to_fpis,to_fnis\r\n";
  for (std::size_t i = 0; i < trace.distances.rows(); ++i) {
    for (std::size_t j = 0; j < trace.distances.cols(); ++j) {
      const auto& d = trace.distances(i, j);
      distances << csv_field(trace.alternatives[i].id) << ',' << csv_field(trace.criteria[j].id) << ','
                << format_fixed(d.to_fpis, precision) << ',' << format_fixed(d.to_fnis, precision) << "\r\n";
    }
  }
  files.emplace_back("06_distances.csv", distances.str());
  files.emplace_back("07_closeness.csv", closeness_csv(trace, precision));
  return files;
}

}  // namespace ftopsis
