#include "ftopsis/sensitivity.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "ftopsis/engine.hpp"
#include "ftopsis/errors.hpp"
#include "ftopsis/report.hpp"

namespace ftopsis {

namespace {

struct Variant {
  std::string label;
  std::function<DecisionProblem()> build;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

ScaleRole parse_role(const std::string& text) {
  if (text == "assessment") return ScaleRole::AlternativeAssessment;
  if (text == "weight") return ScaleRole::CriterionWeight;
  throw ValidationError("unknown scale role '" + text + "' (expected 'assessment' or 'weight')");
}

double parse_number(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ValidationError("expected a number, got '" + text + "'");
  }
  return value;
}

std::string format_number(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

DecisionProblem with_draft_edit(const DecisionProblem& base, const std::function<void(ProblemDraft&)>& edit) {
  auto draft = ProblemDraft::from(base);
  edit(draft);
  return draft.build();
}

DecisionProblem with_scale(const DecisionProblem& base, ScaleRole role, const LinguisticScale& scale) {
  ProblemStructure structure = base.structure();
  if (role == ScaleRole::AlternativeAssessment) {
    structure.assessment_scale = scale;
  } else {
    structure.weight_scale = scale;
  }
  std::vector<Assessment> weights;
  std::vector<Assessment> ratings;
  for (std::size_t k = 0; k < base.decision_maker_count(); ++k) {
    for (std::size_t j = 0; j < base.criterion_count(); ++j) weights.push_back(base.weight(k, j));
  }
  for (std::size_t k = 0; k < base.decision_maker_count(); ++k) {
    for (std::size_t i = 0; i < base.alternative_count(); ++i) {
      for (std::size_t j = 0; j < base.criterion_count(); ++j) ratings.push_back(base.rating(k, i, j));
    }
  }
  return {std::move(structure), std::move(weights), std::move(ratings)};
}

const LinguisticScale& scale_of(const DecisionProblem& problem, ScaleRole role) {
  return role == ScaleRole::AlternativeAssessment ? problem.structure().assessment_scale
                                                  : problem.structure().weight_scale;
}

void expand(const DecisionProblem& base, const PerturbationSpec& spec, std::vector<Variant>& out) {
  const StructureIndex index(base.structure());
  auto require = [](bool found, const char* what, const std::string& id) {
    if (!found) throw ReferenceError(std::string("unknown ") + what + " '" + id + "' in perturbation", id);
  };

  if (const auto* sweep = std::get_if<WeightSweep>(&spec)) {
    require(index.decision_maker(sweep->decision_maker).has_value(), "decision maker", sweep->decision_maker);
    require(index.criterion(sweep->criterion).has_value(), "criterion", sweep->criterion);
    for (const auto& term : base.structure().weight_scale.terms()) {
      out.push_back({"weight " + sweep->decision_maker + "/" + sweep->criterion + "=" + term.code,
                     [&base, s = *sweep, code = term.code] {
                       return with_draft_edit(base, [&](ProblemDraft& d) {
                         d.set_weight(s.decision_maker, s.criterion, code);
                       });
                     }});
    }
  } else if (const auto* sweep = std::get_if<RatingSweep>(&spec)) {
    require(index.decision_maker(sweep->decision_maker).has_value(), "decision maker", sweep->decision_maker);
    require(index.alternative(sweep->alternative).has_value(), "alternative", sweep->alternative);
    require(index.criterion(sweep->criterion).has_value(), "criterion", sweep->criterion);
    for (const auto& term : base.structure().assessment_scale.terms()) {
      out.push_back({"rating " + sweep->decision_maker + "/" + sweep->alternative + "/" + sweep->criterion + "=" +
                         term.code,
                     [&base, s = *sweep, code = term.code] {
                       return with_draft_edit(base, [&](ProblemDraft& d) {
                         d.set_rating(s.decision_maker, s.alternative, s.criterion, code);
                       });
                     }});
    }
  } else if (const auto* factor = std::get_if<ScaleFactor>(&spec)) {
    out.push_back({std::string(to_string(factor->role)) + " scale x" + format_number(factor->factor),
                   [&base, f = *factor] { return with_scale(base, f.role, scaled(scale_of(base, f.role), f.factor)); }});
  } else if (const auto* shift = std::get_if<ScaleShift>(&spec)) {
    out.push_back({std::string(to_string(shift->role)) + " scale " + (shift->offset < 0 ? "" : "+") + format_number(shift->offset),
                   [&base, s = *shift] { return with_scale(base, s.role, shifted(scale_of(base, s.role), s.offset)); }});
  }
}

}  // namespace

PerturbationSpec parse_perturbation(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& kind = parts.front();
  if (kind == "weight" && parts.size() == 3) return WeightSweep{parts[1], parts[2]};
  if (kind == "rating" && parts.size() == 4) return RatingSweep{parts[1], parts[2], parts[3]};
  if (kind == "factor" && parts.size() == 3) return ScaleFactor{parse_role(parts[1]), parse_number(parts[2])};
  if (kind == "shift" && parts.size() == 3) return ScaleShift{parse_role(parts[1]), parse_number(parts[2])};
  throw ValidationError("invalid perturbation '" + text +
                        "' (expected weight:DM:C, rating:DM:A:C, factor:ROLE:X or shift:ROLE:X)");
}

SensitivityReport run_sensitivity(const DecisionProblem& base, const std::vector<PerturbationSpec>& specs) {
  SensitivityReport report;
  for (const auto& a : base.alternatives()) report.alternatives.push_back(a.id);
  report.baseline_ranking = evaluate(base).ranked_ids();

  std::vector<Variant> variants;
  for (const auto& spec : specs) expand(base, spec, variants);
  report.rows.resize(variants.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(variants.size()); ++v) {
    auto& row = report.rows[static_cast<std::size_t>(v)];
    row.label = variants[static_cast<std::size_t>(v)].label;
    try {
      const auto trace = evaluate(variants[static_cast<std::size_t>(v)].build());
      row.closeness = trace.closeness;
      row.ranking = trace.ranked_ids();
      row.rank_reversal = row.ranking != report.baseline_ranking;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return report;
}

std::string sensitivity_csv(const SensitivityReport& report, int precision) {
  std::ostringstream os;
  os << "perturbation";
  for (const auto& id : report.alternatives) os << ',' << csv_field("cc_" + id);
  os << ",ranking,rank_reversal,error\r\n";
  for (const auto& row : report.rows) {
    os << csv_field(row.label);
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
      os << ',';
      if (i < row.closeness.size()) os << format_fixed(row.closeness[i], precision);
    }
    std::string ranking;
    for (std::size_t r = 0; r < row.ranking.size(); ++r) ranking += (r == 0 ? "" : ">") + row.ranking[r];
    os << ',' << csv_field(ranking) << ',' << (row.error ? "" : (row.rank_reversal ? "true" : "false")) << ','
       << csv_field(row.error.value_or("")) << "\r\n";
  }
  return os.str();
}

}  // namespace ftopsis
