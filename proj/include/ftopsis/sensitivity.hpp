#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ftopsis/linguistic_scale.hpp"
#include "ftopsis/problem.hpp"

namespace ftopsis {

/// Replace one decision maker's weight for one criterion with every weight term in turn.
struct WeightSweep {
  std::string decision_maker;
  std::string criterion;
};

/// Replace one rating with every assessment term in turn.
struct RatingSweep {
  std::string decision_maker;
  std::string alternative;
  std::string criterion;
};

/// Multiply every term of one scale by factor.
struct ScaleFactor {
  ScaleRole role;
  double factor;
};

/// Add offset to every component of every term of one scale.
struct ScaleShift {
  ScaleRole role;
  double offset;
};

using PerturbationSpec = std::variant<WeightSweep, RatingSweep, ScaleFactor, ScaleShift>;

/// Parses "weight:DM:C", "rating:DM:A:C", "factor:ROLE:X", "shift:ROLE:X" (ROLE is assessment or weight).
PerturbationSpec parse_perturbation(const std::string& text);

struct SensitivityRow {
  std::string label;
  /// Per alternative, input order. Empty when the perturbed problem failed to evaluate.
  std::vector<double> closeness;
  std::vector<std::string> ranking;
  bool rank_reversal = false;
  std::optional<std::string> error;
};

struct SensitivityReport {
  std::vector<std::string> alternatives;
  std::vector<std::string> baseline_ranking;
  std::vector<SensitivityRow> rows;
};

/// One row per perturbation, in the order given then term order. Rows evaluate
/// independently (in parallel when OpenMP is on); each is a plain evaluate call.
SensitivityReport run_sensitivity(const DecisionProblem& base, const std::vector<PerturbationSpec>& specs);

/// Header "perturbation,cc_<id>...,ranking,rank_reversal,error", CRLF line endings.
std::string sensitivity_csv(const SensitivityReport& report, int precision = 3);

}  // namespace ftopsis
