#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ftopsis/errors.hpp"
#include "ftopsis/fuzzy_number.hpp"
#include "ftopsis/linguistic_scale.hpp"

namespace ftopsis {

enum class Sense { Benefit, Cost };

std::string_view to_string(Sense sense) noexcept;
/// Accepts "benefit" / "cost" (case-insensitive).
std::optional<Sense> parse_sense(std::string_view text) noexcept;

struct Alternative {
  std::string id;
  std::string name;
  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct Criterion {
  std::string id;
  std::string name;
  Sense sense = Sense::Benefit;
  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct DecisionMaker {
  std::string id;
  std::string name;
  friend bool operator==(const DecisionMaker&, const DecisionMaker&) = default;
};

/// A single linguistic judgement: a term code, or a raw fuzzy number for expert overrides.
using Assessment = std::variant<std::string, Tfn>;

/// Everything about a problem except the judgements themselves.
struct ProblemStructure {
  std::vector<Alternative> alternatives;
  std::vector<Criterion> criteria;
  std::vector<DecisionMaker> decision_makers;
  LinguisticScale assessment_scale = default_assessment_scale();
  LinguisticScale weight_scale = default_weight_scale();

  /// Throws ValidationError listing every empty roster and duplicate id.
  void validate() const;

  friend bool operator==(const ProblemStructure&, const ProblemStructure&) = default;
};

/// Index lookups for a structure's ids.
class StructureIndex {
 public:
  explicit StructureIndex(const ProblemStructure& structure);

  std::optional<std::size_t> alternative(std::string_view id) const;
  std::optional<std::size_t> criterion(std::string_view id) const;
  std::optional<std::size_t> decision_maker(std::string_view id) const;

 private:
  std::unordered_map<std::string, std::size_t> alternatives_;
  std::unordered_map<std::string, std::size_t> criteria_;
  std::unordered_map<std::string, std::size_t> decision_makers_;
};

/**
 * A complete, validated group decision problem.
 *
 * Holds K x n weight judgements and K x m x n rating judgements, indexed
 * [dm][criterion] and [dm][alternative][criterion]. Every judgement is
 * resolved against its scale at construction so the engine never sees an
 * unresolvable code.
 */
class DecisionProblem {
 public:
  /// weights has K*n entries, ratings K*m*n, both in row-major dm-first order.
  DecisionProblem(ProblemStructure structure, std::vector<Assessment> weights, std::vector<Assessment> ratings);

  const ProblemStructure& structure() const noexcept { return structure_; }
  const std::vector<Alternative>& alternatives() const noexcept { return structure_.alternatives; }
  const std::vector<Criterion>& criteria() const noexcept { return structure_.criteria; }
  const std::vector<DecisionMaker>& decision_makers() const noexcept { return structure_.decision_makers; }

  std::size_t alternative_count() const noexcept { return structure_.alternatives.size(); }
  std::size_t criterion_count() const noexcept { return structure_.criteria.size(); }
  std::size_t decision_maker_count() const noexcept { return structure_.decision_makers.size(); }

  const Assessment& weight(std::size_t dm, std::size_t criterion) const;
  const Assessment& rating(std::size_t dm, std::size_t alternative, std::size_t criterion) const;

  const Tfn& resolved_weight(std::size_t dm, std::size_t criterion) const noexcept {
    return resolved_weights_[dm * criterion_count() + criterion];
  }
  const Tfn& resolved_rating(std::size_t dm, std::size_t alternative, std::size_t criterion) const noexcept {
    return resolved_ratings_[(dm * alternative_count() + alternative) * criterion_count() + criterion];
  }

  friend bool operator==(const DecisionProblem& a, const DecisionProblem& b) {
    return a.structure_ == b.structure_ && a.weights_ == b.weights_ && a.ratings_ == b.ratings_;
  }

 private:
  ProblemStructure structure_;
  std::vector<Assessment> weights_;
  std::vector<Assessment> ratings_;
  std::vector<Tfn> resolved_weights_;
  std::vector<Tfn> resolved_ratings_;
};

/// Resolve one judgement against a scale. context names the cell in error messages.
Tfn resolve(const Assessment& assessment, const LinguisticScale& scale, const std::string& context);

/**
 * A problem under construction: fixed structure, partially filled judgements.
 * Setters validate references and codes immediately; completeness is only
 * enforced by build().
 */
class ProblemDraft {
 public:
  explicit ProblemDraft(ProblemStructure structure);
  static ProblemDraft from(const DecisionProblem& problem);

  const ProblemStructure& structure() const noexcept { return structure_; }

  /// Throws ReferenceError for unknown ids, UnknownTermError for unknown codes,
  /// ValidationError for raw numbers outside the non-negative rating domain.
  void set_weight(std::string_view dm, std::string_view criterion, Assessment value);
  void set_rating(std::string_view dm, std::string_view alternative, std::string_view criterion, Assessment value);

  const std::optional<Assessment>& weight(std::size_t dm, std::size_t criterion) const;
  const std::optional<Assessment>& rating(std::size_t dm, std::size_t alternative, std::size_t criterion) const;

  /// Missing weight cells first, then missing ratings, each in roster order.
  std::vector<MissingCell> missing() const;
  bool complete() const;

  /// Throws CompletenessError listing every missing cell.
  DecisionProblem build() const;

 private:
  std::size_t dm_index(std::string_view id) const;
  std::size_t alternative_index(std::string_view id) const;
  std::size_t criterion_index(std::string_view id) const;

  ProblemStructure structure_;
  StructureIndex index_;
  std::vector<std::optional<Assessment>> weights_;
  std::vector<std::optional<Assessment>> ratings_;
};

}  // namespace ftopsis
