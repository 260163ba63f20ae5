#include "ftopsis/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ftopsis {

namespace {

template <typename Entity>
void check_roster(const std::vector<Entity>& roster, const char* what, std::vector<std::string>& problems) {
  if (roster.empty()) {
    problems.push_back(std::string("at least one ") + what + " is required");
    return;
  }
  std::set<std::string_view> seen;
  std::set<std::string_view> reported;
  for (const auto& entity : roster) {
    if (entity.id.empty()) {
      problems.push_back(std::string(what) + " with empty id");
      continue;
    }
    if (!seen.insert(entity.id).second && reported.insert(entity.id).second) {
      problems.push_back(std::string("duplicate ") + what + " id '" + entity.id + "'");
    }
  }
}

void check_scale_domain(const LinguisticScale& scale, std::vector<std::string>& problems) {
  for (const auto& term : scale.terms()) {
    if (term.value.lower() < 0.0) {
      problems.push_back(std::string(to_string(scale.role())) + " term '" + term.code +
                         "' has a negative component; ratings and weights must be non-negative");
    }
  }
}

void check_raw_domain(const Assessment& value, const std::string& context) {
  if (const auto* raw = std::get_if<Tfn>(&value); raw != nullptr && raw->lower() < 0.0) {
    throw ValidationError("raw fuzzy number in " + context + " has a negative component");
  }
}

template <typename Entity>
std::unordered_map<std::string, std::size_t> index_of(const std::vector<Entity>& roster) {
  std::unordered_map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < roster.size(); ++i) out.emplace(roster[i].id, i);
  return out;
}

std::optional<std::size_t> find_in(const std::unordered_map<std::string, std::size_t>& map, std::string_view id) {
  if (auto it = map.find(std::string(id)); it != map.end()) return it->second;
  return std::nullopt;
}

std::string weight_context(const ProblemStructure& s, std::size_t k, std::size_t j) {
  return "weight " + s.decision_makers[k].id + "/" + s.criteria[j].id;
}

std::string rating_context(const ProblemStructure& s, std::size_t k, std::size_t i, std::size_t j) {
  return "rating " + s.decision_makers[k].id + "/" + s.alternatives[i].id + "/" + s.criteria[j].id;
}

}  // namespace

std::string_view to_string(Sense sense) noexcept { return sense == Sense::Cost ? "cost" : "benefit"; }

std::optional<Sense> parse_sense(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "benefit") return Sense::Benefit;
  if (lower == "cost") return Sense::Cost;
  return std::nullopt;
}

void ProblemStructure::validate() const {
  std::vector<std::string> problems;
  check_roster(alternatives, "alternative", problems);
  check_roster(criteria, "criterion", problems);
  check_roster(decision_makers, "decision maker", problems);
  if (assessment_scale.role() != ScaleRole::AlternativeAssessment) problems.push_back("assessment scale has wrong role");
  if (weight_scale.role() != ScaleRole::CriterionWeight) problems.push_back("weight scale has wrong role");
  check_scale_domain(assessment_scale, problems);
  check_scale_domain(weight_scale, problems);
  if (problems.empty()) return;

  std::string message = "invalid problem structure: ";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i != 0) message += "; ";
    message += problems[i];
  }
  throw ValidationError(message);
}

StructureIndex::StructureIndex(const ProblemStructure& structure)
    : alternatives_(index_of(structure.alternatives)),
      criteria_(index_of(structure.criteria)),
      decision_makers_(index_of(structure.decision_makers)) {}

std::optional<std::size_t> StructureIndex::alternative(std::string_view id) const { return find_in(alternatives_, id); }
std::optional<std::size_t> StructureIndex::criterion(std::string_view id) const { return find_in(criteria_, id); }
std::optional<std::size_t> StructureIndex::decision_maker(std::string_view id) const {
  return find_in(decision_makers_, id);
}

Tfn resolve(const Assessment& assessment, const LinguisticScale& scale, const std::string& context) {
  if (const auto* raw = std::get_if<Tfn>(&assessment)) return *raw;
  const auto& code = std::get<std::string>(assessment);
  if (const Tfn* value = scale.find(code)) return *value;
  throw UnknownTermError(code, scale.codes(), context);
}

DecisionProblem::DecisionProblem(ProblemStructure structure, std::vector<Assessment> weights,
                                 std::vector<Assessment> ratings)
    : structure_(std::move(structure)), weights_(std::move(weights)), ratings_(std::move(ratings)) {
  structure_.validate();
  const std::size_t m = alternative_count();
  const std::size_t n = criterion_count();
  const std::size_t K = decision_maker_count();
  if (weights_.size() != K * n) {
    throw ValidationError("expected " + std::to_string(K * n) + " weight judgements, got " +
                          std::to_string(weights_.size()));
  }
  if (ratings_.size() != K * m * n) {
    throw ValidationError("expected " + std::to_string(K * m * n) + " rating judgements, got " +
                          std::to_string(ratings_.size()));
  }

  resolved_weights_.reserve(weights_.size());
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& value = weights_[k * n + j];
      if (std::holds_alternative<Tfn>(value)) check_raw_domain(value, weight_context(structure_, k, j));
      if (const auto* code = std::get_if<std::string>(&value)) {
        // Fast path: resolve without building the context string unless it fails.
        if (const Tfn* t = structure_.weight_scale.find(*code)) {
          resolved_weights_.push_back(*t);
          continue;
        }
      }
      resolved_weights_.push_back(resolve(value, structure_.weight_scale, weight_context(structure_, k, j)));
    }
  }

  resolved_ratings_.reserve(ratings_.size());
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& value = ratings_[(k * m + i) * n + j];
        if (const auto* code = std::get_if<std::string>(&value)) {
          if (const Tfn* t = structure_.assessment_scale.find(*code)) {
            resolved_ratings_.push_back(*t);
            continue;
          }
        } else {
          check_raw_domain(value, rating_context(structure_, k, i, j));
        }
        resolved_ratings_.push_back(
            resolve(value, structure_.assessment_scale, rating_context(structure_, k, i, j)));
      }
    }
  }
}

const Assessment& DecisionProblem::weight(std::size_t dm, std::size_t criterion) const {
  return weights_.at(dm * criterion_count() + criterion);
}

const Assessment& DecisionProblem::rating(std::size_t dm, std::size_t alternative, std::size_t criterion) const {
  return ratings_.at((dm * alternative_count() + alternative) * criterion_count() + criterion);
}

ProblemDraft::ProblemDraft(ProblemStructure structure)
    : structure_((structure.validate(), std::move(structure))),
      index_(structure_),
      weights_(structure_.decision_makers.size() * structure_.criteria.size()),
      ratings_(structure_.decision_makers.size() * structure_.alternatives.size() * structure_.criteria.size()) {}

ProblemDraft ProblemDraft::from(const DecisionProblem& problem) {
  ProblemDraft draft(problem.structure());
  const std::size_t m = problem.alternative_count();
  const std::size_t n = problem.criterion_count();
  for (std::size_t k = 0; k < problem.decision_maker_count(); ++k) {
    for (std::size_t j = 0; j < n; ++j) draft.weights_[k * n + j] = problem.weight(k, j);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) draft.ratings_[(k * m + i) * n + j] = problem.rating(k, i, j);
    }
  }
  return draft;
}

std::size_t ProblemDraft::dm_index(std::string_view id) const {
  if (auto k = index_.decision_maker(id)) return *k;
  throw ReferenceError("unknown decision maker '" + std::string(id) + "'", std::string(id));
}

std::size_t ProblemDraft::alternative_index(std::string_view id) const {
  if (auto i = index_.alternative(id)) return *i;
  throw ReferenceError("unknown alternative '" + std::string(id) + "'", std::string(id));
}

std::size_t ProblemDraft::criterion_index(std::string_view id) const {
  if (auto j = index_.criterion(id)) return *j;
  throw ReferenceError("unknown criterion '" + std::string(id) + "'", std::string(id));
}

void ProblemDraft::set_weight(std::string_view dm, std::string_view criterion, Assessment value) {
  const std::size_t k = dm_index(dm);
  const std::size_t j = criterion_index(criterion);
  const std::string context = weight_context(structure_, k, j);
  check_raw_domain(value, context);
  resolve(value, structure_.weight_scale, context);
  weights_[k * structure_.criteria.size() + j] = std::move(value);
}

void ProblemDraft::set_rating(std::string_view dm, std::string_view alternative, std::string_view criterion,
                              Assessment value) {
  const std::size_t k = dm_index(dm);
  const std::size_t i = alternative_index(alternative);
  const std::size_t j = criterion_index(criterion);
  const std::string context = rating_context(structure_, k, i, j);
  check_raw_domain(value, context);
  resolve(value, structure_.assessment_scale, context);
  ratings_[(k * structure_.alternatives.size() + i) * structure_.criteria.size() + j] = std::move(value);
}

const std::optional<Assessment>& ProblemDraft::weight(std::size_t dm, std::size_t criterion) const {
  return weights_.at(dm * structure_.criteria.size() + criterion);
}

const std::optional<Assessment>& ProblemDraft::rating(std::size_t dm, std::size_t alternative,
                                                      std::size_t criterion) const {
  return ratings_.at((dm * structure_.alternatives.size() + alternative) * structure_.criteria.size() + criterion);
}

std::vector<MissingCell> ProblemDraft::missing() const {
  const auto& s = structure_;
  const std::size_t m = s.alternatives.size();
  const std::size_t n = s.criteria.size();
  std::vector<MissingCell> out;
  for (std::size_t k = 0; k < s.decision_makers.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!weights_[k * n + j]) out.push_back({s.decision_makers[k].id, std::nullopt, s.criteria[j].id});
    }
  }
  for (std::size_t k = 0; k < s.decision_makers.size(); ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!ratings_[(k * m + i) * n + j]) {
          out.push_back({s.decision_makers[k].id, s.alternatives[i].id, s.criteria[j].id});
        }
      }
    }
  }
  return out;
}

bool ProblemDraft::complete() const {
  auto filled = [](const auto& cell) { return cell.has_value(); };
  return std::all_of(weights_.begin(), weights_.end(), filled) && std::all_of(ratings_.begin(), ratings_.end(), filled);
}

DecisionProblem ProblemDraft::build() const {
  if (auto holes = missing(); !holes.empty()) throw CompletenessError(std::move(holes));
  std::vector<Assessment> weights;
  weights.reserve(weights_.size());
  for (const auto& w : weights_) weights.push_back(*w);
  std::vector<Assessment> ratings;
  ratings.reserve(ratings_.size());
  for (const auto& r : ratings_) ratings.push_back(*r);
  return {structure_, std::move(weights), std::move(ratings)};
}

}  // namespace ftopsis
