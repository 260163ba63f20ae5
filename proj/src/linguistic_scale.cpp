#include "ftopsis/linguistic_scale.hpp"

#include <set>

#include "ftopsis/errors.hpp"

namespace ftopsis {

std::string_view to_string(ScaleRole role) noexcept {
  switch (role) {
    case ScaleRole::AlternativeAssessment:
      return "assessment";
    case ScaleRole::CriterionWeight:
      return "weight";
  }
  return "unknown";
}

LinguisticScale::LinguisticScale(ScaleRole role, std::vector<LinguisticTerm> terms)
    : role_(role), terms_(std::move(terms)) {
  const std::string which{to_string(role_)};
  if (terms_.empty()) throw ValidationError(which + " scale must contain at least one term");

  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& term = terms_[i];
    if (term.code.empty()) throw ValidationError(which + " scale has a term with an empty code");
    if (!seen.insert(term.code).second) {
      throw ValidationError(which + " scale has duplicate term code '" + term.code + "'");
    }
    if (i > 0 && term.value.modal() < terms_[i - 1].value.modal()) {
      throw ValidationError(which + " scale terms must be ordered by modal value; '" + term.code +
                            "' comes after '" + terms_[i - 1].code + "' but has a smaller modal value");
    }
  }
}

bool LinguisticScale::contains(std::string_view code) const noexcept { return find(code) != nullptr; }

const Tfn* LinguisticScale::find(std::string_view code) const noexcept {
  for (const auto& term : terms_) {
    if (term.code == code) return &term.value;
  }
  return nullptr;
}

const Tfn& LinguisticScale::lookup(std::string_view code) const {
  if (const Tfn* value = find(code)) return *value;
  throw UnknownTermError(std::string(code), codes());
}

std::vector<std::string> LinguisticScale::codes() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(term.code);
  return out;
}

bool operator==(const LinguisticScale& a, const LinguisticScale& b) {
  if (a.role_ != b.role_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.code != y.code || x.label != y.label || !(x.value == y.value)) return false;
  }
  return true;
}

const LinguisticScale& default_assessment_scale() {
  static const LinguisticScale scale(ScaleRole::AlternativeAssessment, {
                                                                           {"VP", "Very Poor", {1, 1, 3}},
                                                                           {"P", "Poor", {1, 3, 5}},
                                                                           {"F", "Fair", {3, 5, 7}},
                                                                           {"G", "Good", {5, 7, 9}},
                                                                           {"VG", "Very Good", {7, 9, 9}},
                                                                       });
  return scale;
}

const LinguisticScale& default_weight_scale() {
  static const LinguisticScale scale(ScaleRole::CriterionWeight, {
                                                                     {"VL", "Very Low", {1, 1, 3}},
                                                                     {"L", "Low", {1, 3, 5}},
                                                                     {"M", "Medium", {3, 5, 7}},
                                                                     {"H", "High", {5, 7, 9}},
                                                                     {"VH", "Very High", {7, 9, 9}},
                                                                 });
  return scale;
}

LinguisticScale scaled(const LinguisticScale& scale, double factor) {
  if (!(factor > 0.0)) throw ValidationError("scale factor must be positive, got " + std::to_string(factor));
  std::vector<LinguisticTerm> terms;
  for (const auto& term : scale.terms()) {
    const auto& v = term.value;
    terms.push_back({term.code, term.label, {v.lower() * factor, v.modal() * factor, v.upper() * factor}});
  }
  return {scale.role(), std::move(terms)};
}

LinguisticScale shifted(const LinguisticScale& scale, double offset) {
  std::vector<LinguisticTerm> terms;
  for (const auto& term : scale.terms()) {
    const auto& v = term.value;
    terms.push_back({term.code, term.label, {v.lower() + offset, v.modal() + offset, v.upper() + offset}});
  }
  return {scale.role(), std::move(terms)};
}

}  // namespace ftopsis
