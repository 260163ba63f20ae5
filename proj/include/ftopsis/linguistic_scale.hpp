#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ftopsis/fuzzy_number.hpp"

namespace ftopsis {

enum class ScaleRole { AlternativeAssessment, CriterionWeight };

std::string_view to_string(ScaleRole role) noexcept;

struct LinguisticTerm {
  std::string code;
  std::string label;
  Tfn value;
};

/**
 * Ordered mapping from linguistic codes to fuzzy numbers for one role.
 *
 * Invariants: at least one term, unique codes, modal values non-decreasing
 * in term order. Lookups are linear; scales are a handful of terms.
 */
class LinguisticScale {
 public:
  /// Throws ValidationError if an invariant is violated.
  LinguisticScale(ScaleRole role, std::vector<LinguisticTerm> terms);

  ScaleRole role() const noexcept { return role_; }
  const std::vector<LinguisticTerm>& terms() const noexcept { return terms_; }

  bool contains(std::string_view code) const noexcept;

  /// Throws UnknownTermError listing the valid codes.
  const Tfn& lookup(std::string_view code) const;

  /// Nullptr when the code is not in the scale.
  const Tfn* find(std::string_view code) const noexcept;

  std::vector<std::string> codes() const;

  friend bool operator==(const LinguisticScale& a, const LinguisticScale& b);

 private:
  ScaleRole role_;
  std::vector<LinguisticTerm> terms_;
};

/// Five-term 1..9 assessment scale: VP, P, F, G, VG.
const LinguisticScale& default_assessment_scale();

/// Five-term 1..9 weight scale: VL, L, M, H, VH.
const LinguisticScale& default_weight_scale();

/// Same codes and labels, every component multiplied by factor (> 0).
LinguisticScale scaled(const LinguisticScale& scale, double factor);

/// Same codes and labels, every component shifted by offset.
LinguisticScale shifted(const LinguisticScale& scale, double offset);

/// term_lookup: resolve a code against a scale.
inline const Tfn& term_lookup(const LinguisticScale& scale, std::string_view code) { return scale.lookup(code); }

}  // namespace ftopsis
