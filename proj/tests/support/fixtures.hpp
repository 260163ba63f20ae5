#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ftopsis/problem.hpp"
#include "ftopsis/problem_io.hpp"
#include "serial_topsis.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(FTOPSIS_DATA_DIR) + "/" + name; }

inline std::string laptop_text() { return ftopsis::read_file(data_path("laptop_example.json")); }

inline ftopsis::DecisionProblem laptop_problem() { return ftopsis::parse_problem(laptop_text()); }

// Five-term scale values written out independently of the library's defaults.
inline constexpr std::array<std::array<double, 3>, 5> kTableScale{{{1, 1, 3}, {1, 3, 5}, {3, 5, 7}, {5, 7, 9}, {7, 9, 9}}};
inline const std::array<std::string, 5> kAssessmentCodes{"VP", "P", "F", "G", "VG"};
inline const std::array<std::string, 5> kWeightCodes{"VL", "L", "M", "H", "VH"};

/// A random problem drawn over the five-term scales, in both the library's
/// representation and the reference implementation's plain arrays.
struct RandomCase {
  ftopsis::DecisionProblem problem;
  ftopsis_reference::Problem reference;
  std::vector<int> weight_terms;  // [dm][criterion]
  std::vector<int> rating_terms;  // [dm][alternative][criterion]
};

inline RandomCase random_case(std::mt19937_64& rng, int max_m = 3, int max_n = 3, int max_k = 3) {
  std::uniform_int_distribution<int> pick_m(1, max_m), pick_n(1, max_n), pick_k(1, max_k), term(0, 4), coin(0, 1);
  const int m = pick_m(rng);
  const int n = pick_n(rng);
  const int K = pick_k(rng);

  ftopsis::ProblemStructure s;
  for (int i = 0; i < m; ++i) s.alternatives.push_back({"A" + std::to_string(i + 1), "Alternative " + std::to_string(i + 1)});
  std::vector<bool> cost;
  for (int j = 0; j < n; ++j) {
    const bool is_cost = coin(rng) == 1;
    cost.push_back(is_cost);
    s.criteria.push_back({"C" + std::to_string(j + 1), "", is_cost ? ftopsis::Sense::Cost : ftopsis::Sense::Benefit});
  }
  for (int k = 0; k < K; ++k) s.decision_makers.push_back({"DM" + std::to_string(k + 1), ""});

  ftopsis_reference::Problem ref;
  ref.alternatives = m;
  ref.criteria = n;
  ref.decision_makers = K;
  ref.cost = cost;

  std::vector<ftopsis::Assessment> weights, ratings;
  std::vector<int> weight_terms, rating_terms;
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < n; ++j) {
      const int t = term(rng);
      weight_terms.push_back(t);
      weights.emplace_back(kWeightCodes[t]);
      ref.weights.push_back(kTableScale[t]);
    }
  }
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const int t = term(rng);
        rating_terms.push_back(t);
        ratings.emplace_back(kAssessmentCodes[t]);
        ref.ratings.push_back(kTableScale[t]);
      }
    }
  }
  return {ftopsis::DecisionProblem(std::move(s), std::move(weights), std::move(ratings)), std::move(ref),
          std::move(weight_terms), std::move(rating_terms)};
}

/// Rebuild a problem with decision makers reordered by perm (new k = perm index into old).
inline ftopsis::DecisionProblem permute_decision_makers(const ftopsis::DecisionProblem& p, const std::vector<int>& perm) {
  const std::size_t m = p.alternative_count(), n = p.criterion_count();
  ftopsis::ProblemStructure s = p.structure();
  s.decision_makers.clear();
  std::vector<ftopsis::Assessment> weights, ratings;
  for (int old_k : perm) {
    s.decision_makers.push_back(p.decision_makers()[old_k]);
    for (std::size_t j = 0; j < n; ++j) weights.push_back(p.weight(old_k, j));
  }
  for (int old_k : perm) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) ratings.push_back(p.rating(old_k, i, j));
  }
  return {std::move(s), std::move(weights), std::move(ratings)};
}

/// Rebuild a problem with alternatives reordered by perm.
inline ftopsis::DecisionProblem permute_alternatives(const ftopsis::DecisionProblem& p, const std::vector<int>& perm) {
  const std::size_t n = p.criterion_count();
  ftopsis::ProblemStructure s = p.structure();
  s.alternatives.clear();
  for (int old_i : perm) s.alternatives.push_back(p.alternatives()[old_i]);
  std::vector<ftopsis::Assessment> weights, ratings;
  for (std::size_t k = 0; k < p.decision_maker_count(); ++k) {
    for (std::size_t j = 0; j < n; ++j) weights.push_back(p.weight(k, j));
    for (int old_i : perm)
      for (std::size_t j = 0; j < n; ++j) ratings.push_back(p.rating(k, old_i, j));
  }
  return {std::move(s), std::move(weights), std::move(ratings)};
}

}  // namespace fixtures
