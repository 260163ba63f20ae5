#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ftopsis/fuzzy_matrix.hpp"
#include "ftopsis/fuzzy_number.hpp"
#include "ftopsis/problem.hpp"

namespace ftopsis {

/// Per-criterion positive and negative ideals, stored as crisp (v, v, v) numbers.
struct IdealSolutions {
  std::vector<Tfn> fpis;
  std::vector<Tfn> fnis;
  friend bool operator==(const IdealSolutions&, const IdealSolutions&) = default;
};

struct CriterionDistance {
  double to_fpis = 0.0;
  double to_fnis = 0.0;
  friend bool operator==(const CriterionDistance&, const CriterionDistance&) = default;
};

using DistanceTable = Grid<CriterionDistance>;

struct Separations {
  DistanceTable per_criterion;
  std::vector<double> d_star;
  std::vector<double> d_minus;
};

/// Every intermediate stage of one evaluation, in pipeline order.
struct EvaluationTrace {
  std::vector<Alternative> alternatives;
  std::vector<Criterion> criteria;

  FuzzyMatrix aggregate_ratings;
  std::vector<Tfn> aggregate_weights;
  FuzzyMatrix normalized;
  FuzzyMatrix weighted;
  IdealSolutions ideals;
  DistanceTable distances;
  std::vector<double> d_star;
  std::vector<double> d_minus;
  std::vector<double> closeness;
  /// Alternative indices, best first.
  std::vector<std::size_t> ranking;
  std::vector<std::string> warnings;

  std::vector<std::string> ranked_ids() const;

  friend bool operator==(const EvaluationTrace&, const EvaluationTrace&) = default;
};

/// (min lower, mean modal, max upper) over decision makers, per alternative and criterion.
FuzzyMatrix aggregate_ratings(const DecisionProblem& problem);

/// Same pooling over decision makers, per criterion.
std::vector<Tfn> aggregate_weights(const DecisionProblem& problem);

/**
 * Linear scale normalization. Benefit columns divide by the column's largest
 * upper bound; cost columns take the column's smallest lower bound over each
 * cell with components reversed. Output components lie in [0, 1].
 *
 * Throws DomainError for a non-positive component in a cost column or an
 * all-zero benefit column. alternatives is optional and only used to name
 * the offending cell.
 */
FuzzyMatrix normalize(const FuzzyMatrix& aggregate, std::span<const Criterion> criteria,
                      std::span<const Alternative> alternatives = {});

FuzzyMatrix apply_weights(const FuzzyMatrix& normalized, std::span<const Tfn> weights);

/// fpis_j = crisp(max_i upper), fnis_j = crisp(min_i lower). Requires at least one row.
IdealSolutions ideal_solutions(const FuzzyMatrix& weighted);

Separations separations(const FuzzyMatrix& weighted, const IdealSolutions& ideals);

/// d- / (d- + d*). Both zero yields 1.0; callers that care flag it.
double closeness(double d_star, double d_minus) noexcept;

/// Indices sorted by closeness descending; ties keep input order.
std::vector<std::size_t> rank_by_closeness(std::span<const double> closeness);

/// The full pipeline. Identical input yields a bit-identical trace regardless of thread count.
EvaluationTrace evaluate(const DecisionProblem& problem);

/// Work size (cells) below which kernels stay on the calling thread.
inline constexpr std::size_t kParallelCellThreshold = 4096;

}  // namespace ftopsis
