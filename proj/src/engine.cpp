#include "ftopsis/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ftopsis/errors.hpp"

namespace ftopsis {

// Kernels parallelize over independent rows or columns only. Every
// floating-point sum is accumulated serially in index order inside one
// iteration, so results do not depend on the thread count.

namespace {

using Index = std::ptrdiff_t;

// The rounded mean of identical modal values can land one ulp outside
// [lower, upper]; clamping restores the ordering the exact mean satisfies.
Tfn pooled(double lower, double modal_sum, std::size_t count, double upper) {
  return {lower, std::clamp(modal_sum / static_cast<double>(count), lower, upper), upper};
}

bool worth_parallel(std::size_t cells) noexcept { return cells >= kParallelCellThreshold; }

std::string alternative_label(std::span<const Alternative> alternatives, std::size_t i) {
  if (i < alternatives.size()) return alternatives[i].id;
  return "#" + std::to_string(i + 1);
}

}  // namespace

std::vector<std::string> EvaluationTrace::ranked_ids() const {
  std::vector<std::string> ids;
  ids.reserve(ranking.size());
  for (auto i : ranking) ids.push_back(alternatives[i].id);
  return ids;
}

FuzzyMatrix aggregate_ratings(const DecisionProblem& problem) {
  const std::size_t m = problem.alternative_count();
  const std::size_t n = problem.criterion_count();
  const std::size_t K = problem.decision_maker_count();
  FuzzyMatrix out(m, n);

#pragma omp parallel for schedule(static) if (worth_parallel(m * n * K))
  for (Index ii = 0; ii < static_cast<Index>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j) {
      double lower = std::numeric_limits<double>::infinity();
      double modal_sum = 0.0;
      double upper = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < K; ++k) {
        const Tfn& t = problem.resolved_rating(k, i, j);
        lower = std::min(lower, t.lower());
        modal_sum += t.modal();
        upper = std::max(upper, t.upper());
      }
      out(i, j) = pooled(lower, modal_sum, K, upper);
    }
  }
  return out;
}

std::vector<Tfn> aggregate_weights(const DecisionProblem& problem) {
  const std::size_t n = problem.criterion_count();
  const std::size_t K = problem.decision_maker_count();
  std::vector<Tfn> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double lower = std::numeric_limits<double>::infinity();
    double modal_sum = 0.0;
    double upper = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < K; ++k) {
      const Tfn& w = problem.resolved_weight(k, j);
      lower = std::min(lower, w.lower());
      modal_sum += w.modal();
      upper = std::max(upper, w.upper());
    }
    out[j] = pooled(lower, modal_sum, K, upper);
  }
  return out;
}

FuzzyMatrix normalize(const FuzzyMatrix& aggregate, std::span<const Criterion> criteria,
                      std::span<const Alternative> alternatives) {
  const std::size_t m = aggregate.rows();
  const std::size_t n = aggregate.cols();
  if (criteria.size() != n) {
    throw ValidationError("normalize: " + std::to_string(criteria.size()) + " criteria for a matrix with " +
                          std::to_string(n) + " columns");
  }

  // Column extrema: largest upper bound (benefit) and smallest lower bound (cost).
  std::vector<double> column_max(n, -std::numeric_limits<double>::infinity());
  std::vector<double> column_min(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static) if (worth_parallel(m * n))
  for (Index jj = 0; jj < static_cast<Index>(n); ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    for (std::size_t i = 0; i < m; ++i) {
      column_max[j] = std::max(column_max[j], aggregate(i, j).upper());
      column_min[j] = std::min(column_min[j], aggregate(i, j).lower());
    }
  }

  // Domain checks happen up front so the transform below cannot throw.
  for (std::size_t j = 0; j < n; ++j) {
    if (criteria[j].sense == Sense::Benefit) {
      if (m > 0 && !(column_max[j] > 0.0)) {
        throw DomainError("benefit criterion '" + criteria[j].id + "' has no positive upper bound to normalize by", {},
                          criteria[j].id);
      }
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!(aggregate(i, j).lower() > 0.0)) {
        std::ostringstream os;
        os << "cost criterion '" << criteria[j].id << "' has a non-positive component for alternative '"
           << alternative_label(alternatives, i) << "': " << aggregate(i, j);
        throw DomainError(os.str(), alternative_label(alternatives, i), criteria[j].id);
      }
    }
  }

  FuzzyMatrix out(m, n);
#pragma omp parallel for schedule(static) if (worth_parallel(m * n))
  for (Index ii = 0; ii < static_cast<Index>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = criteria[j].sense == Sense::Benefit ? scale_divide(aggregate(i, j), column_max[j])
                                                      : inverse_scale(column_min[j], aggregate(i, j));
    }
  }
  return out;
}

FuzzyMatrix apply_weights(const FuzzyMatrix& normalized, std::span<const Tfn> weights) {
  const std::size_t m = normalized.rows();
  const std::size_t n = normalized.cols();
  if (weights.size() != n) {
    throw ValidationError("apply_weights: " + std::to_string(weights.size()) + " weights for a matrix with " +
                          std::to_string(n) + " columns");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (weights[j].lower() < 0.0) throw DomainError("negative criterion weight in column " + std::to_string(j + 1));
  }
  for (const auto& cell : normalized.cells()) {
    if (cell.lower() < 0.0) throw DomainError("negative component in normalized matrix");
  }

  FuzzyMatrix out(m, n);
#pragma omp parallel for schedule(static) if (worth_parallel(m * n))
  for (Index ii = 0; ii < static_cast<Index>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j) out(i, j) = multiply(normalized(i, j), weights[j]);
  }
  return out;
}

IdealSolutions ideal_solutions(const FuzzyMatrix& weighted) {
  const std::size_t m = weighted.rows();
  const std::size_t n = weighted.cols();
  if (m == 0) throw ValidationError("ideal solutions need at least one alternative");

  IdealSolutions ideals{std::vector<Tfn>(n), std::vector<Tfn>(n)};
#pragma omp parallel for schedule(static) if (worth_parallel(m * n))
  for (Index jj = 0; jj < static_cast<Index>(n); ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    double best = weighted(0, j).upper();
    double worst = weighted(0, j).lower();
    for (std::size_t i = 1; i < m; ++i) {
      best = std::max(best, weighted(i, j).upper());
      worst = std::min(worst, weighted(i, j).lower());
    }
    ideals.fpis[j] = Tfn::crisp(best);
    ideals.fnis[j] = Tfn::crisp(worst);
  }
  return ideals;
}

Separations separations(const FuzzyMatrix& weighted, const IdealSolutions& ideals) {
  const std::size_t m = weighted.rows();
  const std::size_t n = weighted.cols();
  if (ideals.fpis.size() != n || ideals.fnis.size() != n) {
    throw ValidationError("separations: ideal solutions do not match the matrix width");
  }

  Separations out{DistanceTable(m, n), std::vector<double>(m), std::vector<double>(m)};
#pragma omp parallel for schedule(static) if (worth_parallel(m * n))
  for (Index ii = 0; ii < static_cast<Index>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double d_star = 0.0;
    double d_minus = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const CriterionDistance d{vertex_distance(weighted(i, j), ideals.fpis[j]),
                                vertex_distance(weighted(i, j), ideals.fnis[j])};
      out.per_criterion(i, j) = d;
      d_star += d.to_fpis;
      d_minus += d.to_fnis;
    }
    out.d_star[i] = d_star;
    out.d_minus[i] = d_minus;
  }
  return out;
}

double closeness(double d_star, double d_minus) noexcept {
  const double total = d_minus + d_star;
  if (total == 0.0) return 1.0;
  return d_minus / total;
}

std::vector<std::size_t> rank_by_closeness(std::span<const double> closeness) {
  std::vector<std::size_t> order(closeness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return closeness[a] > closeness[b]; });
  return order;
}

EvaluationTrace evaluate(const DecisionProblem& problem) {
  EvaluationTrace trace;
  trace.alternatives = problem.alternatives();
  trace.criteria = problem.criteria();

  trace.aggregate_weights = aggregate_weights(problem);
  trace.aggregate_ratings = aggregate_ratings(problem);
  trace.normalized = normalize(trace.aggregate_ratings, trace.criteria, trace.alternatives);
  trace.weighted = apply_weights(trace.normalized, trace.aggregate_weights);
  trace.ideals = ideal_solutions(trace.weighted);

  auto seps = separations(trace.weighted, trace.ideals);
  trace.distances = std::move(seps.per_criterion);
  trace.d_star = std::move(seps.d_star);
  trace.d_minus = std::move(seps.d_minus);

  const std::size_t m = trace.alternatives.size();
  trace.closeness.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    trace.closeness[i] = closeness(trace.d_star[i], trace.d_minus[i]);
    if (trace.d_star[i] == 0.0 && trace.d_minus[i] == 0.0) {
      trace.warnings.push_back("alternative '" + trace.alternatives[i].id +
                               "' coincides with both ideal solutions; closeness set to 1.0");
    }
  }
  trace.ranking = rank_by_closeness(trace.closeness);
  return trace;
}

}  // namespace ftopsis
