#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "fixtures.hpp"
#include "ftopsis/engine.hpp"

using namespace ftopsis;

namespace {

bool ordered(const FuzzyMatrix& m) {
  return std::all_of(m.cells().begin(), m.cells().end(),
                     [](const Tfn& t) { return t.lower() <= t.modal() && t.modal() <= t.upper(); });
}

DecisionProblem with_rating(const DecisionProblem& p, std::size_t dm, std::size_t alt, std::size_t crit,
                            Assessment value) {
  ProblemDraft draft = ProblemDraft::from(p);
  draft.set_rating(p.decision_makers()[dm].id, p.alternatives()[alt].id, p.criteria()[crit].id, std::move(value));
  return draft.build();
}

}  // namespace

TEST_CASE("independent reference agrees on random problems") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 1000; ++n) {
    const auto c = fixtures::random_case(rng);
    const auto trace = evaluate(c.problem);
    const auto ref = ftopsis_reference::evaluate(c.reference);
    const std::size_t cols = c.problem.criterion_count();
    for (std::size_t i = 0; i < c.problem.alternative_count(); ++i) {
      REQUIRE(std::abs(trace.closeness[i] - ref.closeness[i]) <= 1e-9);
      REQUIRE(std::abs(trace.d_star[i] - ref.d_star[i]) <= 1e-9);
      REQUIRE(std::abs(trace.d_minus[i] - ref.d_minus[i]) <= 1e-9);
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& r = ref.weighted[i * cols + j];
        const auto& v = trace.weighted(i, j);
        REQUIRE(std::abs(v.lower() - r[0]) <= 1e-9);
        REQUIRE(std::abs(v.modal() - r[1]) <= 1e-9);
        REQUIRE(std::abs(v.upper() - r[2]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("normalized components stay in [0,1] and every stage keeps its ordering") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 500; ++n) {
    const auto trace = evaluate(fixtures::random_case(rng, 4, 4, 4).problem);
    for (const Tfn& t : trace.normalized.cells()) {
      REQUIRE(t.lower() >= 0.0);
      REQUIRE(t.upper() <= 1.0);
    }
    REQUIRE(ordered(trace.aggregate_ratings));
    REQUIRE(ordered(trace.normalized));
    REQUIRE(ordered(trace.weighted));
    for (const Tfn& w : trace.aggregate_weights) REQUIRE(w.lower() <= w.modal());
    for (std::size_t j = 0; j < trace.ideals.fpis.size(); ++j)
      REQUIRE(trace.ideals.fpis[j].lower() >= trace.ideals.fnis[j].lower());
    for (double cc : trace.closeness) {
      REQUIRE(cc >= 0.0);
      REQUIRE(cc <= 1.0);
    }
  }
}

TEST_CASE("decision maker order does not matter") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    const auto c = fixtures::random_case(rng);
    std::vector<int> perm(c.problem.decision_maker_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = evaluate(c.problem);
    const auto b = evaluate(fixtures::permute_decision_makers(c.problem, perm));
    // min and max are exact; the mean may differ in the last bit with summation order.
    for (std::size_t i = 0; i < a.closeness.size(); ++i) REQUIRE(std::abs(a.closeness[i] - b.closeness[i]) <= 1e-12);
    for (std::size_t k = 0; k < a.aggregate_ratings.cells().size(); ++k) {
      REQUIRE(a.aggregate_ratings.cells()[k].lower() == b.aggregate_ratings.cells()[k].lower());
      REQUIRE(std::abs(a.aggregate_ratings.cells()[k].modal() - b.aggregate_ratings.cells()[k].modal()) <= 1e-12);
    }
    REQUIRE(a.ranked_ids() == b.ranked_ids());
  }
}

TEST_CASE("alternative order permutes closeness") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 200; ++n) {
    const auto c = fixtures::random_case(rng);
    std::vector<int> perm(c.problem.alternative_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = evaluate(c.problem);
    const auto b = evaluate(fixtures::permute_alternatives(c.problem, perm));
    for (std::size_t i = 0; i < perm.size(); ++i) REQUIRE(b.closeness[i] == a.closeness[perm[i]]);
    // Ties resolve by input order, so only compare when closeness values are distinct.
    auto sorted = a.closeness;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) REQUIRE(a.ranked_ids() == b.ranked_ids());
  }
}

TEST_CASE("raising a benefit rating never loses a place already won") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int n = 0; n < 3000; ++n) {
    const auto c = fixtures::random_case(rng);
    const auto& p = c.problem;
    std::uniform_int_distribution<std::size_t> dm(0, p.decision_maker_count() - 1),
        alt(0, p.alternative_count() - 1), crit(0, p.criterion_count() - 1);
    const std::size_t k = dm(rng), i = alt(rng), j = crit(rng);
    if (p.criteria()[j].sense != Sense::Benefit) continue;
    const int old_term = c.rating_terms[(k * p.alternative_count() + i) * p.criterion_count() + j];
    if (old_term == 4) continue;
    const auto before = evaluate(p);
    for (int t = old_term + 1; t < 5; ++t) {
      const auto after = evaluate(with_rating(p, k, i, j, fixtures::kAssessmentCodes[t]));
      for (std::size_t h = 0; h < p.alternative_count(); ++h) {
        if (h == i || !(before.closeness[i] > before.closeness[h])) continue;
        CAPTURE(n);
        REQUIRE(after.closeness[i] >= after.closeness[h] - 1e-12);
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("closeness itself is not monotone in a single rating") {
  // A1 = (VP, G), A2 = (P, VG), weights (VL, VL), both benefit. A1 holds the
  // lowest lower bound on C2, so raising it from G to VG drags the FNIS up too.
  ProblemStructure s;
  s.alternatives = {{"A1", ""}, {"A2", ""}};
  s.criteria = {{"C1", "", Sense::Benefit}, {"C2", "", Sense::Benefit}};
  s.decision_makers = {{"DM1", ""}};
  const std::vector<Assessment> w{std::string("VL"), std::string("VL")};
  const DecisionProblem before(s, w, {std::string("VP"), std::string("G"), std::string("P"), std::string("VG")});
  const DecisionProblem after(s, w, {std::string("VP"), std::string("VG"), std::string("P"), std::string("VG")});
  const double cc_before = evaluate(before).closeness[0];
  const double cc_after = evaluate(after).closeness[0];
  CHECK(cc_before == doctest::Approx(0.3526984).epsilon(1e-6));
  CHECK(cc_after == doctest::Approx(0.3497340).epsilon(1e-6));
  CHECK(cc_after < cc_before);
}

#ifdef _OPENMP
TEST_CASE("thread count does not change any bit of the trace") {
  std::mt19937_64 rng(6);
  ProblemStructure s;
  for (int i = 0; i < 300; ++i) s.alternatives.push_back({"A" + std::to_string(i), ""});
  for (int j = 0; j < 25; ++j) s.criteria.push_back({"C" + std::to_string(j), "", j % 4 == 0 ? Sense::Cost : Sense::Benefit});
  for (int k = 0; k < 4; ++k) s.decision_makers.push_back({"DM" + std::to_string(k), ""});
  std::uniform_int_distribution<int> term(0, 4);
  std::vector<Assessment> w, r;
  for (int n = 0; n < 4 * 25; ++n) w.emplace_back(fixtures::kWeightCodes[term(rng)]);
  for (int n = 0; n < 4 * 300 * 25; ++n) r.emplace_back(fixtures::kAssessmentCodes[term(rng)]);
  const DecisionProblem p(s, w, r);
  REQUIRE(p.alternative_count() * p.criterion_count() >= kParallelCellThreshold);

  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto serial = evaluate(p);
  omp_set_num_threads(4);
  const auto parallel = evaluate(p);
  omp_set_num_threads(saved);
  CHECK(serial == parallel);
}
#endif
