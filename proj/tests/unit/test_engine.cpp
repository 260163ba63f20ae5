#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "ftopsis/engine.hpp"
#include "ftopsis/errors.hpp"

using namespace ftopsis;

namespace {

constexpr double kTableTolerance = 0.001;

void check_cell(const Tfn& t, double l, double m, double u, double eps = kTableTolerance) {
  INFO("cell " << t << " vs (" << l << ", " << m << ", " << u << ")");
  CHECK(std::abs(t.lower() - l) <= eps);
  CHECK(std::abs(t.modal() - m) <= eps);
  CHECK(std::abs(t.upper() - u) <= eps);
}

DecisionProblem one_column(std::vector<std::string> ratings, Sense sense, std::string weight = "M") {
  ProblemStructure s;
  for (std::size_t i = 0; i < ratings.size(); ++i) s.alternatives.push_back({"A" + std::to_string(i + 1), ""});
  s.criteria = {{"C1", "", sense}};
  s.decision_makers = {{"DM1", ""}};
  std::vector<Assessment> r(ratings.begin(), ratings.end());
  return {std::move(s), {std::move(weight)}, std::move(r)};
}

}  // namespace

TEST_CASE("laptop example: aggregate matrix") {
  const auto m = aggregate_ratings(fixtures::laptop_problem());
  check_cell(m(0, 0), 3.000, 5.000, 7.000);
  check_cell(m(1, 0), 3.000, 6.333, 9.000);
  check_cell(m(0, 1), 7.000, 9.000, 9.000);
  check_cell(m(1, 1), 5.000, 7.667, 9.000);
  check_cell(m(0, 2), 1.000, 3.667, 7.000);
  check_cell(m(1, 2), 1.000, 3.000, 5.000);
  check_cell(m(0, 3), 1.000, 4.333, 7.000);
  check_cell(m(1, 3), 1.000, 3.667, 7.000);
}

TEST_CASE("laptop example: aggregate weights") {
  const auto w = aggregate_weights(fixtures::laptop_problem());
  REQUIRE(w.size() == 4);
  check_cell(w[0], 3, 17.0 / 3.0, 9, 1e-12);
  check_cell(w[1], 5, 23.0 / 3.0, 9, 1e-12);
  check_cell(w[2], 5, 23.0 / 3.0, 9, 1e-12);
  check_cell(w[3], 1, 11.0 / 3.0, 7, 1e-12);
}

TEST_CASE("laptop example: normalized matrix") {
  const auto trace = evaluate(fixtures::laptop_problem());
  const auto& n = trace.normalized;
  check_cell(n(0, 0), 0.429, 0.600, 1.000);
  check_cell(n(1, 0), 0.333, 0.474, 1.000);
  check_cell(n(0, 1), 0.778, 1.000, 1.000);
  check_cell(n(1, 1), 0.556, 0.852, 1.000);
  check_cell(n(0, 2), 0.143, 0.524, 1.000);
  check_cell(n(1, 2), 0.143, 0.429, 0.714);
  check_cell(n(0, 3), 0.143, 0.619, 1.000);
  check_cell(n(1, 3), 0.143, 0.524, 1.000);
}

TEST_CASE("laptop example: weighted matrix, ideals and distances") {
  const auto trace = evaluate(fixtures::laptop_problem());
  const auto& v = trace.weighted;
  check_cell(v(0, 0), 1.286, 3.400, 9.000);
  check_cell(v(1, 0), 1.000, 2.684, 9.000);
  check_cell(v(0, 1), 3.889, 7.667, 9.000);
  check_cell(v(1, 1), 2.778, 6.531, 9.000);
  check_cell(v(0, 2), 0.714, 4.016, 9.000);
  check_cell(v(1, 2), 0.714, 3.286, 6.429);
  check_cell(v(0, 3), 0.143, 2.270, 7.000);
  check_cell(v(1, 3), 0.143, 1.921, 7.000);

  CHECK(trace.ideals.fpis[0] == Tfn::crisp(9));
  CHECK(trace.ideals.fnis[0] == Tfn::crisp(1));
  CHECK(trace.ideals.fpis[2] == Tfn::crisp(9));
  check_cell(trace.ideals.fnis[2], 5.0 / 7.0, 5.0 / 7.0, 5.0 / 7.0, 1e-12);

  // FPIS(A1), FPIS(A2), FNIS(A1), FNIS(A2) per criterion.
  const double table[4][4] = {{5.503, 5.884, 4.824, 4.72},
                              {3.049, 3.864, 4.613, 4.195},
                              {5.582, 5.997, 5.149, 3.617},
                              {4.809, 4.926, 4.145, 4.089}};
  for (int j = 0; j < 4; ++j) {
    CAPTURE(j);
    CHECK(std::abs(trace.distances(0, j).to_fpis - table[j][0]) <= kTableTolerance);
    CHECK(std::abs(trace.distances(1, j).to_fpis - table[j][1]) <= kTableTolerance);
    CHECK(std::abs(trace.distances(0, j).to_fnis - table[j][2]) <= kTableTolerance);
    CHECK(std::abs(trace.distances(1, j).to_fnis - table[j][3]) <= kTableTolerance);
  }
  CHECK(std::abs(trace.d_star[0] - 18.943) <= 0.005);
}

TEST_CASE("laptop example: closeness and ranking") {
  const auto trace = evaluate(fixtures::laptop_problem());
  CHECK(std::abs(trace.closeness[0] - 0.497) <= kTableTolerance);
  CHECK(std::abs(trace.closeness[1] - 0.445) <= kTableTolerance);
  CHECK(trace.ranked_ids() == std::vector<std::string>{"A1", "A2"});
  CHECK(trace.warnings.empty());
}

TEST_CASE("price as a benefit criterion does not give the golden normalization") {
  auto structure = fixtures::laptop_problem().structure();
  structure.criteria[0].sense = Sense::Benefit;
  const auto agg = aggregate_ratings(fixtures::laptop_problem());
  const auto n = normalize(agg, structure.criteria);
  const bool reproduces = std::abs(n(0, 0).lower() - 0.429) <= kTableTolerance &&
                          std::abs(n(0, 0).modal() - 0.600) <= kTableTolerance &&
                          std::abs(n(1, 0).modal() - 0.474) <= kTableTolerance;
  CHECK_FALSE(reproduces);
}

TEST_CASE("aggregation of a single decision maker is the identity") {
  const auto p = one_column({"F"}, Sense::Benefit, "VH");
  CHECK(aggregate_ratings(p)(0, 0) == Tfn(3, 5, 7));
  CHECK(aggregate_weights(p)[0] == Tfn(7, 9, 9));
}

TEST_CASE("normalize") {
  const std::vector<Criterion> benefit{{"C1", "", Sense::Benefit}};
  FuzzyMatrix single(1, 1);
  single(0, 0) = {5, 7, 9};
  check_cell(normalize(single, benefit)(0, 0), 5.0 / 9, 7.0 / 9, 1.0, 1e-12);

  const std::vector<Criterion> cost{{"C1", "", Sense::Cost}};
  FuzzyMatrix zero(2, 1);
  zero(0, 0) = {3, 5, 7};
  zero(1, 0) = {0, 1, 3};
  const std::vector<Alternative> alts{{"A1", ""}, {"A2", ""}};
  try {
    normalize(zero, cost, alts);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.alternative() == "A2");
    CHECK(e.criterion() == "C1");
  }

  FuzzyMatrix all_zero(1, 1);
  all_zero(0, 0) = {0, 0, 0};
  CHECK_THROWS_AS(normalize(all_zero, benefit), DomainError);
}

TEST_CASE("apply_weights") {
  FuzzyMatrix n(1, 2);
  n(0, 0) = {0.2, 0.4, 0.6};
  n(0, 1) = {0.1, 0.5, 1.0};
  const std::vector<Tfn> unit{Tfn::crisp(1), Tfn::crisp(1)};
  CHECK(apply_weights(n, unit) == n);
  const std::vector<Tfn> w{{1, 2, 3}, {2, 2, 2}};
  CHECK(apply_weights(n, w)(0, 1) == Tfn(0.2, 1.0, 2.0));
}

TEST_CASE("ideals and separations for a single row") {
  FuzzyMatrix v(1, 2);
  v(0, 0) = {1, 2, 3};
  v(0, 1) = {4, 4, 4};
  const auto ideals = ideal_solutions(v);
  CHECK(ideals.fpis[0] == Tfn::crisp(3));
  CHECK(ideals.fnis[0] == Tfn::crisp(1));
  CHECK(ideals.fpis[1] == Tfn::crisp(4));

  FuzzyMatrix at_ideal(1, 1);
  at_ideal(0, 0) = Tfn::crisp(6);
  const auto s = separations(at_ideal, ideal_solutions(at_ideal));
  CHECK(s.d_star[0] == 0.0);
  CHECK(s.d_minus[0] == 0.0);
}

TEST_CASE("closeness edge cases") {
  CHECK(closeness(3.0, 0.0) == 0.0);
  CHECK(closeness(0.0, 2.0) == 1.0);
  CHECK(closeness(0.0, 0.0) == 1.0);
  CHECK(closeness(1.0, 3.0) == 0.75);
}

TEST_CASE("identical alternatives tie in input order") {
  const auto trace = evaluate(one_column({"G", "G", "VG", "G"}, Sense::Benefit));
  CHECK(trace.closeness[0] == trace.closeness[1]);
  CHECK(trace.closeness[0] == trace.closeness[3]);
  CHECK(trace.ranked_ids() == std::vector<std::string>{"A3", "A1", "A2", "A4"});

  const auto all_same = evaluate(one_column({"F", "F"}, Sense::Cost));
  CHECK(all_same.ranked_ids() == std::vector<std::string>{"A1", "A2"});

  const std::vector<double> cc{0.2, 0.5, 0.5, 0.9};
  CHECK(rank_by_closeness(cc) == std::vector<std::size_t>{3, 1, 2, 0});
}

TEST_CASE("coincident ideals give closeness 1 with a warning") {
  // Crisp identical ratings: FPIS equals FNIS in every column.
  ProblemStructure s;
  s.alternatives = {{"A1", ""}, {"A2", ""}};
  s.criteria = {{"C1", "", Sense::Benefit}};
  s.decision_makers = {{"DM1", ""}};
  const DecisionProblem p(s, {Tfn::crisp(2)}, {Tfn::crisp(4), Tfn::crisp(4)});
  const auto trace = evaluate(p);
  CHECK(trace.closeness == std::vector<double>{1.0, 1.0});
  CHECK_FALSE(trace.warnings.empty());
}

TEST_CASE("very good beats very poor on one benefit criterion") {
  const auto trace = evaluate(one_column({"VG", "VP"}, Sense::Benefit));
  // Weight M = (3,5,7); c* = 9; weighted A1 = (7/3, 5, 7), A2 = (1/3, 5/9, 7/3); FPIS 7, FNIS 1/3.
  const double a1_star = std::sqrt((std::pow(7.0 / 3 - 7, 2) + std::pow(5.0 - 7, 2)) / 3);
  const double a1_minus = std::sqrt((std::pow(2.0, 2) + std::pow(5 - 1.0 / 3, 2) + std::pow(7 - 1.0 / 3, 2)) / 3);
  const double a2_star = std::sqrt((std::pow(1.0 / 3 - 7, 2) + std::pow(5.0 / 9 - 7, 2) + std::pow(7.0 / 3 - 7, 2)) / 3);
  const double a2_minus = std::sqrt((std::pow(5.0 / 9 - 1.0 / 3, 2) + std::pow(7.0 / 3 - 1.0 / 3, 2)) / 3);
  CHECK(trace.d_star[0] == doctest::Approx(a1_star).epsilon(1e-12));
  CHECK(trace.d_minus[0] == doctest::Approx(a1_minus).epsilon(1e-12));
  CHECK(trace.closeness[0] == doctest::Approx(a1_minus / (a1_minus + a1_star)).epsilon(1e-12));
  CHECK(trace.closeness[1] == doctest::Approx(a2_minus / (a2_minus + a2_star)).epsilon(1e-12));
  CHECK(trace.ranked_ids() == std::vector<std::string>{"A1", "A2"});
}

TEST_CASE("evaluate reports cost-column domain errors by name") {
  ProblemStructure s;
  s.alternatives = {{"A1", ""}, {"Zero", ""}};
  s.criteria = {{"Price", "", Sense::Cost}};
  s.decision_makers = {{"DM1", ""}};
  const DecisionProblem p(s, {std::string("M")}, {Tfn(1, 2, 3), Tfn(0, 1, 2)});
  try {
    evaluate(p);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.alternative() == "Zero");
    CHECK(e.criterion() == "Price");
    CHECK(std::string(e.what()).find("Zero") != std::string::npos);
  }
}
