#include "doctest.h"
#include "fixtures.hpp"
#include "ftopsis/errors.hpp"
#include "ftopsis/problem.hpp"

using namespace ftopsis;

namespace {

ProblemStructure small_structure() {
  ProblemStructure s;
  s.alternatives = {{"A1", ""}, {"A2", ""}};
  s.criteria = {{"C1", "", Sense::Cost}, {"C2", "", Sense::Benefit}};
  s.decision_makers = {{"DM1", ""}};
  return s;
}

}  // namespace

TEST_CASE("sense parsing") {
  CHECK(parse_sense("benefit") == Sense::Benefit);
  CHECK(parse_sense("Cost") == Sense::Cost);
  CHECK_FALSE(parse_sense("neutral").has_value());
  CHECK(to_string(Sense::Cost) == "cost");
}

TEST_CASE("structure validation reports every problem") {
  ProblemStructure s = small_structure();
  CHECK_NOTHROW(s.validate());

  s.alternatives.clear();
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = small_structure();
  s.criteria.push_back({"C1", "again", Sense::Benefit});
  s.decision_makers.push_back({"", ""});
  try {
    s.validate();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("duplicate criterion id 'C1'") != std::string::npos);
    CHECK(what.find("empty") != std::string::npos);
  }

  s = small_structure();
  s.weight_scale = default_assessment_scale();
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("problem resolves codes and raw numbers") {
  std::vector<Assessment> weights{std::string("H"), Tfn(0.5, 1, 2)};
  std::vector<Assessment> ratings{std::string("F"), std::string("VG"), std::string("P"), Tfn(2, 3, 4)};
  const DecisionProblem p(small_structure(), weights, ratings);
  CHECK(p.resolved_weight(0, 0) == Tfn(5, 7, 9));
  CHECK(p.resolved_weight(0, 1) == Tfn(0.5, 1, 2));
  CHECK(p.resolved_rating(0, 0, 1) == Tfn(7, 9, 9));
  CHECK(p.resolved_rating(0, 1, 1) == Tfn(2, 3, 4));
  CHECK(std::get<std::string>(p.rating(0, 1, 0)) == "P");
}

TEST_CASE("problem construction rejects bad cells") {
  SUBCASE("wrong counts") {
    CHECK_THROWS_AS(DecisionProblem(small_structure(), {std::string("H")}, {}), ValidationError);
  }
  SUBCASE("unknown term names the cell") {
    std::vector<Assessment> weights{std::string("H"), std::string("H")};
    std::vector<Assessment> ratings{std::string("F"), std::string("XL"), std::string("P"), std::string("P")};
    try {
      DecisionProblem(small_structure(), weights, ratings);
      FAIL("expected UnknownTermError");
    } catch (const UnknownTermError& e) {
      CHECK(e.code() == "XL");
      CHECK(std::string(e.what()).find("DM1/A1/C2") != std::string::npos);
    }
  }
  SUBCASE("rating code from the weight scale") {
    std::vector<Assessment> weights{std::string("H"), std::string("H")};
    std::vector<Assessment> ratings{std::string("F"), std::string("VH"), std::string("P"), std::string("P")};
    CHECK_THROWS_AS(DecisionProblem(small_structure(), weights, ratings), UnknownTermError);
  }
  SUBCASE("negative raw number") {
    std::vector<Assessment> weights{std::string("H"), Tfn(-1, 0, 1)};
    std::vector<Assessment> ratings(4, std::string("F"));
    CHECK_THROWS_AS(DecisionProblem(small_structure(), weights, ratings), ValidationError);
  }
}

TEST_CASE("draft tracks missing cells") {
  ProblemDraft draft(small_structure());
  CHECK_FALSE(draft.complete());
  CHECK(draft.missing().size() == 2 + 4);
  CHECK(draft.missing().front() == MissingCell{"DM1", std::nullopt, "C1"});
  CHECK(draft.missing().front().describe() == "weight DM1/C1");

  draft.set_weight("DM1", "C1", std::string("H"));
  draft.set_weight("DM1", "C2", std::string("L"));
  draft.set_rating("DM1", "A1", "C1", std::string("F"));
  draft.set_rating("DM1", "A1", "C2", std::string("F"));
  draft.set_rating("DM1", "A2", "C1", std::string("G"));
  REQUIRE(draft.missing().size() == 1);
  CHECK(draft.missing()[0] == MissingCell{"DM1", std::string("A2"), "C2"});
  CHECK(draft.missing()[0].describe() == "rating DM1/A2/C2");
  try {
    draft.build();
    FAIL("expected CompletenessError");
  } catch (const CompletenessError& e) {
    REQUIRE(e.missing().size() == 1);
    CHECK(e.missing()[0].alternative == "A2");
  }

  CHECK_THROWS_AS(draft.set_rating("DM9", "A1", "C1", std::string("F")), ReferenceError);
  CHECK_THROWS_AS(draft.set_rating("DM1", "A9", "C1", std::string("F")), ReferenceError);
  CHECK_THROWS_AS(draft.set_weight("DM1", "C9", std::string("H")), ReferenceError);
  CHECK_THROWS_AS(draft.set_weight("DM1", "C1", std::string("G")), UnknownTermError);

  draft.set_rating("DM1", "A2", "C2", std::string("VG"));
  draft.set_weight("DM1", "C1", std::string("VH"));
  const DecisionProblem p = draft.build();
  CHECK(p.resolved_weight(0, 0) == Tfn(7, 9, 9));
  CHECK(ProblemDraft::from(p).build() == p);
}

TEST_CASE("laptop fixture shape") {
  const auto p = fixtures::laptop_problem();
  CHECK(p.alternative_count() == 2);
  CHECK(p.criterion_count() == 4);
  CHECK(p.decision_maker_count() == 3);
  CHECK(p.criteria()[0].sense == Sense::Cost);
  CHECK(p.criteria()[3].sense == Sense::Benefit);
}
