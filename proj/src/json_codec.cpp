#include "ftopsis/json_codec.hpp"

#include <unordered_map>

#include "ftopsis/errors.hpp"

namespace ftopsis::json {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const Json& member(const Json& object, const char* key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(path, std::string("missing required field '") + key + "'");
  return *it;
}

void expect_object(const Json& value, const std::string& path) {
  if (!value.is_object()) schema_error(path, "expected an object");
}

void expect_array(const Json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
}

std::string string_at(const Json& value, const std::string& path) {
  if (!value.is_string()) schema_error(path, "expected a string");
  return value.get<std::string>();
}

double number_at(const Json& value, const std::string& path) {
  if (!value.is_number()) schema_error(path, "expected a number");
  return value.get<double>();
}

std::string optional_string(const Json& object, const char* key, const std::string& fallback,
                            const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) return fallback;
  return string_at(*it, path + "." + key);
}

template <typename Entity, typename Extra>
std::vector<Entity> roster_from_json(const Json& doc, const char* key, Extra&& extra) {
  const std::string path = key;
  const Json& list = member(doc, key, "document");
  expect_array(list, path);
  std::vector<Entity> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    const Json& item = list[i];
    expect_object(item, item_path);
    Entity entity;
    entity.id = string_at(member(item, "id", item_path), item_path + ".id");
    entity.name = optional_string(item, "name", entity.id, item_path);
    extra(entity, item, item_path);
    out.push_back(std::move(entity));
  }
  return out;
}

auto no_extra = [](auto&, const Json&, const std::string&) {};

Json grid_to_json(const FuzzyMatrix& matrix) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    Json row = Json::array();
    for (const auto& cell : matrix.row(i)) row.push_back(to_json(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

FuzzyMatrix grid_from_json(const Json& value, std::size_t m, std::size_t n, const std::string& path) {
  expect_array(value, path);
  if (value.size() != m) schema_error(path, "expected " + std::to_string(m) + " rows");
  FuzzyMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    expect_array(value[i], row_path);
    if (value[i].size() != n) schema_error(row_path, "expected " + std::to_string(n) + " cells");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = tfn_from_json(value[i][j], row_path + "[" + std::to_string(j) + "]");
  }
  return out;
}

std::vector<double> numbers_from_json(const Json& value, std::size_t count, const std::string& path) {
  expect_array(value, path);
  if (value.size() != count) schema_error(path, "expected " + std::to_string(count) + " values");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(number_at(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Tfn> tfns_from_json(const Json& value, std::size_t count, const std::string& path) {
  expect_array(value, path);
  if (value.size() != count) schema_error(path, "expected " + std::to_string(count) + " values");
  std::vector<Tfn> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(tfn_from_json(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json tfns_to_json(const std::vector<Tfn>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

void check_schema_version(const Json& doc, bool required) {
  auto it = doc.find("schemaVersion");
  if (it == doc.end()) {
    if (required) schema_error("document", "missing required field 'schemaVersion'");
    return;
  }
  const std::string version = string_at(*it, "schemaVersion");
  if (version != kSchemaVersion) {
    schema_error("schemaVersion", "unsupported version '" + version + "' (expected '" + std::string(kSchemaVersion) +
                                      "')");
  }
}

}  // namespace

Json to_json(const Tfn& t) { return Json::array({t.lower(), t.modal(), t.upper()}); }

Tfn tfn_from_json(const Json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 3) schema_error(path, "expected a [lower, modal, upper] array");
  const double a = number_at(value[0], path + "[0]");
  const double b = number_at(value[1], path + "[1]");
  const double c = number_at(value[2], path + "[2]");
  if (!is_valid_tfn(a, b, c)) schema_error(path, "fuzzy number must satisfy lower <= modal <= upper");
  return {a, b, c};
}

Json assessment_to_json(const Assessment& assessment) {
  if (const auto* code = std::get_if<std::string>(&assessment)) return *code;
  return to_json(std::get<Tfn>(assessment));
}

Assessment assessment_from_json(const Json& value, const std::string& path) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) return tfn_from_json(value, path);
  schema_error(path, "expected a term code or a [lower, modal, upper] array");
}

Json scale_to_json(const LinguisticScale& scale) {
  Json terms = Json::array();
  for (const auto& term : scale.terms()) {
    terms.push_back(Json{{"code", term.code}, {"label", term.label}, {"value", to_json(term.value)}});
  }
  return terms;
}

LinguisticScale scale_from_json(const Json& value, ScaleRole role, const std::string& path) {
  expect_array(value, path);
  if (value.size() < 2) schema_error(path, "a custom scale needs at least two terms");
  std::vector<LinguisticTerm> terms;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    const Json& item = value[i];
    expect_object(item, item_path);
    LinguisticTerm term;
    term.code = string_at(member(item, "code", item_path), item_path + ".code");
    term.label = optional_string(item, "label", term.code, item_path);
    term.value = tfn_from_json(member(item, "value", item_path), item_path + ".value");
    terms.push_back(std::move(term));
  }
  try {
    return {role, std::move(terms)};
  } catch (const ValidationError& e) {
    schema_error(path, e.what());
  }
}

Json structure_to_json(const ProblemStructure& structure) {
  Json doc = Json::object();
  if (!(structure.assessment_scale == default_assessment_scale()) ||
      !(structure.weight_scale == default_weight_scale())) {
    doc["scales"] = Json{{"assessment", scale_to_json(structure.assessment_scale)},
                         {"weight", scale_to_json(structure.weight_scale)}};
  }
  Json criteria = Json::array();
  for (const auto& c : structure.criteria) {
    criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"sense", std::string(to_string(c.sense))}});
  }
  Json alternatives = Json::array();
  for (const auto& a : structure.alternatives) alternatives.push_back(Json{{"id", a.id}, {"name", a.name}});
  Json dms = Json::array();
  for (const auto& d : structure.decision_makers) dms.push_back(Json{{"id", d.id}, {"name", d.name}});
  doc["criteria"] = std::move(criteria);
  doc["alternatives"] = std::move(alternatives);
  doc["decisionMakers"] = std::move(dms);
  return doc;
}

ProblemStructure structure_from_json(const Json& doc) {
  expect_object(doc, "document");
  ProblemStructure structure;
  if (auto it = doc.find("scales"); it != doc.end()) {
    expect_object(*it, "scales");
    if (auto a = it->find("assessment"); a != it->end()) {
      structure.assessment_scale = scale_from_json(*a, ScaleRole::AlternativeAssessment, "scales.assessment");
    }
    if (auto w = it->find("weight"); w != it->end()) {
      structure.weight_scale = scale_from_json(*w, ScaleRole::CriterionWeight, "scales.weight");
    }
  }
  structure.criteria = roster_from_json<Criterion>(doc, "criteria", [](Criterion& c, const Json& item,
                                                                        const std::string& path) {
    const std::string sense = string_at(member(item, "sense", path), path + ".sense");
    auto parsed = parse_sense(sense);
    if (!parsed) schema_error(path + ".sense", "expected 'benefit' or 'cost', got '" + sense + "'");
    c.sense = *parsed;
  });
  structure.alternatives = roster_from_json<Alternative>(doc, "alternatives", no_extra);
  structure.decision_makers = roster_from_json<DecisionMaker>(doc, "decisionMakers", no_extra);
  structure.validate();
  return structure;
}

void apply_decision_maker_assessments(ProblemDraft& draft, std::string_view dm, const Json& payload,
                                      const std::string& path) {
  expect_object(payload, path);
  for (const auto& [key, _] : payload.items()) {
    if (key != "weights" && key != "ratings") schema_error(path, "unexpected field '" + key + "'");
  }
  if (auto w = payload.find("weights"); w != payload.end()) {
    const std::string weights_path = path + ".weights";
    expect_object(*w, weights_path);
    for (const auto& [criterion, value] : w->items()) {
      draft.set_weight(dm, criterion, assessment_from_json(value, weights_path + "." + criterion));
    }
  }
  if (auto r = payload.find("ratings"); r != payload.end()) {
    const std::string ratings_path = path + ".ratings";
    expect_object(*r, ratings_path);
    for (const auto& [alternative, row] : r->items()) {
      const std::string row_path = ratings_path + "." + alternative;
      expect_object(row, row_path);
      for (const auto& [criterion, value] : row.items()) {
        draft.set_rating(dm, alternative, criterion, assessment_from_json(value, row_path + "." + criterion));
      }
    }
  }
}

ProblemDraft draft_from_json(const Json& doc) {
  expect_object(doc, "document");
  check_schema_version(doc, false);
  ProblemDraft draft(structure_from_json(doc));

  // Regroup the document's {dm: {...}} sections into per-DM payloads.
  std::vector<std::pair<std::string, Json>> per_dm;
  std::unordered_map<std::string, std::size_t> slot;
  auto payload_for = [&](const std::string& dm) -> Json& {
    auto [it, inserted] = slot.emplace(dm, per_dm.size());
    if (inserted) per_dm.emplace_back(dm, Json::object());
    return per_dm[it->second].second;
  };
  for (const char* section : {"weights", "ratings"}) {
    auto it = doc.find(section);
    if (it == doc.end()) continue;
    expect_object(*it, section);
    for (const auto& [dm, body] : it->items()) payload_for(dm)[section] = body;
  }
  for (const auto& [dm, payload] : per_dm) apply_decision_maker_assessments(draft, dm, payload, dm);
  return draft;
}

Json problem_to_json(const DecisionProblem& problem) {
  Json doc = Json::object();
  doc["schemaVersion"] = std::string(kSchemaVersion);
  const Json structure = structure_to_json(problem.structure());
  for (const auto& [key, value] : structure.items()) doc[key] = value;

  const auto& alts = problem.alternatives();
  const auto& crits = problem.criteria();
  Json weights = Json::object();
  Json ratings = Json::object();
  for (std::size_t k = 0; k < problem.decision_maker_count(); ++k) {
    const auto& dm = problem.decision_makers()[k].id;
    Json w = Json::object();
    for (std::size_t j = 0; j < crits.size(); ++j) w[crits[j].id] = assessment_to_json(problem.weight(k, j));
    weights[dm] = std::move(w);
    Json r = Json::object();
    for (std::size_t i = 0; i < alts.size(); ++i) {
      Json row = Json::object();
      for (std::size_t j = 0; j < crits.size(); ++j) row[crits[j].id] = assessment_to_json(problem.rating(k, i, j));
      r[alts[i].id] = std::move(row);
    }
    ratings[dm] = std::move(r);
  }
  doc["weights"] = std::move(weights);
  doc["ratings"] = std::move(ratings);
  return doc;
}

DecisionProblem problem_from_json(const Json& doc) {
  expect_object(doc, "document");
  check_schema_version(doc, true);
  return draft_from_json(doc).build();
}

Json missing_to_json(const std::vector<MissingCell>& missing) {
  Json out = Json::array();
  for (const auto& cell : missing) {
    Json item{{"kind", cell.alternative ? "rating" : "weight"}, {"decisionMaker", cell.decision_maker}};
    if (cell.alternative) item["alternative"] = *cell.alternative;
    item["criterion"] = cell.criterion;
    out.push_back(std::move(item));
  }
  return out;
}

Json trace_to_json(const EvaluationTrace& trace) {
  Json doc = Json::object();
  doc["schemaVersion"] = std::string(kSchemaVersion);
  Json alternatives = Json::array();
  for (const auto& a : trace.alternatives) alternatives.push_back(Json{{"id", a.id}, {"name", a.name}});
  Json criteria = Json::array();
  for (const auto& c : trace.criteria) {
    criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"sense", std::string(to_string(c.sense))}});
  }
  doc["alternatives"] = std::move(alternatives);
  doc["criteria"] = std::move(criteria);
  doc["aggregateWeights"] = tfns_to_json(trace.aggregate_weights);
  doc["aggregateRatings"] = grid_to_json(trace.aggregate_ratings);
  doc["normalized"] = grid_to_json(trace.normalized);
  doc["weighted"] = grid_to_json(trace.weighted);
  doc["ideals"] = Json{{"fpis", tfns_to_json(trace.ideals.fpis)}, {"fnis", tfns_to_json(trace.ideals.fnis)}};

  Json distances = Json::array();
  for (std::size_t i = 0; i < trace.distances.rows(); ++i) {
    Json row = Json::array();
    for (const auto& d : trace.distances.row(i)) row.push_back(Json{{"toFpis", d.to_fpis}, {"toFnis", d.to_fnis}});
    distances.push_back(std::move(row));
  }
  doc["distances"] = std::move(distances);
  doc["dStar"] = trace.d_star;
  doc["dMinus"] = trace.d_minus;
  doc["closeness"] = trace.closeness;
  doc["ranking"] = trace.ranked_ids();
  doc["warnings"] = trace.warnings;
  return doc;
}

EvaluationTrace trace_from_json(const Json& doc) {
  expect_object(doc, "trace");
  check_schema_version(doc, true);
  EvaluationTrace trace;
  trace.alternatives = roster_from_json<Alternative>(doc, "alternatives", no_extra);
  trace.criteria = roster_from_json<Criterion>(doc, "criteria", [](Criterion& c, const Json& item,
                                                                    const std::string& path) {
    auto parsed = parse_sense(string_at(member(item, "sense", path), path + ".sense"));
    if (!parsed) schema_error(path + ".sense", "expected 'benefit' or 'cost'");
    c.sense = *parsed;
  });
  const std::size_t m = trace.alternatives.size();
  const std::size_t n = trace.criteria.size();

  trace.aggregate_weights = tfns_from_json(member(doc, "aggregateWeights", "trace"), n, "aggregateWeights");
  trace.aggregate_ratings = grid_from_json(member(doc, "aggregateRatings", "trace"), m, n, "aggregateRatings");
  trace.normalized = grid_from_json(member(doc, "normalized", "trace"), m, n, "normalized");
  trace.weighted = grid_from_json(member(doc, "weighted", "trace"), m, n, "weighted");
  const Json& ideals = member(doc, "ideals", "trace");
  trace.ideals.fpis = tfns_from_json(member(ideals, "fpis", "ideals"), n, "ideals.fpis");
  trace.ideals.fnis = tfns_from_json(member(ideals, "fnis", "ideals"), n, "ideals.fnis");

  const Json& distances = member(doc, "distances", "trace");
  expect_array(distances, "distances");
  if (distances.size() != m) schema_error("distances", "expected " + std::to_string(m) + " rows");
  trace.distances = DistanceTable(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_path = "distances[" + std::to_string(i) + "]";
    expect_array(distances[i], row_path);
    if (distances[i].size() != n) schema_error(row_path, "expected " + std::to_string(n) + " cells");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string cell_path = row_path + "[" + std::to_string(j) + "]";
      const Json& cell = distances[i][j];
      expect_object(cell, cell_path);
      trace.distances(i, j) = {number_at(member(cell, "toFpis", cell_path), cell_path + ".toFpis"),
                               number_at(member(cell, "toFnis", cell_path), cell_path + ".toFnis")};
    }
  }
  trace.d_star = numbers_from_json(member(doc, "dStar", "trace"), m, "dStar");
  trace.d_minus = numbers_from_json(member(doc, "dMinus", "trace"), m, "dMinus");
  trace.closeness = numbers_from_json(member(doc, "closeness", "trace"), m, "closeness");

  const Json& ranking = member(doc, "ranking", "trace");
  expect_array(ranking, "ranking");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(trace.alternatives[i].id, i);
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    const std::string id = string_at(ranking[r], "ranking[" + std::to_string(r) + "]");
    auto it = index.find(id);
    if (it == index.end()) throw ReferenceError("ranking names unknown alternative '" + id + "'", id);
    trace.ranking.push_back(it->second);
  }
  if (auto w = doc.find("warnings"); w != doc.end()) {
    expect_array(*w, "warnings");
    for (std::size_t i = 0; i < w->size(); ++i) {
      trace.warnings.push_back(string_at((*w)[i], "warnings[" + std::to_string(i) + "]"));
    }
  }
  return trace;
}

Json summary_to_json(const EvaluationTrace& trace) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < trace.ranking.size(); ++r) {
    const std::size_t i = trace.ranking[r];
    rows.push_back(Json{{"rank", r + 1},
                        {"alternative", trace.alternatives[i].id},
                        {"dStar", trace.d_star[i]},
                        {"dMinus", trace.d_minus[i]},
                        {"closeness", trace.closeness[i]}});
  }
  return Json{{"schemaVersion", std::string(kSchemaVersion)},
              {"ranking", trace.ranked_ids()},
              {"results", std::move(rows)},
              {"warnings", trace.warnings}};
}

}  // namespace ftopsis::json
