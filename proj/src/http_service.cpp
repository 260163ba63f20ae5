#include "ftopsis/http_service.hpp"

#include <charconv>

#include "httplib.h"

namespace ftopsis::service {

namespace {

using json::Json;

constexpr const char* kJson = "application/json";

constexpr const char* kPlaceholderPage =
    "<!doctype html><html><head><meta charset=\"utf-8\"><title>Fuzzy TOPSIS workbench</title></head>"
    "<body><h1>Fuzzy TOPSIS decision service</h1>"
    "<p>The workbench UI is not installed. Start the service with <code>--static DIR</code> to serve it, "
    "or use the JSON API under <code>/sessions</code>.</p></body></html>";

void send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const Json& details = Json::object()) {
  Json body{{"code", code}, {"message", message}};
  for (const auto& [key, value] : details.items()) body[key] = value;
  send(res, status, body);
}

void set_revision(httplib::Response& res, std::uint64_t revision) {
  res.set_header("ETag", "\"" + std::to_string(revision) + "\"");
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ServiceError(400, "malformed_json", e.what(), Json{{"byte", e.byte}});
  }
}

// Accepts 3, "3" and W/"3".
std::optional<std::uint64_t> expected_revision(const httplib::Request& req) {
  if (!req.has_header("If-Match")) return std::nullopt;
  std::string value = req.get_header_value("If-Match");
  if (value.rfind("W/", 0) == 0) value.erase(0, 2);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
  std::uint64_t revision = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), revision);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ServiceError(400, "bad_precondition", "If-Match must carry a session revision, got '" + value + "'");
  }
  return revision;
}

Json assessments_json(const ProblemDraft& draft) {
  const auto& s = draft.structure();
  Json weights = Json::object();
  Json ratings = Json::object();
  for (std::size_t k = 0; k < s.decision_makers.size(); ++k) {
    Json w = Json::object();
    for (std::size_t j = 0; j < s.criteria.size(); ++j) {
      if (const auto& cell = draft.weight(k, j)) w[s.criteria[j].id] = json::assessment_to_json(*cell);
    }
    Json r = Json::object();
    for (std::size_t i = 0; i < s.alternatives.size(); ++i) {
      Json row = Json::object();
      for (std::size_t j = 0; j < s.criteria.size(); ++j) {
        if (const auto& cell = draft.rating(k, i, j)) row[s.criteria[j].id] = json::assessment_to_json(*cell);
      }
      if (!row.empty()) r[s.alternatives[i].id] = std::move(row);
    }
    if (!w.empty()) weights[s.decision_makers[k].id] = std::move(w);
    if (!r.empty()) ratings[s.decision_makers[k].id] = std::move(r);
  }
  return Json{{"weights", std::move(weights)}, {"ratings", std::move(ratings)}};
}

Json session_json(const SessionSnapshot& snapshot) {
  return Json{{"sessionId", snapshot.id},
              {"revision", snapshot.revision},
              {"status", std::string(to_string(snapshot.status()))},
              {"structure", json::structure_to_json(snapshot.draft.structure())},
              // Always present so clients can show each term's fuzzy number.
              {"scales",
               {{"assessment", json::scale_to_json(snapshot.draft.structure().assessment_scale)},
                {"weight", json::scale_to_json(snapshot.draft.structure().weight_scale)}}},
              {"assessments", assessments_json(snapshot.draft)},
              {"missing", json::missing_to_json(snapshot.draft.missing())}};
}

Json trace_body(const SessionResults& results) {
  return Json{{"sessionId", results.snapshot->id},
              {"revision", results.snapshot->revision},
              {"status", std::string(to_string(results.snapshot->status()))},
              {"summary", json::summary_to_json(*results.trace)},
              {"trace", json::trace_to_json(*results.trace)}};
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ServiceError& e) {
      send_error(res, e.status(), e.code(), e.what(), e.details());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal_error", e.what());
    }
  };
}

}  // namespace

HttpService::HttpService(SessionStore& store, std::optional<std::filesystem::path> static_dir)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  install_routes();
  if (static_dir && std::filesystem::is_directory(*static_dir)) {
    server_->set_mount_point("/", static_dir->string());
  } else {
    server_->Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html; charset=utf-8");
    });
  }
}

HttpService::~HttpService() { stop(); }

void HttpService::install_routes() {
  server_->Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const auto snapshot = store_.create(parse_body(req));
                  set_revision(res, snapshot->revision);
                  res.set_header("Location", "/sessions/" + snapshot->id);
                  send(res, 201, session_json(*snapshot));
                }));

  server_->Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const auto snapshot = store_.get(req.matches[1]);
                 set_revision(res, snapshot->revision);
                 send(res, 200, session_json(*snapshot));
               }));

  server_->Put(R"(/sessions/([^/]+)/assessments/([^/]+))",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const auto snapshot =
                     store_.submit(req.matches[1], req.matches[2], parse_body(req), expected_revision(req));
                 set_revision(res, snapshot->revision);
                 send(res, 200,
                      Json{{"sessionId", snapshot->id},
                           {"revision", snapshot->revision},
                           {"status", std::string(to_string(snapshot->status()))}});
               }));

  server_->Get(R"(/sessions/([^/]+)/results)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const auto results = store_.results(req.matches[1]);
                 set_revision(res, results.snapshot->revision);
                 if (!results.trace) {
                   send_error(res, 409, "incomplete",
                              "session is still collecting assessments (" + std::to_string(results.missing.size()) +
                                  " missing)",
                              Json{{"sessionId", results.snapshot->id},
                                   {"revision", results.snapshot->revision},
                                   {"status", std::string(to_string(results.snapshot->status()))},
                                   {"missing", json::missing_to_json(results.missing)}});
                   return;
                 }
                 send(res, 200, trace_body(results));
               }));

  server_->Post(R"(/sessions/([^/]+)/what-if)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const auto results = store_.what_if(req.matches[1], parse_body(req));
                  set_revision(res, results.snapshot->revision);
                  auto body = trace_body(results);
                  body["ephemeral"] = true;
                  send(res, 200, body);
                }));
}

bool HttpService::listen(const std::string& host, int port) { return server_->listen(host, port); }

int HttpService::bind_any_port(const std::string& host) { return server_->bind_to_any_port(host); }

bool HttpService::serve() { return server_->listen_after_bind(); }

void HttpService::stop() {
  if (server_ && server_->is_running()) server_->stop();
}

bool HttpService::running() const { return server_->is_running(); }

void HttpService::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace ftopsis::service
