#include "ftopsis/session_store.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ftopsis::service {

namespace {

// Engine and codec errors mapped onto the service's error vocabulary.
[[noreturn]] void rethrow_as_service_error(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const ServiceError&) {
    throw;
  } catch (const UnknownTermError& e) {
    throw ServiceError(422, "unknown_term", e.what(), json::Json{{"term", e.code()}, {"validTerms", e.valid_codes()}});
  } catch (const ReferenceError& e) {
    throw ServiceError(422, "unknown_reference", e.what(), json::Json{{"reference", e.reference()}});
  } catch (const CompletenessError& e) {
    throw ServiceError(409, "incomplete", e.what(), json::Json{{"missing", json::missing_to_json(e.missing())}});
  } catch (const ValidationError& e) {
    throw ServiceError(422, "invalid_problem", e.what());
  } catch (const DomainError& e) {
    throw ServiceError(422, "domain_error", e.what(),
                       json::Json{{"alternative", e.alternative()}, {"criterion", e.criterion()}});
  }
}

template <typename F>
auto translating(F&& body) {
  try {
    return body();
  } catch (const ServiceError&) {
    throw;
  } catch (const Error&) {
    rethrow_as_service_error(std::current_exception());
  }
}

json::Json event(const char* kind, std::uint64_t revision) {
  return json::Json{{"event", kind}, {"revision", revision}};
}

}  // namespace

std::string_view to_string(SessionStatus status) noexcept {
  return status == SessionStatus::Complete ? "complete" : "collecting";
}

ServiceError::ServiceError(int status, std::string code, const std::string& message, json::Json details)
    : Error(message), status_(status), code_(std::move(code)), details_(std::move(details)) {}

struct SessionStore::Session {
  std::mutex write_mutex;
  mutable std::mutex publish_mutex;
  std::shared_ptr<const SessionSnapshot> current;
  std::shared_ptr<const EvaluationTrace> cached_trace;
  std::uint64_t cached_revision = 0;
  std::optional<std::filesystem::path> log_path;

  std::shared_ptr<const SessionSnapshot> load() const {
    std::lock_guard lock(publish_mutex);
    return current;
  }

  void publish(std::shared_ptr<const SessionSnapshot> next) {
    std::lock_guard lock(publish_mutex);
    current = std::move(next);
  }

  void append(const json::Json& entry) const {
    if (!log_path) return;
    std::ofstream out(*log_path, std::ios::app | std::ios::binary);
    out << entry.dump() << '\n';
    out.flush();
    if (!out) throw ServiceError(500, "persistence_failed", "could not append to " + log_path->string());
  }
};

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir)
    : state_dir_(std::move(state_dir)), id_rng_(std::random_device{}()) {
  if (!state_dir_) return;
  std::filesystem::create_directories(*state_dir_);
  std::vector<std::filesystem::path> logs;
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") logs.push_back(entry.path());
  }
  std::sort(logs.begin(), logs.end());
  for (const auto& log : logs) replay(log);
}

SessionStore::~SessionStore() = default;

void SessionStore::replay(const std::filesystem::path& log) {
  std::ifstream in(log, std::ios::binary);
  std::string line;
  std::shared_ptr<SessionSnapshot> snapshot;
  std::uintmax_t good_bytes = 0;
  bool torn = false;
  while (std::getline(in, line)) {
    if (line.empty() || in.eof()) {
      // A final line without its newline was never fully written.
      torn = !line.empty();
      if (torn) break;
      ++good_bytes;
      continue;
    }
    try {
      const auto entry = json::Json::parse(line);
      const std::string kind = entry.at("event").get<std::string>();
      if (kind == "created") {
        snapshot = std::make_shared<SessionSnapshot>(
            SessionSnapshot{log.stem().string(), 0, json::draft_from_json(entry.at("skeleton"))});
      } else if (kind == "assessment" && snapshot) {
        json::apply_decision_maker_assessments(snapshot->draft, entry.at("dm").get<std::string>(),
                                               entry.at("payload"), "payload");
        snapshot->revision = entry.at("revision").get<std::uint64_t>();
      }
    } catch (const std::exception&) {
      torn = true;
      break;
    }
    good_bytes += line.size() + 1;
  }
  in.close();
  // Drop the torn tail so later appends start on a clean line.
  if (torn) std::filesystem::resize_file(log, good_bytes);
  if (!snapshot) return;
  auto session = std::make_shared<Session>();
  session->log_path = log;
  session->current = std::move(snapshot);
  sessions_.emplace(session->current->id, std::move(session));
}

std::string SessionStore::next_id() {
  std::lock_guard lock(id_mutex_);
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << id_rng_() << std::setw(16) << id_rng_();
  return os.str();
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ServiceError(404, "session_not_found", "unknown session '" + id + "'", json::Json{{"sessionId", id}});
  }
  return it->second;
}

std::shared_ptr<const SessionSnapshot> SessionStore::create(const json::Json& skeleton) {
  auto draft = translating([&] { return json::draft_from_json(skeleton); });
  auto session = std::make_shared<Session>();
  auto snapshot = std::make_shared<const SessionSnapshot>(SessionSnapshot{next_id(), 0, std::move(draft)});
  if (state_dir_) {
    session->log_path = *state_dir_ / (snapshot->id + ".jsonl");
    auto entry = event("created", 0);
    entry["skeleton"] = skeleton;
    session->append(entry);
  }
  session->current = snapshot;
  std::unique_lock lock(sessions_mutex_);
  sessions_.emplace(snapshot->id, std::move(session));
  return snapshot;
}

std::shared_ptr<const SessionSnapshot> SessionStore::get(const std::string& id) const { return find(id)->load(); }

std::shared_ptr<const SessionSnapshot> SessionStore::submit(const std::string& id, const std::string& dm,
                                                            const json::Json& payload,
                                                            std::optional<std::uint64_t> expected_revision) {
  auto session = find(id);
  std::lock_guard write(session->write_mutex);
  const auto current = session->load();

  if (!StructureIndex(current->draft.structure()).decision_maker(dm)) {
    throw ServiceError(404, "decision_maker_not_found", "unknown decision maker '" + dm + "'",
                       json::Json{{"decisionMaker", dm}});
  }
  if (expected_revision && *expected_revision != current->revision) {
    throw ServiceError(409, "revision_conflict",
                       "expected revision " + std::to_string(*expected_revision) + " but session is at " +
                           std::to_string(current->revision),
                       json::Json{{"currentRevision", current->revision}});
  }

  auto next = std::make_shared<SessionSnapshot>(*current);
  translating([&] {
    json::apply_decision_maker_assessments(next->draft, dm, payload, "payload");
    return 0;
  });
  next->revision = current->revision + 1;

  auto entry = event("assessment", next->revision);
  entry["dm"] = dm;
  entry["payload"] = payload;
  session->append(entry);
  session->publish(next);
  return next;
}

SessionResults SessionStore::results(const std::string& id) {
  auto session = find(id);
  SessionResults out;
  out.snapshot = session->load();
  if (out.snapshot->status() != SessionStatus::Complete) {
    out.missing = out.snapshot->draft.missing();
    return out;
  }
  {
    std::lock_guard lock(session->publish_mutex);
    if (session->cached_trace && session->cached_revision == out.snapshot->revision) {
      out.trace = session->cached_trace;
      return out;
    }
  }
  auto trace = translating([&] { return std::make_shared<const EvaluationTrace>(evaluate(out.snapshot->draft.build())); });
  {
    std::lock_guard lock(session->publish_mutex);
    // Another reader may have raced ahead to a newer revision; keep the newest.
    if (!session->cached_trace || session->cached_revision <= out.snapshot->revision) {
      session->cached_trace = trace;
      session->cached_revision = out.snapshot->revision;
    }
  }
  out.trace = std::move(trace);
  return out;
}

SessionResults SessionStore::what_if(const std::string& id, const json::Json& overlay) {
  auto session = find(id);
  SessionResults out;
  out.snapshot = session->load();
  if (out.snapshot->status() != SessionStatus::Complete) {
    throw ServiceError(409, "incomplete", "what-if requires a complete session",
                       json::Json{{"missing", json::missing_to_json(out.snapshot->draft.missing())}});
  }
  if (!overlay.is_object()) throw ServiceError(422, "invalid_overlay", "overlay must be a JSON object");
  for (const auto& [key, _] : overlay.items()) {
    if (key != "assessments") throw ServiceError(422, "invalid_overlay", "unexpected overlay field '" + key + "'");
  }

  ProblemDraft draft = out.snapshot->draft;
  if (auto it = overlay.find("assessments"); it != overlay.end()) {
    if (!it->is_object()) throw ServiceError(422, "invalid_overlay", "overlay.assessments must be an object");
    for (const auto& [dm, payload] : it->items()) {
      translating([&] {
        json::apply_decision_maker_assessments(draft, dm, payload, "assessments." + dm);
        return 0;
      });
    }
  }
  out.trace = translating([&] { return std::make_shared<const EvaluationTrace>(evaluate(draft.build())); });
  return out;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

}  // namespace ftopsis::service
