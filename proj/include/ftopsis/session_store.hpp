#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ftopsis/engine.hpp"
#include "ftopsis/errors.hpp"
#include "ftopsis/json_codec.hpp"
#include "ftopsis/problem.hpp"

namespace ftopsis::service {

enum class SessionStatus { Collecting, Complete };

std::string_view to_string(SessionStatus status) noexcept;

/// Error carrying an HTTP status, a machine-readable code and optional details.
class ServiceError : public Error {
 public:
  ServiceError(int status, std::string code, const std::string& message, json::Json details = json::Json::object());

  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }
  const json::Json& details() const noexcept { return details_; }

 private:
  int status_;
  std::string code_;
  json::Json details_;
};

/// Immutable view of one session at one revision.
struct SessionSnapshot {
  std::string id;
  std::uint64_t revision = 0;
  ProblemDraft draft;

  SessionStatus status() const { return draft.complete() ? SessionStatus::Complete : SessionStatus::Collecting; }
};

/// Either a trace for a complete session or the cells still missing.
struct SessionResults {
  std::shared_ptr<const SessionSnapshot> snapshot;
  std::shared_ptr<const EvaluationTrace> trace;
  std::vector<MissingCell> missing;
};

/**
 * Decision sessions keyed by opaque id.
 *
 * Mutations on one session are serialized; readers copy the latest published
 * snapshot and never observe a half-applied submission. Each accepted
 * mutation bumps the revision by exactly one. With a state directory, every
 * session keeps an append-only JSON-lines event log that is replayed on
 * construction.
 */
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);
  ~SessionStore();

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  /// Skeleton: criteria, alternatives, decisionMakers, optional scales (and optional initial judgements).
  /// Throws ServiceError 422 on invalid skeletons.
  std::shared_ptr<const SessionSnapshot> create(const json::Json& skeleton);

  /// Throws ServiceError 404 for unknown ids.
  std::shared_ptr<const SessionSnapshot> get(const std::string& id) const;

  /// Upsert one decision maker's {"weights": ..., "ratings": ...}. Throws 404 for an
  /// unknown session or dm, 409 when expected_revision is stale, 422 for invalid codes.
  std::shared_ptr<const SessionSnapshot> submit(const std::string& id, const std::string& dm,
                                                const json::Json& payload,
                                                std::optional<std::uint64_t> expected_revision = std::nullopt);

  /// Evaluates once per revision and serves the cached trace afterwards.
  SessionResults results(const std::string& id);

  /// Evaluate with {"assessments": {dm: {"weights":..., "ratings":...}}} applied to a
  /// copy. Never changes the stored session. Throws 409 if incomplete, 422 on bad overlays.
  SessionResults what_if(const std::string& id, const json::Json& overlay);

  std::size_t size() const;

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string next_id();
  void replay(const std::filesystem::path& log);

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mutex_;
  std::mt19937_64 id_rng_;
};

}  // namespace ftopsis::service
