#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "ftopsis/session_store.hpp"

namespace httplib {
class Server;
}

namespace ftopsis::service {

/**
 * JSON API over a SessionStore.
 *
 *   POST /sessions                          create from a skeleton        201
 *   GET  /sessions/{id}                     snapshot + missing cells      200
 *   PUT  /sessions/{id}/assessments/{dm}    upsert one DM's judgements    200
 *   GET  /sessions/{id}/results             trace, or 409 + missing cells
 *   POST /sessions/{id}/what-if             ephemeral overlay evaluation  200
 *
 * Mutations honour an optional If-Match header carrying the expected
 * revision; responses carry the current revision as an ETag. Errors are
 * {"code": ..., "message": ..., ...details}.
 */
class HttpService {
 public:
  explicit HttpService(SessionStore& store, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds and serves until stop(). Returns false if the socket could not be bound.
  bool listen(const std::string& host, int port);

  /// Binds an ephemeral port, returning it (or -1). Call serve() afterwards.
  int bind_any_port(const std::string& host);
  bool serve();

  void stop();
  bool running() const;
  void wait_until_ready() const;

 private:
  void install_routes();

  SessionStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace ftopsis::service
