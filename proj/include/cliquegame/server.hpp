#pragma once

#include <memory>
#include <string>

#include "cliquegame/session.hpp"

namespace cliquegame {

/// HTTP front end over a SessionManager:
///   POST /sessions                 create (201)
///   GET  /sessions/{id}            board view
///   POST /sessions/{id}/moves      Bob's move plus Alice's reply
///   GET  /sessions/{id}/hints      legal colors per uncolored vertex
///   GET  /sessions/{id}/transcript transcript download
/// Errors are {"error", "message"} with 400 (bad input), 404 (unknown or
/// expired session), 409 (conflict or out-of-turn) and 422 (illegal color,
/// with the completed "clique").
class HttpService {
 public:
  HttpService(SessionManager& sessions, bool allow_cors);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds host:port (port 0 picks a free one); returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a successful bind().
  bool serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cliquegame
