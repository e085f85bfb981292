#include "cliquegame/server.hpp"

#include <httplib.h>

#include "cliquegame/errors.hpp"

namespace cliquegame {
namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const char* kind, const std::string& message,
                const Json& extra = Json::object()) {
  Json body;
  body["error"] = kind;
  body["message"] = message;
  for (auto& [key, value] : extra.items()) body[key] = value;
  send_json(res, status, body);
}

template <class F>
void guarded(httplib::Response& res, F&& handler) {
  try {
    handler();
  } catch (const NotFoundError& e) {
    send_error(res, 404, "not_found", e.what());
  } catch (const ConflictError& e) {
    send_error(res, 409, "conflict", e.what());
  } catch (const ProtocolError& e) {
    send_error(res, 409, "protocol", e.what());
  } catch (const RuleViolation& e) {
    send_error(res, 422, "rule_violation", e.what(), Json{{"clique", e.clique()}});
  } catch (const InputError& e) {
    send_error(res, 400, "invalid_input", e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "internal", e.what());
  }
}

Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  return parse_json_text(req.body);
}

}  // namespace

struct HttpService::Impl {
  explicit Impl(SessionManager& s) : sessions(s) {}
  SessionManager& sessions;
  httplib::Server server;
};

HttpService::HttpService(SessionManager& sessions, bool allow_cors)
    : impl_(std::make_unique<Impl>(sessions)) {
  httplib::Server& server = impl_->server;
  SessionManager& mgr = impl_->sessions;

  if (allow_cors) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
  }

  server.Post("/sessions", [&mgr](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 201, mgr.create(body_of(req))); });
  });
  server.Get(R"(/sessions/([0-9a-f]+))", [&mgr](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, mgr.view(req.matches[1])); });
  });
  server.Post(R"(/sessions/([0-9a-f]+)/moves)",
              [&mgr](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] { send_json(res, 200, mgr.submit_move(req.matches[1], body_of(req))); });
              });
  server.Get(R"(/sessions/([0-9a-f]+)/hints)", [&mgr](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, mgr.hints(req.matches[1])); });
  });
  server.Get(R"(/sessions/([0-9a-f]+)/transcript)",
             [&mgr](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { send_json(res, 200, mgr.transcript(req.matches[1])); });
             });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::serve() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace cliquegame
