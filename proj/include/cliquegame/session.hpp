#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquegame/strategies.hpp"

namespace cliquegame {

/// Unknown or expired session.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A concurrent or stale move submission lost the race for a session.
class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Board view of a game in progress, computed from the configuration, the
/// event list and Alice's ordering alone. Fields: graph, strategy_graph,
/// ordering, position, labels, k, c, colors, active, turn, status, moves and
/// last_alice_turn ({"trigger", "activations", "chain", "move"}).
Json board_view(const GameConfig& cfg, const std::vector<GameEvent>& events,
                const LinearOrdering& ordering, const std::vector<std::string>& labels = {},
                const std::optional<Outcome>& recorded = std::nullopt);

struct Session {
  using Clock = std::chrono::steady_clock;

  Session(std::string id, std::shared_ptr<const GameConfig> config, ActivationAlice alice,
          std::vector<std::string> labels, Clock::time_point now);

  std::string id;
  std::shared_ptr<const GameConfig> config;
  ActivationAlice alice;
  GameState state;
  std::vector<GameEvent> events;
  std::optional<Outcome> outcome;  ///< set once the game is decided
  std::vector<std::string> labels;
  Clock::time_point created;
  Clock::time_point last_active;
  std::mutex lock;

  int moves() const;
  Json view() const;
  /// Transcript JSON; while the game is ongoing the outcome reads "ongoing".
  Json transcript() const;
};

/// Owns the live sessions. Every call is thread-safe; moves on one session are
/// serialized and a submission that finds the session busy, or whose
/// `expected_moves` no longer matches, fails with ConflictError.
class SessionManager {
 public:
  using Clock = Session::Clock;
  using Now = std::function<Clock::time_point()>;

  explicit SessionManager(std::chrono::seconds idle_timeout = std::chrono::hours(1),
                          Now now = Clock::now, std::uint64_t id_seed = 0);

  /// Body fields: exactly one of "graph" (optionally with "strategy_graph"),
  /// "witness", "generator" ({"type": "chordal" | "ktree" | "partial-ktree",
  /// "omega", "n", "seed", "drop_prob", "keep_prob"}, omega defaulting to
  /// k + 1) or "fixture" (name); "k" and
  /// "c"; optional "ordering" and "color_policy". Alice's first move is
  /// applied before returning the view. Throws InputError.
  Json create(const Json& body);

  Json view(const std::string& id);
  /// Body: {"vertex", "color", optional "expected_moves"}. Applies Bob's move,
  /// then Alice's reply if the game is still open. Throws NotFoundError,
  /// ConflictError, ProtocolError (game over or not Bob's turn), InputError or
  /// RuleViolation.
  Json submit_move(const std::string& id, const Json& body);
  /// {"turn", "hints": [{"vertex", "colors"}]} for every uncolored vertex.
  Json hints(const std::string& id);
  Json transcript(const std::string& id);

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire_idle();
  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string fresh_id();

  std::chrono::seconds idle_timeout_;
  Now now_;
  mutable std::mutex mutex_;
  Rng ids_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace cliquegame
