#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cliquegame/game.hpp"
#include "cliquegame/graph_io.hpp"

namespace cliquegame {

/// What a player does on one turn: vertices to activate (Alice only), then a move.
struct TurnPlan {
  std::vector<Vertex> activations;
  Move move;
};

/// A move-producing agent bound to a single game.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  /// `last_opponent_move` is nullopt on the opening turn.
  virtual TurnPlan plan(const GameState& state, std::optional<Move> last_opponent_move) = 0;
};

/// Raised by a strategy that cannot produce a move (no legal color for the
/// vertex it selected).
class StrategyFailure : public std::runtime_error {
 public:
  StrategyFailure(const std::string& what, Vertex witness)
      : std::runtime_error(what), witness_(witness) {}
  Vertex witness() const noexcept { return witness_; }

 private:
  Vertex witness_;
};

struct ActivationEvent {
  Vertex vertex = 0;

  friend bool operator==(const ActivationEvent&, const ActivationEvent&) = default;
};

struct MoveEvent {
  Player player = Player::Alice;
  Vertex vertex = 0;
  Color color = kUncolored;
  /// The vertex joined the active set with this move. For Bob's moves this is
  /// Alice's immediate activation of the vertex Bob colored.
  bool activated = false;

  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

using GameEvent = std::variant<ActivationEvent, MoveEvent>;

enum class OutcomeKind { AliceWins, BobWins, Forfeit };

struct Outcome {
  OutcomeKind kind = OutcomeKind::AliceWins;
  std::optional<Vertex> witness;   ///< uncolorable vertex (BobWins)
  std::optional<Player> offender;  ///< player that forfeited
  std::optional<Move> attempted;   ///< the rejected move, when one was produced
  std::string diagnostic;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

const char* to_string(OutcomeKind kind);

struct GameTranscript {
  GameConfig config;
  std::vector<GameEvent> events;
  Outcome outcome;
};

/// Outcome of a decided position, or nullopt while the game is ongoing.
std::optional<Outcome> decided_outcome(const GameState& s);

/// Validates and applies one turn for the player to move, appending its
/// events. Returns a forfeit outcome when the plan is rejected; activations
/// applied before the rejection stay applied.
std::optional<Outcome> apply_turn(GameState& s, const TurnPlan& plan,
                                  std::vector<GameEvent>& events);

/// Alice moves first; the game runs until status() leaves Ongoing. Every
/// strategy output is re-validated: an illegal move or activation is recorded
/// as a forfeit with a diagnostic, never repaired.
GameTranscript play_game(const GameConfig& cfg, Strategy& alice, Strategy& bob);

struct ReplayResult {
  GameState final_state;
  Outcome outcome;
};

/// Re-applies the events from the initial position and recomputes the
/// outcome. Throws InputError if an event cannot be applied.
ReplayResult replay(const GameTranscript& t);

/// Checks the activation bookkeeping of a transcript: C is a subset of A at
/// every event boundary, Alice activates each vertex at most once and only
/// while uncolored, colors only active vertices, and acts on each vertex at
/// most twice. Returns the first problem found.
std::optional<std::string> audit_activations(const GameTranscript& t);

/// For a finished Alice win: position in the event list where vertex v was
/// colored, or nullopt.
std::optional<std::size_t> coloring_event_index(const GameTranscript& t, Vertex v);

Json config_to_json(const GameConfig& cfg);
GameConfig config_from_json(const Json& doc);
Json outcome_to_json(const Outcome& o);
Json transcript_to_json(const GameTranscript& t);
GameTranscript transcript_from_json(const Json& doc);

}  // namespace cliquegame
