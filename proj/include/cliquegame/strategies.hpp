#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliquegame/engine.hpp"
#include "cliquegame/rng.hpp"

namespace cliquegame {

class GameSolver;

/// Picks one color out of a non-empty ascending list of legal colors.
using ColorPolicy = std::function<Color(const GameState&, Vertex, std::span<const Color> legal)>;

/// "least-index" (default), "greatest-index", or "least-used" (color with the
/// fewest vertices so far, lowest label on ties). Throws InputError otherwise.
ColorPolicy make_color_policy(const std::string& name);

/// Least uncolored element of N+[x] under the ordering; nullopt when x and all
/// of its parents are colored. Colors are read from `s`.
std::optional<Vertex> mother(const OrderedGraph& og, const GameState& s, Vertex x);

/// One Alice turn as a trace: the vertex Bob just colored (if any), every
/// vertex the search visited, and the vertex finally colored.
struct ActivationTrace {
  std::optional<Vertex> trigger;
  std::vector<Vertex> visited;
  Vertex target = 0;
};

/// Alice's Activation Strategy over a fixed linear ordering of the strategy
/// graph. Stateless between turns: the active set lives in GameState.
class ActivationAlice final : public Strategy {
 public:
  ActivationAlice(OrderedGraph ordered, ColorPolicy policy, std::string policy_name = "custom");

  /// Orders cfg.alice_graph() with simplicial_ordering(); a non-chordal
  /// strategy graph falls back to the maximum-cardinality search order.
  static ActivationAlice for_config(const GameConfig& cfg,
                                    const std::string& color_policy = "least-index");

  const OrderedGraph& ordered() const { return ordered_; }

  /// Activates (if needed) and colors the least vertex of the ordering.
  TurnPlan first_move(const GameState& s) const;
  /// Search stage from Bob's vertex b, then the coloring stage.
  TurnPlan respond(const GameState& s, Vertex b) const;

  std::string name() const override { return "activation/" + policy_name_; }
  TurnPlan plan(const GameState& s, std::optional<Move> last_opponent_move) override;

  /// Trace of the most recent plan() call.
  const ActivationTrace& last_trace() const { return trace_; }

 private:
  TurnPlan color_stage(const GameState& s, Vertex u, std::vector<Vertex> activations) const;

  OrderedGraph ordered_;
  ColorPolicy policy_;
  std::string policy_name_;
  mutable ActivationTrace trace_;
};

/// Every (vertex, color) pair legal in s, ordered by vertex then color.
std::vector<Move> legal_moves(const GameState& s);

/// Uniformly random legal move.
class RandomBob final : public Strategy {
 public:
  explicit RandomBob(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  TurnPlan plan(const GameState& s, std::optional<Move>) override;

 private:
  Rng rng_;
};

/// Score of a move for the clique-threat heuristic, compared lexicographically.
struct ThreatScore {
  int stuck = 0;             ///< uncolored vertices left without a legal color
  int removed = 0;           ///< (vertex, color) options destroyed
  int tightest = 1 << 30;    ///< smallest remaining palette among hit vertices

  friend bool operator==(const ThreatScore&, const ThreatScore&) = default;
  /// True when this score is strictly more threatening than `other`.
  bool beats(const ThreatScore& other) const;
};

ThreatScore threat_score(const GameState& s, Move m);

/// Greedy adversary: plays the move with the best ThreatScore, lowest vertex
/// then lowest color on ties.
class CliqueThreatBob final : public Strategy {
 public:
  std::string name() const override { return "clique-threat"; }
  TurnPlan plan(const GameState& s, std::optional<Move>) override;
};

/// Perfect adversary: a move after which Alice loses under perfect play if one
/// exists, otherwise the lowest legal move. Throws BudgetExceeded.
class MinimaxBob final : public Strategy {
 public:
  explicit MinimaxBob(long long budget);
  ~MinimaxBob() override;
  std::string name() const override { return "minimax"; }
  TurnPlan plan(const GameState& s, std::optional<Move>) override;

 private:
  long long budget_;
  std::unique_ptr<GameSolver> solver_;
};

/// Replays a fixed move list, skipping entries that are no longer legal;
/// defers to `fallback` once the script is used up.
class ScriptedBob final : public Strategy {
 public:
  ScriptedBob(std::vector<Move> script, std::unique_ptr<Strategy> fallback);
  std::string name() const override { return "scripted"; }
  TurnPlan plan(const GameState& s, std::optional<Move> last) override;

 private:
  std::vector<Move> script_;
  std::size_t next_ = 0;
  std::unique_ptr<Strategy> fallback_;
};

/// Strategy from a JSON selector such as {"type": "activation", "color_policy":
/// "least-index"} or {"type": "clique-threat"}. Bob types: random, clique-threat,
/// minimax. A bare string is accepted as the type.
std::unique_ptr<Strategy> make_strategy(const Json& selector, const GameConfig& cfg, Player seat,
                                        std::uint64_t seed, long long budget = 2'000'000);

}  // namespace cliquegame
