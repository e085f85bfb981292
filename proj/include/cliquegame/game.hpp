#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquegame/graph.hpp"

namespace cliquegame {

/// Colors are labels 1..c; 0 marks an uncolored vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

enum class Player { Alice, Bob };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
const char* to_string(Player p);

struct GameConfig {
  int k = 1;       ///< monochromatic cliques of up to k vertices are allowed
  int colors = 1;  ///< c
  Graph play_graph;
  /// Chordal supergraph Alice strategizes on; legality is always judged on play_graph.
  std::optional<Graph> strategy_graph;

  /// Throws InputError on k < 1, c < 1 or a strategy graph that is not a
  /// supergraph of play_graph on the same vertex set.
  void validate() const;

  const Graph& alice_graph() const { return strategy_graph ? *strategy_graph : play_graph; }
  int order() const { return play_graph.order(); }
};

/// Digest of (k, c, play graph, strategy graph).
std::string config_digest(const GameConfig& cfg);

struct Move {
  Vertex vertex = 0;
  Color color = kUncolored;

  friend bool operator==(const Move&, const Move&) = default;
};

class GameState {
 public:
  explicit GameState(std::shared_ptr<const GameConfig> config);

  /// Position with the given colors already placed: colored vertices are
  /// active and the turn follows from the parity of the colored count.
  /// Rejects colorings containing a monochromatic (k+1)-clique.
  static GameState from_coloring(std::shared_ptr<const GameConfig> config,
                                 std::vector<Color> coloring);

  const GameConfig& config() const { return *config_; }
  const std::shared_ptr<const GameConfig>& config_ptr() const { return config_; }

  int order() const { return static_cast<int>(coloring_.size()); }
  Color color(Vertex v) const { return coloring_[v]; }
  bool colored(Vertex v) const { return coloring_[v] != kUncolored; }
  bool active(Vertex v) const { return active_[v] != 0; }
  Player turn() const { return turn_; }
  int colored_count() const { return colored_count_; }
  std::span<const Color> coloring() const { return coloring_; }

  /// Adds v to the active set. Returns false if it was already active.
  bool activate(Vertex v);

 private:
  friend GameState apply_move(const GameState&, Player, Move);

  std::shared_ptr<const GameConfig> config_;
  std::vector<Color> coloring_;
  std::vector<char> active_;
  Player turn_ = Player::Alice;
  int colored_count_ = 0;
};

/// The other k vertices of a monochromatic (k+1)-clique that coloring v with
/// `color` would complete, or nullopt if the color is legal for v. Only the
/// neighbors of v already colored `color` are searched.
std::optional<std::vector<Vertex>> completing_clique(const Graph& g,
                                                     std::span<const Color> coloring, int k,
                                                     Vertex v, Color color);

/// Legal colors for uncolored v, ascending.
std::vector<Color> legal_colors(const Graph& g, std::span<const Color> coloring, int k, int colors,
                                Vertex v);

/// Throws InputError when v is unknown or already colored.
std::vector<Color> legal_colors(const GameState& s, Vertex v);

/// Applies `mover`'s move. Throws ProtocolError when it is not mover's turn,
/// InputError for an unknown or colored vertex or a color outside 1..c, and
/// RuleViolation (naming the completed clique) for an illegal color.
GameState apply_move(const GameState& s, Player mover, Move m);

enum class StatusKind { Ongoing, AliceWins, BobWins };

struct Status {
  StatusKind kind = StatusKind::Ongoing;
  std::optional<Vertex> witness;  ///< least uncolorable vertex when Bob wins

  friend bool operator==(const Status&, const Status&) = default;
};

/// AliceWins when every vertex is colored, BobWins(v) for the least uncolored
/// v without a legal color, Ongoing otherwise.
Status status(const GameState& s);

std::string to_string(const Status& s);

}  // namespace cliquegame
