#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquegame/engine.hpp"

namespace cliquegame {

inline constexpr long long kDefaultBudget = 5'000'000;

/// Perfect-play search of the k-clique-relaxed coloring game on one graph.
///
/// Positions are stored as one vertex bitmask per color class. Color labels
/// are interchangeable, so every position is canonicalized by sorting its
/// classes by (size, lexicographically least vertex list); unused colors then
/// collapse into a single candidate move. The memo table is keyed by the full
/// canonical class list, so a hit is always an exact match. Moves are tried in
/// (vertex, color slot) order with early exit; there is no alpha-beta since the
/// game is win/loss only.
class GameSolver {
 public:
  /// Graphs up to 64 vertices; budget is the node limit per query.
  GameSolver(const Graph& g, int k, int colors, long long budget = kDefaultBudget);

  /// Whether Alice wins from the empty position.
  bool alice_wins();
  /// Whether Alice wins from `coloring` (labels 1..c, 0 uncolored). The player
  /// to move follows from the parity of the colored count.
  bool alice_wins_from(std::span<const Color> coloring);

  /// Nodes expanded by the most recent query.
  long long nodes() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }

  using Classes = std::vector<std::uint64_t>;
  /// Sorts the class masks into canonical order.
  static void canonicalize(Classes& classes);

 private:
  struct ClassesHash {
    std::size_t operator()(const Classes& c) const noexcept;
  };

  bool win(const Classes& classes);
  bool slot_legal(const Classes& classes, Vertex v, std::size_t slot) const;
  bool has_clique(std::uint64_t candidates, int need) const;

  int n_;
  int k_;
  int colors_;
  long long budget_;
  long long nodes_ = 0;
  std::uint64_t all_;
  std::vector<std::uint64_t> adj_;
  std::unordered_map<Classes, bool, ClassesHash> memo_;
};

/// Throws BudgetExceeded rather than guessing.
bool alice_wins(const Graph& g, int k, int colors, long long budget = kDefaultBudget);

struct SolveEntry {
  int colors = 0;
  std::optional<bool> alice_wins;  ///< nullopt: budget exhausted
  long long nodes = 0;
};

struct SolveReport {
  std::vector<SolveEntry> entries;  ///< c = 1..c_max
  std::optional<int> chi_game;      ///< least c with a proven Alice win
  /// False when a win is followed by a proven loss at a larger c.
  bool monotone = true;
  long long total_nodes = 0;
  double elapsed_seconds = 0.0;
};

/// Runs alice_wins for every c in 1..c_max (c_max defaults to n). Budget
/// failures are recorded per c and do not stop the sweep.
SolveReport game_chromatic_number(const Graph& g, int k, std::optional<int> c_max = std::nullopt,
                                  long long budget = kDefaultBudget);

/// {"k", "c_max", "chi_game", "monotone", "entries": [{"c", "alice_wins": bool|"budget",
/// "nodes"}], ...}. Timing is omitted unless requested so reports stay reproducible.
Json solve_report_to_json(const SolveReport& r, int k, bool include_timing = false);

/// Plain alternating recursion with no memo and no symmetry reduction, judging
/// legality by scanning every (k+1)-subset. Independent cross-check for
/// GameSolver; limited to n <= 6 and c <= 3 (InputError beyond).
bool brute_force_winner(const Graph& g, int k, int colors);

/// Plays a deterministic Alice against every possible Bob line. Returns the
/// transcript of a game Alice loses (or forfeits), or nullopt when she wins
/// them all. `alice` must not keep state between turns.
std::optional<GameTranscript> find_alice_loss(const GameConfig& cfg, Strategy& alice,
                                              long long budget = kDefaultBudget);

}  // namespace cliquegame
