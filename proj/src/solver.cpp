#include "cliquegame/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_set>

#include "cliquegame/errors.hpp"
#include "cliquegame/rng.hpp"
#include "cliquegame/strategies.hpp"

namespace cliquegame {

GameSolver::GameSolver(const Graph& g, int k, int colors, long long budget)
    : n_(g.order()), k_(k), colors_(colors), budget_(budget) {
  if (n_ > 64) throw InputError("solver supports at most 64 vertices, got " + std::to_string(n_));
  if (k < 1) throw InputError("k must be at least 1");
  if (colors < 1) throw InputError("color count must be at least 1");
  all_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  adj_.assign(n_, 0);
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex u : g.neighbors(v)) adj_[v] |= 1ULL << u;
}

std::size_t GameSolver::ClassesHash::operator()(const Classes& c) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (std::uint64_t word : c) h = mix_seed(h ^ word);
  return static_cast<std::size_t>(h);
}

void GameSolver::canonicalize(Classes& classes) {
  std::sort(classes.begin(), classes.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // Equal sizes: the set owning the lowest differing vertex has the
    // lexicographically smaller sorted vertex list.
    const std::uint64_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  });
}

bool GameSolver::has_clique(std::uint64_t candidates, int need) const {
  if (need == 0) return true;
  while (std::popcount(candidates) >= need) {
    const int u = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(candidates & adj_[u], need - 1)) return true;
  }
  return false;
}

bool GameSolver::slot_legal(const Classes& classes, Vertex v, std::size_t slot) const {
  return !has_clique(adj_[v] & classes[slot], k_);
}

bool GameSolver::win(const Classes& classes) {
  std::uint64_t colored = 0;
  for (std::uint64_t c : classes) colored |= c;
  if (colored == all_) return true;
  if (auto hit = memo_.find(classes); hit != memo_.end()) return hit->second;

  struct Candidate {
    Vertex vertex;
    std::size_t slot;
  };
  std::vector<Candidate> moves;
  for (std::uint64_t rest = all_ & ~colored; rest != 0; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    bool any = false;
    bool tried_empty = false;
    for (std::size_t slot = 0; slot < classes.size(); ++slot) {
      if (classes[slot] == 0) {
        // Unused colors are interchangeable; one representative suffices.
        if (!tried_empty) moves.push_back({v, slot});
        tried_empty = true;
        any = true;
      } else if (slot_legal(classes, v, slot)) {
        moves.push_back({v, slot});
        any = true;
      }
    }
    if (!any) return false;  // v can never be colored
  }

  if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
  const bool alice_to_move = std::popcount(colored) % 2 == 0;
  bool result = !alice_to_move;
  for (const Candidate& m : moves) {
    Classes child = classes;
    child[m.slot] |= 1ULL << m.vertex;
    canonicalize(child);
    const bool alice_wins_child = win(child);
    if (alice_to_move && alice_wins_child) {
      result = true;
      break;
    }
    if (!alice_to_move && !alice_wins_child) {
      result = false;
      break;
    }
  }
  memo_.emplace(classes, result);
  return result;
}

bool GameSolver::alice_wins() {
  nodes_ = 0;
  Classes classes(colors_, 0);
  return win(classes);
}

bool GameSolver::alice_wins_from(std::span<const Color> coloring) {
  if (static_cast<int>(coloring.size()) != n_) {
    throw InputError("coloring has " + std::to_string(coloring.size()) + " entries, expected " +
                     std::to_string(n_));
  }
  Classes classes(colors_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    const Color c = coloring[v];
    if (c == kUncolored) continue;
    if (c < 1 || c > colors_) throw InputError("color " + std::to_string(c) + " out of range");
    classes[c - 1] |= 1ULL << v;
  }
  canonicalize(classes);
  nodes_ = 0;
  return win(classes);
}

bool alice_wins(const Graph& g, int k, int colors, long long budget) {
  return GameSolver(g, k, colors, budget).alice_wins();
}

SolveReport game_chromatic_number(const Graph& g, int k, std::optional<int> c_max,
                                  long long budget) {
  const auto started = std::chrono::steady_clock::now();
  const int top = c_max.value_or(std::max(1, g.order()));
  if (top < 1) throw InputError("c_max must be at least 1");
  SolveReport report;
  bool seen_win = false;
  for (int c = 1; c <= top; ++c) {
    GameSolver solver(g, k, c, budget);
    SolveEntry entry{c, std::nullopt, 0};
    try {
      entry.alice_wins = solver.alice_wins();
    } catch (const BudgetExceeded&) {
    }
    entry.nodes = solver.nodes();
    report.total_nodes += entry.nodes;
    if (entry.alice_wins == true) {
      if (!report.chi_game) report.chi_game = c;
      seen_win = true;
    } else if (entry.alice_wins == false && seen_win) {
      report.monotone = false;
    }
    report.entries.push_back(entry);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json solve_report_to_json(const SolveReport& r, int k, bool include_timing) {
  Json doc;
  doc["k"] = k;
  doc["c_max"] = r.entries.empty() ? 0 : r.entries.back().colors;
  doc["chi_game"] = r.chi_game ? Json(*r.chi_game) : Json(nullptr);
  doc["monotone"] = r.monotone;
  Json entries = Json::array();
  for (const SolveEntry& e : r.entries) {
    Json row;
    row["c"] = e.colors;
    row["alice_wins"] = e.alice_wins ? Json(*e.alice_wins) : Json("budget");
    row["nodes"] = e.nodes;
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  doc["total_nodes"] = r.total_nodes;
  if (include_timing) doc["elapsed_seconds"] = r.elapsed_seconds;
  return doc;
}

namespace {

struct BruteForce {
  const Graph& g;
  int k;
  int colors;
  std::vector<Color> coloring;

  // Scans every (k+1)-subset through v for a monochromatic clique.
  bool legal(Vertex v, Color c) const {
    const int n = g.order();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & (1u << v)) || std::popcount(mask) != k + 1) continue;
      bool mono_clique = true;
      for (Vertex a = 0; a < n && mono_clique; ++a) {
        if (!(mask & (1u << a))) continue;
        if (a != v && coloring[a] != c) mono_clique = false;
        for (Vertex b = a + 1; b < n && mono_clique; ++b)
          if ((mask & (1u << b)) && !g.adjacent(a, b)) mono_clique = false;
      }
      if (mono_clique) return false;
    }
    return true;
  }

  bool alice_wins(int colored) {
    const int n = g.order();
    if (colored == n) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (coloring[v] != kUncolored) continue;
      bool any = false;
      for (Color c = 1; c <= colors && !any; ++c) any = legal(v, c);
      if (!any) return false;
    }
    const bool alice_to_move = colored % 2 == 0;
    for (Vertex v = 0; v < n; ++v) {
      if (coloring[v] != kUncolored) continue;
      for (Color c = 1; c <= colors; ++c) {
        if (!legal(v, c)) continue;
        coloring[v] = c;
        const bool r = alice_wins(colored + 1);
        coloring[v] = kUncolored;
        if (alice_to_move && r) return true;
        if (!alice_to_move && !r) return false;
      }
    }
    return !alice_to_move;
  }
};

}  // namespace

bool brute_force_winner(const Graph& g, int k, int colors) {
  if (g.order() > 6 || colors > 3) {
    throw InputError("brute-force oracle is limited to n <= 6 and c <= 3");
  }
  if (k < 1 || colors < 1) throw InputError("k and c must be at least 1");
  BruteForce bf{g, k, colors, std::vector<Color>(g.order(), kUncolored)};
  return bf.alice_wins(0);
}

namespace {

struct LossSearch {
  const GameConfig& cfg;
  Strategy& alice;
  long long budget;
  long long nodes = 0;
  std::unordered_set<std::string> safe;  // Bob-to-move positions Alice survives

  static std::string key(const GameState& s) {
    std::string out(s.coloring().begin(), s.coloring().end());
    for (Vertex v = 0; v < s.order(); ++v) out.push_back(s.active(v) ? 1 : 0);
    return out;
  }

  std::optional<GameTranscript> loss(std::vector<GameEvent>& events, Outcome outcome) const {
    return GameTranscript{cfg, events, std::move(outcome)};
  }

  std::optional<GameTranscript> explore(const GameState& s, std::optional<Move> last,
                                        std::vector<GameEvent>& events) {
    if (auto done = decided_outcome(s)) {
      if (done->kind == OutcomeKind::AliceWins) return std::nullopt;
      return loss(events, *done);
    }
    if (++nodes > budget) throw BudgetExceeded(nodes);
    const std::size_t mark = events.size();

    if (s.turn() == Player::Alice) {
      GameState next = s;
      std::optional<GameTranscript> found;
      try {
        const TurnPlan plan = alice.plan(s, last);
        if (auto rejected = apply_turn(next, plan, events)) {
          found = loss(events, *rejected);
        } else {
          found = explore(next, plan.move, events);
        }
      } catch (const StrategyFailure& f) {
        found = loss(events, Outcome{OutcomeKind::BobWins, f.witness(), std::nullopt,
                                     std::nullopt, std::string("strategy failure: ") + f.what()});
      }
      events.resize(mark);
      return found;
    }

    std::string position = key(s);
    if (safe.contains(position)) return std::nullopt;
    for (const Move& m : legal_moves(s)) {
      GameState next = s;
      apply_turn(next, TurnPlan{{}, m}, events);
      auto found = explore(next, m, events);
      events.resize(mark);
      if (found) return found;
    }
    safe.insert(std::move(position));
    return std::nullopt;
  }
};

}  // namespace

std::optional<GameTranscript> find_alice_loss(const GameConfig& cfg, Strategy& alice,
                                              long long budget) {
  cfg.validate();
  LossSearch search{cfg, alice, budget, 0, {}};
  std::vector<GameEvent> events;
  return search.explore(GameState(std::make_shared<const GameConfig>(cfg)), std::nullopt, events);
}

}  // namespace cliquegame
