#include "cliquegame/game.hpp"

#include <algorithm>

#include "cliquegame/errors.hpp"
#include "cliquegame/rng.hpp"

namespace cliquegame {

const char* to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

void GameConfig::validate() const {
  if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
  if (colors < 1) throw InputError("color count c must be at least 1, got " + std::to_string(colors));
  if (strategy_graph) {
    if (strategy_graph->order() != play_graph.order()) {
      throw InputError("strategy graph has " + std::to_string(strategy_graph->order()) +
                       " vertices, play graph has " + std::to_string(play_graph.order()));
    }
    for (const Edge& e : play_graph.edges()) {
      if (!strategy_graph->adjacent(e.u, e.v)) {
        throw InputError("play edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") missing from strategy graph");
      }
    }
  }
}

std::string config_digest(const GameConfig& cfg) {
  std::uint64_t h = mix_seed(static_cast<std::uint64_t>(cfg.k));
  h = mix_seed(h ^ static_cast<std::uint64_t>(cfg.colors));
  h = mix_seed(h ^ graph_digest(cfg.play_graph));
  if (cfg.strategy_graph) h = mix_seed(h ^ graph_digest(*cfg.strategy_graph) ^ 0x5bd1e995ULL);
  return digest_hex(h);
}

GameState::GameState(std::shared_ptr<const GameConfig> config) : config_(std::move(config)) {
  if (!config_) throw InputError("game state needs a configuration");
  config_->validate();
  coloring_.assign(config_->order(), kUncolored);
  active_.assign(config_->order(), 0);
}

GameState GameState::from_coloring(std::shared_ptr<const GameConfig> config,
                                   std::vector<Color> coloring) {
  GameState s(std::move(config));
  const GameConfig& cfg = s.config();
  if (static_cast<int>(coloring.size()) != cfg.order()) {
    throw InputError("coloring has " + std::to_string(coloring.size()) + " entries, graph has " +
                     std::to_string(cfg.order()) + " vertices");
  }
  for (Vertex v = 0; v < cfg.order(); ++v) {
    const Color c = coloring[v];
    if (c == kUncolored) continue;
    if (c < 1 || c > cfg.colors) {
      throw InputError("coloring[" + std::to_string(v) + "]: color " + std::to_string(c) +
                       " outside 1.." + std::to_string(cfg.colors));
    }
    // Check against the colors placed so far; every clique is found when its
    // highest vertex is placed.
    if (auto clique = completing_clique(cfg.play_graph, s.coloring_, cfg.k, v, c)) {
      throw RuleViolation("coloring contains a monochromatic (k+1)-clique", *clique);
    }
    s.coloring_[v] = c;
    s.active_[v] = 1;
    ++s.colored_count_;
  }
  s.turn_ = s.colored_count_ % 2 == 0 ? Player::Alice : Player::Bob;
  return s;
}

bool GameState::activate(Vertex v) {
  if (v < 0 || v >= order()) throw InputError("unknown vertex " + std::to_string(v));
  if (active_[v]) return false;
  active_[v] = 1;
  return true;
}

namespace {

bool find_clique(const Graph& g, std::span<const Vertex> candidates, int need,
                 std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
    const Vertex u = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(u, candidates[j])) next.push_back(candidates[j]);
    if (static_cast<int>(next.size()) < need - 1) continue;
    chosen.push_back(u);
    if (find_clique(g, next, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> completing_clique(const Graph& g,
                                                     std::span<const Color> coloring, int k,
                                                     Vertex v, Color color) {
  std::vector<Vertex> same;
  for (Vertex u : g.neighbors(v))
    if (coloring[u] == color) same.push_back(u);
  if (static_cast<int>(same.size()) < k) return std::nullopt;
  std::vector<Vertex> chosen;
  if (!find_clique(g, same, k, chosen)) return std::nullopt;
  return chosen;
}

std::vector<Color> legal_colors(const Graph& g, std::span<const Color> coloring, int k, int colors,
                                Vertex v) {
  std::vector<Color> out;
  for (Color c = 1; c <= colors; ++c)
    if (!completing_clique(g, coloring, k, v, c)) out.push_back(c);
  return out;
}

std::vector<Color> legal_colors(const GameState& s, Vertex v) {
  if (v < 0 || v >= s.order()) throw InputError("unknown vertex " + std::to_string(v));
  if (s.colored(v)) throw InputError("vertex " + std::to_string(v) + " is already colored");
  const GameConfig& cfg = s.config();
  return legal_colors(cfg.play_graph, s.coloring(), cfg.k, cfg.colors, v);
}

GameState apply_move(const GameState& s, Player mover, Move m) {
  if (mover != s.turn()) {
    throw ProtocolError(std::string("it is ") + to_string(s.turn()) + "'s turn, not " +
                        to_string(mover) + "'s");
  }
  if (status(s).kind != StatusKind::Ongoing) throw ProtocolError("the game is already over");
  const GameConfig& cfg = s.config();
  if (m.vertex < 0 || m.vertex >= s.order()) {
    throw InputError("unknown vertex " + std::to_string(m.vertex));
  }
  if (s.colored(m.vertex)) {
    throw InputError("vertex " + std::to_string(m.vertex) + " is already colored");
  }
  if (m.color < 1 || m.color > cfg.colors) {
    throw InputError("color " + std::to_string(m.color) + " outside 1.." +
                     std::to_string(cfg.colors));
  }
  if (auto clique = completing_clique(cfg.play_graph, s.coloring(), cfg.k, m.vertex, m.color)) {
    clique->push_back(m.vertex);
    std::sort(clique->begin(), clique->end());
    std::string names;
    for (Vertex u : *clique) names += (names.empty() ? "" : ", ") + std::to_string(u);
    throw RuleViolation("coloring vertex " + std::to_string(m.vertex) + " with color " +
                            std::to_string(m.color) + " completes the monochromatic clique {" +
                            names + "}",
                        std::move(*clique));
  }
  GameState next = s;
  next.coloring_[m.vertex] = m.color;
  next.active_[m.vertex] = 1;
  ++next.colored_count_;
  next.turn_ = other(s.turn_);
  return next;
}

Status status(const GameState& s) {
  if (s.colored_count() == s.order()) return {StatusKind::AliceWins, std::nullopt};
  const GameConfig& cfg = s.config();
  for (Vertex v = 0; v < s.order(); ++v) {
    if (s.colored(v)) continue;
    bool any = false;
    for (Color c = 1; c <= cfg.colors && !any; ++c)
      any = !completing_clique(cfg.play_graph, s.coloring(), cfg.k, v, c);
    if (!any) return {StatusKind::BobWins, v};
  }
  return {StatusKind::Ongoing, std::nullopt};
}

std::string to_string(const Status& s) {
  switch (s.kind) {
    case StatusKind::Ongoing:
      return "ongoing";
    case StatusKind::AliceWins:
      return "alice_wins";
    case StatusKind::BobWins:
      return "bob_wins(" + std::to_string(*s.witness) + ")";
  }
  return "?";
}

}  // namespace cliquegame
