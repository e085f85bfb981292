#include "cliquegame/strategies.hpp"

#include <algorithm>

#include "cliquegame/errors.hpp"
#include "cliquegame/solver.hpp"

namespace cliquegame {

ColorPolicy make_color_policy(const std::string& name) {
  if (name == "least-index") {
    return [](const GameState&, Vertex, std::span<const Color> legal) { return legal.front(); };
  }
  if (name == "greatest-index") {
    return [](const GameState&, Vertex, std::span<const Color> legal) { return legal.back(); };
  }
  if (name == "least-used") {
    return [](const GameState& s, Vertex, std::span<const Color> legal) {
      std::vector<int> used(s.config().colors + 1, 0);
      for (Color c : s.coloring()) ++used[c];
      Color best = legal.front();
      for (Color c : legal)
        if (used[c] < used[best]) best = c;
      return best;
    };
  }
  throw InputError("unknown color policy \"" + name + "\"");
}

std::optional<Vertex> mother(const OrderedGraph& og, const GameState& s, Vertex x) {
  for (Vertex p : og.parents(x))
    if (!s.colored(p)) return p;
  if (!s.colored(x)) return x;
  return std::nullopt;
}

ActivationAlice::ActivationAlice(OrderedGraph ordered, ColorPolicy policy, std::string policy_name)
    : ordered_(std::move(ordered)), policy_(std::move(policy)), policy_name_(std::move(policy_name)) {}

ActivationAlice ActivationAlice::for_config(const GameConfig& cfg, const std::string& color_policy) {
  const Graph& h = cfg.alice_graph();
  LinearOrdering ordering = simplicial_ordering(h).value_or(mcs_ordering(h));
  return ActivationAlice(OrderedGraph(h, std::move(ordering)), make_color_policy(color_policy),
                         color_policy);
}

TurnPlan ActivationAlice::color_stage(const GameState& s, Vertex u,
                                      std::vector<Vertex> activations) const {
  const std::vector<Color> legal = legal_colors(s, u);
  if (legal.empty()) {
    throw StrategyFailure("no legal color for vertex " + std::to_string(u), u);
  }
  trace_.target = u;
  return TurnPlan{std::move(activations), Move{u, policy_(s, u, legal)}};
}

TurnPlan ActivationAlice::first_move(const GameState& s) const {
  if (s.order() == 0) throw ProtocolError("empty graph has no first move");
  const Vertex least = ordered_.ordering().at(0);
  if (s.colored(least)) throw ProtocolError("first move requires the initial position");
  trace_ = ActivationTrace{std::nullopt, {least}, least};
  std::vector<Vertex> activations;
  if (!s.active(least)) activations.push_back(least);
  return color_stage(s, least, std::move(activations));
}

TurnPlan ActivationAlice::respond(const GameState& s, Vertex b) const {
  if (b < 0 || b >= s.order()) throw InputError("unknown vertex " + std::to_string(b));
  if (!s.colored(b)) throw ProtocolError("vertex " + std::to_string(b) + " has not been colored");
  // b is colored and therefore already active; activating it again is a no-op.
  trace_ = ActivationTrace{b, {}, b};
  std::vector<Vertex> activations;
  std::vector<char> activated_now(s.order(), 0);
  auto is_active = [&](Vertex v) { return s.active(v) || activated_now[v]; };

  Vertex u = 0;
  if (const auto m = mother(ordered_, s, b)) {
    Vertex x = *m;
    while (!is_active(x)) {
      trace_.visited.push_back(x);
      activations.push_back(x);
      activated_now[x] = 1;
      x = *mother(ordered_, s, x);  // x is uncolored, so it has a mother
    }
    trace_.visited.push_back(x);
    u = x;
  } else {
    const auto order = ordered_.ordering().order();
    const auto it = std::find_if(order.begin(), order.end(), [&](Vertex v) { return !s.colored(v); });
    if (it == order.end()) throw ProtocolError("no uncolored vertex left");
    u = *it;
    trace_.visited.push_back(u);
    if (!is_active(u)) activations.push_back(u);
  }
  return color_stage(s, u, std::move(activations));
}

TurnPlan ActivationAlice::plan(const GameState& s, std::optional<Move> last_opponent_move) {
  if (!last_opponent_move) return first_move(s);
  return respond(s, last_opponent_move->vertex);
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> out;
  for (Vertex v = 0; v < s.order(); ++v) {
    if (s.colored(v)) continue;
    for (Color c : legal_colors(s, v)) out.push_back({v, c});
  }
  return out;
}

TurnPlan RandomBob::plan(const GameState& s, std::optional<Move>) {
  const std::vector<Move> moves = legal_moves(s);
  if (moves.empty()) throw ProtocolError("no legal move available");
  return TurnPlan{{}, moves[rng_.below(moves.size())]};
}

bool ThreatScore::beats(const ThreatScore& other) const {
  if (stuck != other.stuck) return stuck > other.stuck;
  if (removed != other.removed) return removed > other.removed;
  return tightest < other.tightest;
}

ThreatScore threat_score(const GameState& s, Move m) {
  const GameConfig& cfg = s.config();
  const Graph& g = cfg.play_graph;
  std::vector<Color> after(s.coloring().begin(), s.coloring().end());
  after[m.vertex] = m.color;
  ThreatScore score;
  for (Vertex w : g.neighbors(m.vertex)) {
    if (s.colored(w)) continue;
    if (completing_clique(g, s.coloring(), cfg.k, w, m.color)) continue;
    if (!completing_clique(g, after, cfg.k, w, m.color)) continue;
    const int remaining = static_cast<int>(legal_colors(s, w).size()) - 1;
    ++score.removed;
    score.tightest = std::min(score.tightest, remaining);
    if (remaining == 0) ++score.stuck;
  }
  return score;
}

TurnPlan CliqueThreatBob::plan(const GameState& s, std::optional<Move>) {
  const std::vector<Move> moves = legal_moves(s);
  if (moves.empty()) throw ProtocolError("no legal move available");
  Move best = moves.front();
  ThreatScore best_score = threat_score(s, best);
  for (std::size_t i = 1; i < moves.size(); ++i) {
    const ThreatScore score = threat_score(s, moves[i]);
    if (score.beats(best_score)) {
      best = moves[i];
      best_score = score;
    }
  }
  return TurnPlan{{}, best};
}

MinimaxBob::MinimaxBob(long long budget) : budget_(budget) {}
MinimaxBob::~MinimaxBob() = default;

TurnPlan MinimaxBob::plan(const GameState& s, std::optional<Move>) {
  const GameConfig& cfg = s.config();
  if (!solver_) solver_ = std::make_unique<GameSolver>(cfg.play_graph, cfg.k, cfg.colors, budget_);
  const std::vector<Move> moves = legal_moves(s);
  if (moves.empty()) throw ProtocolError("no legal move available");
  for (const Move& m : moves) {
    const GameState child = apply_move(s, Player::Bob, m);
    if (status(child).kind == StatusKind::BobWins) return TurnPlan{{}, m};
    if (!solver_->alice_wins_from(child.coloring())) return TurnPlan{{}, m};
  }
  return TurnPlan{{}, moves.front()};
}

ScriptedBob::ScriptedBob(std::vector<Move> script, std::unique_ptr<Strategy> fallback)
    : script_(std::move(script)), fallback_(std::move(fallback)) {}

TurnPlan ScriptedBob::plan(const GameState& s, std::optional<Move> last) {
  while (next_ < script_.size()) {
    const Move m = script_[next_++];
    if (m.vertex < 0 || m.vertex >= s.order() || s.colored(m.vertex)) continue;
    if (completing_clique(s.config().play_graph, s.coloring(), s.config().k, m.vertex, m.color)) {
      continue;
    }
    return TurnPlan{{}, m};
  }
  return fallback_->plan(s, last);
}

std::unique_ptr<Strategy> make_strategy(const Json& selector, const GameConfig& cfg, Player seat,
                                        std::uint64_t seed, long long budget) {
  std::string type;
  Json params = Json::object();
  if (selector.is_string()) {
    type = selector.get<std::string>();
  } else if (selector.is_object() && selector.contains("type") && selector["type"].is_string()) {
    type = selector["type"].get<std::string>();
    params = selector;
  } else {
    throw InputError("strategy selector must be a type name or an object with \"type\"");
  }

  if (seat == Player::Alice) {
    if (type != "activation") throw InputError("unknown alice strategy \"" + type + "\"");
    const std::string policy = params.value("color_policy", std::string("least-index"));
    return std::make_unique<ActivationAlice>(ActivationAlice::for_config(cfg, policy));
  }
  if (type == "random") return std::make_unique<RandomBob>(seed);
  if (type == "clique-threat") return std::make_unique<CliqueThreatBob>();
  if (type == "minimax") return std::make_unique<MinimaxBob>(params.value("budget", budget));
  throw InputError("unknown bob strategy \"" + type + "\"");
}

}  // namespace cliquegame
