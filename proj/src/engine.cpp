#include "cliquegame/engine.hpp"

#include "cliquegame/errors.hpp"

namespace cliquegame {

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::AliceWins:
      return "alice_wins";
    case OutcomeKind::BobWins:
      return "bob_wins";
    case OutcomeKind::Forfeit:
      return "forfeit";
  }
  return "?";
}

std::optional<Outcome> decided_outcome(const GameState& s) {
  const Status st = status(s);
  if (st.kind == StatusKind::AliceWins) return Outcome{};
  if (st.kind == StatusKind::BobWins) {
    return Outcome{OutcomeKind::BobWins, st.witness, std::nullopt, std::nullopt,
                   "vertex " + std::to_string(*st.witness) + " has no legal color"};
  }
  return std::nullopt;
}

std::optional<Outcome> apply_turn(GameState& s, const TurnPlan& plan,
                                  std::vector<GameEvent>& events) {
  const Player p = s.turn();
  auto forfeit = [&](std::string why) {
    return Outcome{OutcomeKind::Forfeit, std::nullopt, p, plan.move, std::move(why)};
  };

  if (p == Player::Bob && !plan.activations.empty()) return forfeit("bob cannot activate vertices");
  for (Vertex v : plan.activations) {
    if (v < 0 || v >= s.order()) return forfeit("activation of unknown vertex " + std::to_string(v));
    if (s.colored(v)) return forfeit("activation of colored vertex " + std::to_string(v));
    if (s.active(v)) return forfeit("repeated activation of vertex " + std::to_string(v));
    s.activate(v);
    events.emplace_back(ActivationEvent{v});
  }

  const Move m = plan.move;
  try {
    const bool newly_active = m.vertex >= 0 && m.vertex < s.order() && !s.active(m.vertex);
    s = apply_move(s, p, m);
    events.emplace_back(MoveEvent{p, m.vertex, m.color, newly_active});
  } catch (const std::exception& e) {
    return forfeit(e.what());
  }
  return std::nullopt;
}

GameTranscript play_game(const GameConfig& cfg, Strategy& alice, Strategy& bob) {
  cfg.validate();
  GameTranscript t{cfg, {}, {}};
  GameState s(std::make_shared<const GameConfig>(cfg));
  std::optional<Move> last;
  while (true) {
    if (auto done = decided_outcome(s)) {
      t.outcome = std::move(*done);
      break;
    }
    TurnPlan plan;
    try {
      plan = (s.turn() == Player::Alice ? alice : bob).plan(s, last);
    } catch (const StrategyFailure& f) {
      t.outcome = Outcome{OutcomeKind::BobWins, f.witness(), std::nullopt, std::nullopt,
                          std::string("strategy failure: ") + f.what()};
      break;
    }
    if (auto rejected = apply_turn(s, plan, t.events)) {
      t.outcome = std::move(*rejected);
      break;
    }
    last = plan.move;
  }
  return t;
}

ReplayResult replay(const GameTranscript& t) {
  GameState s(std::make_shared<const GameConfig>(t.config));
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]: ";
    if (const auto* a = std::get_if<ActivationEvent>(&t.events[i])) {
      if (a->vertex < 0 || a->vertex >= s.order()) throw InputError(where + "unknown vertex");
      if (!s.activate(a->vertex)) throw InputError(where + "vertex already active");
      continue;
    }
    const auto& mv = std::get<MoveEvent>(t.events[i]);
    try {
      if (mv.vertex >= 0 && mv.vertex < s.order() && s.active(mv.vertex) == mv.activated) {
        throw InputError("activation flag does not match the replayed active set");
      }
      s = apply_move(s, mv.player, Move{mv.vertex, mv.color});
    } catch (const std::exception& e) {
      throw InputError(where + e.what());
    }
  }

  Outcome outcome;
  const Status st = status(s);
  if (t.outcome.kind == OutcomeKind::Forfeit) {
    if (st.kind != StatusKind::Ongoing) {
      throw InputError("recorded forfeit but the replayed game is already decided");
    }
    outcome = t.outcome;
  } else if (st.kind == StatusKind::AliceWins) {
    outcome = Outcome{};
  } else if (st.kind == StatusKind::BobWins) {
    outcome = Outcome{OutcomeKind::BobWins, st.witness, std::nullopt, std::nullopt,
                      "vertex " + std::to_string(*st.witness) + " has no legal color"};
  } else {
    throw InputError("replayed game is still ongoing");
  }
  return ReplayResult{std::move(s), std::move(outcome)};
}

std::optional<std::string> audit_activations(const GameTranscript& t) {
  const int n = t.config.order();
  std::vector<char> colored(n, 0), active(n, 0);
  std::vector<int> alice_actions(n, 0);
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]: ";
    Vertex v = 0;
    if (const auto* a = std::get_if<ActivationEvent>(&t.events[i])) {
      v = a->vertex;
      if (colored[v]) return where + "activation of colored vertex " + std::to_string(v);
      if (active[v]) return where + "second activation of vertex " + std::to_string(v);
      active[v] = 1;
      ++alice_actions[v];
    } else {
      const auto& mv = std::get<MoveEvent>(t.events[i]);
      v = mv.vertex;
      if (mv.player == Player::Alice) {
        if (!active[v] || mv.activated) {
          return where + "alice colored inactive vertex " + std::to_string(v);
        }
        ++alice_actions[v];
      } else if (mv.activated) {
        if (active[v]) return where + "activation flag on already active vertex";
        ++alice_actions[v];
      } else if (!active[v]) {
        return where + "colored vertex " + std::to_string(v) + " left inactive";
      }
      colored[v] = 1;
      active[v] = 1;
    }
    if (alice_actions[v] > 2) {
      return where + "more than two alice actions on vertex " + std::to_string(v);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> coloring_event_index(const GameTranscript& t, Vertex v) {
  for (std::size_t i = 0; i < t.events.size(); ++i)
    if (const auto* mv = std::get_if<MoveEvent>(&t.events[i]); mv && mv->vertex == v) return i;
  return std::nullopt;
}

Json config_to_json(const GameConfig& cfg) {
  Json doc;
  doc["k"] = cfg.k;
  doc["c"] = cfg.colors;
  doc["digest"] = config_digest(cfg);
  doc["play_graph"] = graph_to_json(cfg.play_graph);
  doc["strategy_graph"] = cfg.strategy_graph ? graph_to_json(*cfg.strategy_graph) : Json(nullptr);
  return doc;
}

GameConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("config: expected an object");
  GameConfig cfg;
  if (!doc.contains("k") || !doc["k"].is_number_integer()) throw InputError("config.k: expected an integer");
  if (!doc.contains("c") || !doc["c"].is_number_integer()) throw InputError("config.c: expected an integer");
  cfg.k = doc["k"].get<int>();
  cfg.colors = doc["c"].get<int>();
  if (!doc.contains("play_graph")) throw InputError("config.play_graph: missing");
  try {
    cfg.play_graph = graph_from_json(doc["play_graph"]);
    if (doc.contains("strategy_graph") && !doc["strategy_graph"].is_null()) {
      cfg.strategy_graph = graph_from_json(doc["strategy_graph"]);
    }
  } catch (const InputError& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

Json outcome_to_json(const Outcome& o) {
  Json doc;
  doc["result"] = to_string(o.kind);
  doc["witness"] = o.witness ? Json(*o.witness) : Json(nullptr);
  doc["player"] = o.offender ? Json(to_string(*o.offender)) : Json(nullptr);
  doc["attempted"] =
      o.attempted ? Json{{"vertex", o.attempted->vertex}, {"color", o.attempted->color}} : Json(nullptr);
  doc["diagnostic"] = o.diagnostic;
  return doc;
}

namespace {

Player player_from(const Json& j, const std::string& where) {
  if (j == "alice") return Player::Alice;
  if (j == "bob") return Player::Bob;
  throw InputError(where + ": expected \"alice\" or \"bob\"");
}

int int_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw InputError(where + "." + key + ": expected an integer");
  }
  return obj[key].get<int>();
}

}  // namespace

Json transcript_to_json(const GameTranscript& t) {
  Json doc;
  doc["config"] = config_to_json(t.config);
  Json events = Json::array();
  for (const GameEvent& e : t.events) {
    if (const auto* a = std::get_if<ActivationEvent>(&e)) {
      events.push_back({{"type", "activate"}, {"vertex", a->vertex}});
    } else {
      const auto& mv = std::get<MoveEvent>(e);
      events.push_back({{"type", "move"},
                        {"player", to_string(mv.player)},
                        {"vertex", mv.vertex},
                        {"color", mv.color},
                        {"activated", mv.activated}});
    }
  }
  doc["events"] = std::move(events);
  doc["outcome"] = outcome_to_json(t.outcome);
  return doc;
}

GameTranscript transcript_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("$: expected an object");
  if (!doc.contains("config")) throw InputError("$.config: missing");
  GameTranscript t{config_from_json(doc["config"]), {}, {}};
  if (!doc.contains("events") || !doc["events"].is_array()) {
    throw InputError("$.events: expected an array");
  }
  const Json& events = doc["events"];
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Json& e = events[i];
    const std::string where = "events[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("type")) throw InputError(where + ": expected an event object");
    if (e["type"] == "activate") {
      t.events.emplace_back(ActivationEvent{int_field(e, "vertex", where)});
    } else if (e["type"] == "move") {
      if (!e.contains("player")) throw InputError(where + ".player: missing");
      MoveEvent mv{player_from(e["player"], where + ".player"), int_field(e, "vertex", where),
                   int_field(e, "color", where), e.value("activated", false)};
      t.events.emplace_back(mv);
    } else {
      throw InputError(where + ".type: expected \"activate\" or \"move\"");
    }
  }
  if (!doc.contains("outcome") || !doc["outcome"].is_object()) {
    throw InputError("$.outcome: expected an object");
  }
  const Json& o = doc["outcome"];
  const std::string result = o.value("result", "");
  if (result == "alice_wins") {
    t.outcome.kind = OutcomeKind::AliceWins;
  } else if (result == "bob_wins") {
    t.outcome.kind = OutcomeKind::BobWins;
  } else if (result == "forfeit") {
    t.outcome.kind = OutcomeKind::Forfeit;
  } else {
    throw InputError("$.outcome.result: unknown result \"" + result + "\"");
  }
  if (o.contains("witness") && !o["witness"].is_null()) t.outcome.witness = o["witness"].get<int>();
  if (o.contains("player") && !o["player"].is_null()) {
    t.outcome.offender = player_from(o["player"], "$.outcome.player");
  }
  if (o.contains("attempted") && !o["attempted"].is_null()) {
    t.outcome.attempted = Move{int_field(o["attempted"], "vertex", "$.outcome.attempted"),
                               int_field(o["attempted"], "color", "$.outcome.attempted")};
  }
  t.outcome.diagnostic = o.value("diagnostic", "");
  return t;
}

}  // namespace cliquegame
