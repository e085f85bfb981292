#include "cliquegame/session.hpp"

#include <random>

#include "cliquegame/errors.hpp"
#include "cliquegame/fixtures.hpp"

namespace cliquegame {
namespace {

Json status_json(const std::optional<Outcome>& outcome) {
  Json doc;
  if (!outcome) {
    doc["result"] = "ongoing";
    doc["witness"] = nullptr;
    doc["diagnostic"] = "";
    return doc;
  }
  doc["result"] = to_string(outcome->kind);
  doc["witness"] = outcome->witness ? Json(*outcome->witness) : Json(nullptr);
  doc["diagnostic"] = outcome->diagnostic;
  return doc;
}

Json last_alice_turn(const std::vector<GameEvent>& events) {
  std::size_t end = events.size();
  while (end > 0) {
    const auto* mv = std::get_if<MoveEvent>(&events[end - 1]);
    if (mv && mv->player == Player::Alice) break;
    --end;
  }
  if (end == 0) return nullptr;
  const auto& move = std::get<MoveEvent>(events[end - 1]);
  std::size_t begin = end - 1;
  while (begin > 0 && std::holds_alternative<ActivationEvent>(events[begin - 1])) --begin;

  Json doc;
  Json chain = Json::array();
  doc["trigger"] = nullptr;
  if (begin > 0) {
    const auto& bob = std::get<MoveEvent>(events[begin - 1]);
    doc["trigger"] = bob.vertex;
    chain.push_back(bob.vertex);
  }
  Json activations = Json::array();
  for (std::size_t i = begin; i + 1 < end; ++i) {
    const Vertex v = std::get<ActivationEvent>(events[i]).vertex;
    activations.push_back(v);
    chain.push_back(v);
  }
  if (chain.empty() || chain.back() != move.vertex) chain.push_back(move.vertex);
  doc["activations"] = std::move(activations);
  doc["chain"] = std::move(chain);
  doc["move"] = {{"vertex", move.vertex}, {"color", move.color}};
  return doc;
}

int int_member(const Json& body, const char* key) {
  if (!body.contains(key)) throw InputError(std::string(key) + ": missing");
  if (!body[key].is_number_integer()) throw InputError(std::string(key) + ": expected an integer");
  return body[key].get<int>();
}

template <class F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

Json board_view(const GameConfig& cfg, const std::vector<GameEvent>& events,
                const LinearOrdering& ordering, const std::vector<std::string>& labels,
                const std::optional<Outcome>& recorded) {
  GameState s(std::make_shared<const GameConfig>(cfg));
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (const auto* a = std::get_if<ActivationEvent>(&events[i])) {
      if (a->vertex < 0 || a->vertex >= s.order() || !s.activate(a->vertex)) {
        throw InputError("events[" + std::to_string(i) + "]: invalid activation");
      }
      continue;
    }
    const auto& mv = std::get<MoveEvent>(events[i]);
    s = apply_move(s, mv.player, Move{mv.vertex, mv.color});
  }

  std::optional<Outcome> outcome = recorded;
  if (!outcome) outcome = decided_outcome(s);

  Json doc;
  doc["k"] = cfg.k;
  doc["c"] = cfg.colors;
  doc["graph"] = graph_to_json(cfg.play_graph);
  doc["strategy_graph"] = cfg.strategy_graph ? graph_to_json(*cfg.strategy_graph) : Json(nullptr);
  doc["ordering"] = ordering_to_json(ordering);
  std::vector<int> position(ordering.size());
  for (Vertex v = 0; v < static_cast<int>(ordering.size()); ++v) position[v] = ordering.position(v);
  doc["position"] = position;
  doc["simplicial"] = is_simplicial_ordering(OrderedGraph(cfg.alice_graph(), ordering));
  doc["labels"] = labels.empty() ? Json(nullptr) : Json(labels);
  std::vector<int> colors(s.coloring().begin(), s.coloring().end());
  doc["colors"] = colors;
  std::vector<bool> active(s.order());
  for (Vertex v = 0; v < s.order(); ++v) active[v] = s.active(v);
  doc["active"] = active;
  doc["turn"] = outcome ? Json(nullptr) : Json(to_string(s.turn()));
  doc["status"] = status_json(outcome);
  doc["moves"] = s.colored_count();
  doc["last_alice_turn"] = last_alice_turn(events);
  return doc;
}

Session::Session(std::string id_, std::shared_ptr<const GameConfig> config_, ActivationAlice alice_,
                 std::vector<std::string> labels_, Clock::time_point now)
    : id(std::move(id_)),
      config(std::move(config_)),
      alice(std::move(alice_)),
      state(config),
      labels(std::move(labels_)),
      created(now),
      last_active(now) {}

int Session::moves() const { return state.colored_count(); }

Json Session::view() const {
  Json doc;
  doc["id"] = id;
  const Json board = board_view(*config, events, alice.ordered().ordering(), labels, outcome);
  for (const auto& [key, value] : board.items()) {
    doc[key] = value;
  }
  return doc;
}

Json Session::transcript() const {
  Json doc = transcript_to_json(GameTranscript{*config, events, outcome.value_or(Outcome{})});
  if (!outcome) doc["outcome"] = status_json(std::nullopt);
  doc["ordering"] = ordering_to_json(alice.ordered().ordering());
  doc["labels"] = labels.empty() ? Json(nullptr) : Json(labels);
  return doc;
}

SessionManager::SessionManager(std::chrono::seconds idle_timeout, Now now, std::uint64_t id_seed)
    : idle_timeout_(idle_timeout),
      now_(std::move(now)),
      ids_(id_seed != 0 ? id_seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}()) {}

std::string SessionManager::fresh_id() {
  while (true) {
    std::string id = digest_hex(ids_.next()) + digest_hex(ids_.next());
    if (!sessions_.contains(id)) return id;
  }
}

Json SessionManager::create(const Json& body) {
  expire_idle();
  if (!body.is_object()) throw InputError("$: expected an object");
  auto cfg = std::make_shared<GameConfig>();
  cfg->k = int_member(body, "k");
  cfg->colors = int_member(body, "c");
  if (cfg->k < 1) throw InputError("k: must be at least 1");
  if (cfg->colors < 1) throw InputError("c: must be at least 1");

  int sources = 0;
  for (const char* key : {"graph", "witness", "generator", "fixture"}) sources += body.contains(key) ? 1 : 0;
  if (sources != 1) {
    throw InputError("$: expected exactly one of \"graph\", \"witness\", \"generator\" or \"fixture\"");
  }

  std::optional<LinearOrdering> ordering;
  std::vector<std::string> labels;
  if (body.contains("graph")) {
    cfg->play_graph = located("graph", [&] { return graph_from_json(body["graph"]); });
    if (body.contains("strategy_graph") && !body["strategy_graph"].is_null()) {
      cfg->strategy_graph = located("strategy_graph", [&] { return graph_from_json(body["strategy_graph"]); });
    }
  } else if (body.contains("witness")) {
    PartialKTreeWitness w = located("witness", [&] { return witness_from_json(body["witness"]); });
    cfg->play_graph = std::move(w.g);
    cfg->strategy_graph = std::move(w.h);
  } else if (body.contains("generator")) {
    const Json& gen = body["generator"];
    if (!gen.is_object()) throw InputError("generator: expected an object");
    const std::string type = gen.value("type", "chordal");
    const int omega = gen.contains("omega") ? int_member(gen, "omega") : cfg->k + 1;
    const int n = gen.contains("n") ? int_member(gen, "n") : 12;
    const std::uint64_t seed = gen.value("seed", std::uint64_t{1});
    located("generator", [&] {
      if (omega < 2) throw InputError("omega: must be at least 2");
      if (n < omega) throw InputError("n: must be at least omega");
      if (n > 64) throw InputError("n: at most 64 vertices");
      if (type == "chordal") {
        cfg->play_graph = sparsify_chordal(generate_ktree(omega - 1, n, seed),
                                           gen.value("drop_prob", 0.3), derive_seed(seed, 2));
      } else if (type == "ktree") {
        cfg->play_graph = generate_ktree(omega - 1, n, seed);
      } else if (type == "partial-ktree") {
        PartialKTreeWitness w = generate_partial_ktree(omega - 1, n, gen.value("keep_prob", 0.6), seed);
        cfg->play_graph = std::move(w.g);
        cfg->strategy_graph = std::move(w.h);
      } else {
        throw InputError("type: expected \"chordal\", \"ktree\" or \"partial-ktree\"");
      }
      return 0;
    });
  } else {
    if (!body["fixture"].is_string()) throw InputError("fixture: expected a name");
    Fixture f = located("fixture", [&] { return fixture_by_name(body["fixture"].get<std::string>()); });
    cfg->play_graph = std::move(f.graph);
    ordering = std::move(f.ordering);
    labels = std::move(f.labels);
  }
  cfg->validate();

  if (body.contains("ordering") && !body["ordering"].is_null()) {
    const Json& raw = body["ordering"];
    if (!raw.is_array()) throw InputError("ordering: expected an array of vertex ids");
    std::vector<Vertex> order;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!raw[i].is_number_integer()) throw InputError("ordering[" + std::to_string(i) + "]: expected an integer");
      order.push_back(raw[i].get<int>());
    }
    ordering = located("ordering", [&] { return LinearOrdering(std::move(order)); });
    if (static_cast<int>(ordering->size()) != cfg->order()) {
      throw InputError("ordering: expected " + std::to_string(cfg->order()) + " vertices");
    }
  }

  const std::string policy = body.value("color_policy", "least-index");
  ColorPolicy color_policy = located("color_policy", [&] { return make_color_policy(policy); });
  ActivationAlice alice =
      ordering ? ActivationAlice(OrderedGraph(cfg->alice_graph(), *ordering), color_policy, policy)
               : ActivationAlice::for_config(*cfg, policy);

  const auto now = now_();
  std::shared_ptr<Session> session;
  {
    std::lock_guard guard(mutex_);
    session = std::make_shared<Session>(fresh_id(), cfg, std::move(alice), std::move(labels), now);
    sessions_.emplace(session->id, session);
  }

  std::lock_guard guard(session->lock);
  if (auto done = decided_outcome(session->state)) {
    session->outcome = std::move(done);
    return session->view();
  }
  try {
    const TurnPlan plan = session->alice.plan(session->state, std::nullopt);
    if (auto rejected = apply_turn(session->state, plan, session->events)) {
      session->outcome = std::move(rejected);
    } else {
      session->outcome = decided_outcome(session->state);
    }
  } catch (const StrategyFailure& f) {
    session->outcome = Outcome{OutcomeKind::BobWins, f.witness(), std::nullopt, std::nullopt,
                               std::string("strategy failure: ") + f.what()};
  }
  return session->view();
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) {
  std::lock_guard guard(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("no session \"" + id + "\"");
  const auto now = now_();
  if (now - it->second->last_active > idle_timeout_) {
    sessions_.erase(it);
    throw NotFoundError("session \"" + id + "\" expired");
  }
  it->second->last_active = now;
  return it->second;
}

Json SessionManager::view(const std::string& id) {
  auto session = find(id);
  std::lock_guard guard(session->lock);
  return session->view();
}

Json SessionManager::submit_move(const std::string& id, const Json& body) {
  auto session = find(id);
  std::unique_lock guard(session->lock, std::try_to_lock);
  if (!guard.owns_lock()) throw ConflictError("another move on this session is in progress");
  if (!body.is_object()) throw InputError("$: expected an object");
  const Move m{int_member(body, "vertex"), int_member(body, "color")};
  if (body.contains("expected_moves")) {
    const int expected = int_member(body, "expected_moves");
    if (expected != session->moves()) {
      throw ConflictError("expected " + std::to_string(expected) + " moves, the game has " +
                          std::to_string(session->moves()));
    }
  }
  if (session->outcome) throw ProtocolError("the game is over");

  GameState& s = session->state;
  GameState next = apply_move(s, Player::Bob, m);
  session->events.emplace_back(MoveEvent{Player::Bob, m.vertex, m.color, !s.active(m.vertex)});
  s = std::move(next);
  if (auto done = decided_outcome(s)) {
    session->outcome = std::move(done);
    return session->view();
  }
  try {
    const TurnPlan plan = session->alice.plan(s, m);
    if (auto rejected = apply_turn(s, plan, session->events)) {
      session->outcome = std::move(rejected);
    } else {
      session->outcome = decided_outcome(s);
    }
  } catch (const StrategyFailure& f) {
    session->outcome = Outcome{OutcomeKind::BobWins, f.witness(), std::nullopt, std::nullopt,
                               std::string("strategy failure: ") + f.what()};
  }
  return session->view();
}

Json SessionManager::hints(const std::string& id) {
  auto session = find(id);
  std::lock_guard guard(session->lock);
  const GameState& s = session->state;
  Json list = Json::array();
  for (Vertex v = 0; v < s.order(); ++v) {
    if (s.colored(v)) continue;
    list.push_back({{"vertex", v}, {"colors", legal_colors(s, v)}});
  }
  Json doc;
  doc["turn"] = session->outcome ? Json(nullptr) : Json(to_string(s.turn()));
  doc["hints"] = std::move(list);
  return doc;
}

Json SessionManager::transcript(const std::string& id) {
  auto session = find(id);
  std::lock_guard guard(session->lock);
  return session->transcript();
}

std::size_t SessionManager::expire_idle() {
  std::lock_guard guard(mutex_);
  const auto now = now_();
  return std::erase_if(sessions_, [&](const auto& entry) {
    return now - entry.second->last_active > idle_timeout_;
  });
}

std::size_t SessionManager::size() const {
  std::lock_guard guard(mutex_);
  return sessions_.size();
}

}  // namespace cliquegame
