#include <doctest.h>

#include <algorithm>
#include <map>

#include "cliquegame/errors.hpp"
#include "cliquegame/fixtures.hpp"
#include "cliquegame/strategies.hpp"
#include "oracles.hpp"

using namespace cliquegame;

namespace {

std::shared_ptr<const GameConfig> make_config(Graph g, int k, int c) {
  auto cfg = std::make_shared<GameConfig>();
  cfg->k = k;
  cfg->colors = c;
  cfg->play_graph = std::move(g);
  return cfg;
}

std::vector<int> as_vector(std::span<const Color> coloring) { return {coloring.begin(), coloring.end()}; }

OrderedGraph identity_ordered(const Graph& g) { return OrderedGraph(g, LinearOrdering::identity(g.order())); }

}  // namespace

TEST_CASE("mother") {
  const OrderedGraph og = identity_ordered(Graph::path(3));
  auto cfg = make_config(Graph::path(3), 1, 2);
  const GameState empty(cfg);
  CHECK(mother(og, empty, 2) == 1);
  CHECK(mother(og, empty, 1) == 0);
  CHECK(mother(og, empty, 0) == 0);
  const GameState first = GameState::from_coloring(cfg, {1, 0, 0});
  CHECK(mother(og, first, 1) == 1);
  CHECK(mother(og, first, 0) == std::nullopt);
  const GameState two = GameState::from_coloring(cfg, {1, 2, 0});
  CHECK(mother(og, two, 1) == std::nullopt);
  CHECK(mother(og, two, 2) == 2);

  SUBCASE("least uncolored parent comes first") {
    const Fixture f = fixture_by_name("a-c-g");
    const OrderedGraph fog(f.graph, f.ordering);
    auto fcfg = make_config(f.graph, 2, 4);
    const GameState s(fcfg);
    CHECK(mother(fog, s, fixture_vertex('b')) == fixture_vertex('a'));
    CHECK(mother(fog, s, fixture_vertex('g')) == fixture_vertex('a'));
    std::vector<Color> coloring(9, 0);
    coloring[fixture_vertex('a')] = 1;
    const GameState after = GameState::from_coloring(fcfg, coloring);
    CHECK(mother(fog, after, fixture_vertex('g')) == fixture_vertex('c'));
    CHECK(mother(fog, after, fixture_vertex('b')) == fixture_vertex('g'));
  }
}

TEST_CASE("activation strategy turns") {
  auto cfg = make_config(Graph::path(4), 1, 2);
  ActivationAlice alice(identity_ordered(Graph::path(4)), make_color_policy("least-index"), "least-index");

  SUBCASE("first move activates and colors the least vertex") {
    const TurnPlan p = alice.first_move(GameState(cfg));
    CHECK(p.activations == std::vector<Vertex>{0});
    CHECK(p.move == Move{0, 1});
    CHECK(alice.plan(GameState(cfg), std::nullopt).move == Move{0, 1});
  }
  SUBCASE("Bob's vertex without a mother sends Alice to the least uncolored vertex") {
    GameState s(cfg);
    s = apply_move(s, Player::Alice, {0, 1});
    s = apply_move(s, Player::Bob, {1, 2});
    const TurnPlan p = alice.respond(s, 1);
    CHECK(p.activations == std::vector<Vertex>{2});
    CHECK(p.move == Move{2, 1});
    CHECK(alice.last_trace().trigger == 1);
    CHECK(alice.last_trace().target == 2);
  }
  SUBCASE("the search walks mothers until it meets an active vertex") {
    GameState s(cfg);
    s = apply_move(s, Player::Alice, {0, 1});
    s = apply_move(s, Player::Bob, {3, 1});
    const TurnPlan p = alice.respond(s, 3);
    CHECK(p.activations == std::vector<Vertex>{2, 1});
    CHECK(p.move == Move{1, 2});
    CHECK(alice.last_trace().visited == std::vector<Vertex>{2, 1, 1});
  }
  SUBCASE("a chain stops at an already active vertex") {
    GameState s(cfg);
    s = apply_move(s, Player::Alice, {0, 1});
    s.activate(2);
    s = apply_move(s, Player::Bob, {3, 2});
    const TurnPlan p = alice.respond(s, 3);
    CHECK(p.activations.empty());
    CHECK(p.move.vertex == 2);
  }
  SUBCASE("misuse is reported") {
    GameState s(cfg);
    CHECK_THROWS_AS(alice.respond(s, 2), ProtocolError);
    CHECK_THROWS_AS(alice.respond(s, 9), InputError);
    s = apply_move(s, Player::Alice, {0, 1});
    CHECK_THROWS_AS(alice.first_move(s), ProtocolError);
  }
  SUBCASE("a vertex without legal colors is a strategy failure") {
    auto k3 = make_config(Graph::complete(3), 2, 1);
    ActivationAlice a3(identity_ordered(Graph::complete(3)), make_color_policy("least-index"));
    const GameState s = GameState::from_coloring(k3, {1, 1, 0});
    try {
      a3.respond(s, 1);
      FAIL("expected a strategy failure");
    } catch (const StrategyFailure& e) {
      CHECK(e.witness() == 2);
    }
  }
}

TEST_CASE("Alice follows the strategy graph but obeys the play graph") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PartialKTreeWitness w = generate_partial_ktree(2, 14, 0.5, seed);
    GameConfig cfg{2, 5, w.g, w.h};
    ActivationAlice alice = ActivationAlice::for_config(cfg);
    CHECK(alice.ordered().graph() == w.h);
    CHECK(is_simplicial_ordering(alice.ordered()));
    RandomBob bob(seed);
    const GameTranscript t = play_game(cfg, alice, bob);
    CHECK(t.outcome.kind == OutcomeKind::AliceWins);
    CHECK_FALSE(audit_activations(t).has_value());
  }
}

TEST_CASE("a non-chordal strategy graph falls back to the search order") {
  GameConfig cfg{1, 3, Graph::cycle(5), std::nullopt};
  const ActivationAlice alice = ActivationAlice::for_config(cfg);
  CHECK(alice.ordered().ordering() == mcs_ordering(Graph::cycle(5)));
}

TEST_CASE("Alice's bookkeeping stays within the activation rules") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(3));
    const int n = 2 + static_cast<int>(rng.below(20));
    GameConfig cfg{k, 1 + static_cast<int>(rng.below(6)),
                   sparsify_chordal(generate_ktree(k, std::max(n, k + 1), rng.next()), 0.4, rng.next()),
                   std::nullopt};
    ActivationAlice alice = ActivationAlice::for_config(cfg);
    std::unique_ptr<Strategy> bob;
    if (trial % 2) {
      bob = std::make_unique<RandomBob>(rng.next());
    } else {
      bob = std::make_unique<CliqueThreatBob>();
    }
    const GameTranscript t = play_game(cfg, alice, *bob);
    CHECK(t.outcome.kind != OutcomeKind::Forfeit);
    const auto problem = audit_activations(t);
    CHECK_MESSAGE(!problem, *problem);
  }
}

TEST_CASE("random Bob") {
  auto cfg = make_config(Graph(3), 1, 2);
  const GameState s(cfg);
  SUBCASE("same seed, same moves") {
    RandomBob a(42), b(42), c(43);
    std::vector<Move> ma, mb, mc;
    for (int i = 0; i < 50; ++i) {
      ma.push_back(a.plan(s, std::nullopt).move);
      mb.push_back(b.plan(s, std::nullopt).move);
      mc.push_back(c.plan(s, std::nullopt).move);
    }
    CHECK(ma == mb);
    CHECK(ma != mc);
  }
  SUBCASE("uniform over legal moves") {
    RandomBob bob(7);
    std::map<std::pair<int, int>, int> counts;
    const int draws = 6000;
    for (int i = 0; i < draws; ++i) {
      const Move m = bob.plan(s, std::nullopt).move;
      ++counts[{m.vertex, m.color}];
    }
    REQUIRE(counts.size() == 6);
    double chi2 = 0;
    for (const auto& [move, count] : counts) {
      const double expected = draws / 6.0;
      chi2 += (count - expected) * (count - expected) / expected;
    }
    CHECK(chi2 < 20.5);
  }
  SUBCASE("never plays an illegal move") {
    auto k3 = make_config(Graph::complete(3), 2, 2);
    const GameState t = GameState::from_coloring(k3, {1, 1, 0});
    RandomBob bob(1);
    for (int i = 0; i < 100; ++i) CHECK(bob.plan(t, std::nullopt).move == Move{2, 2});
  }
}

TEST_CASE("clique-threat Bob") {
  SUBCASE("closes the windmill trap") {
    auto cfg = make_config(windmill_graph(), 2, 4);
    std::vector<Color> coloring(9, 0);
    for (auto [label, color] : {std::pair{'a', 1}, {'b', 1}, {'c', 2}, {'d', 2}, {'e', 3}, {'f', 3}, {'h', 4}})
      coloring[fixture_vertex(label)] = color;
    const GameState s = GameState::from_coloring(cfg, coloring);
    CliqueThreatBob bob;
    CHECK(bob.plan(s, std::nullopt).move == Move{fixture_vertex('i'), 4});
    CHECK(threat_score(s, {fixture_vertex('i'), 4}).stuck == 1);
  }
  SUBCASE("falls back to the lowest legal move") {
    const GameState s(make_config(Graph(3), 1, 2));
    CHECK(CliqueThreatBob().plan(s, std::nullopt).move == Move{0, 1});
  }
  SUBCASE("scores agree with one-ply enumeration") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(8));
      const int k = 1 + static_cast<int>(rng.below(2));
      const int c = 1 + static_cast<int>(rng.below(3));
      const Graph g = oracle::random_graph(n, 0.6, rng);
      auto cfg = make_config(g, k, c);
      GameState s(cfg);
      RandomBob filler(rng.next());
      const int steps = static_cast<int>(rng.below(n));
      for (int i = 0; i < steps && status(s).kind == StatusKind::Ongoing; ++i)
        s = apply_move(s, s.turn(), filler.plan(s, std::nullopt).move);
      if (status(s).kind != StatusKind::Ongoing) continue;
      const std::vector<int> before = as_vector(s.coloring());
      ThreatScore best;
      bool have_best = false;
      Move best_move;
      for (const Move& m : legal_moves(s)) {
        std::vector<int> after = before;
        after[m.vertex] = m.color;
        ThreatScore expect;
        for (Vertex w = 0; w < n; ++w) {
          if (before[w] != 0 || w == m.vertex) continue;
          const auto was = oracle::legal_colors(g, before, k, c, w);
          const auto now = oracle::legal_colors(g, after, k, c, w);
          if (was.size() == now.size()) continue;
          ++expect.removed;
          expect.tightest = std::min(expect.tightest, static_cast<int>(now.size()));
          if (now.empty()) ++expect.stuck;
        }
        CHECK(threat_score(s, m) == expect);
        if (!have_best || expect.beats(best)) {
          best = expect;
          best_move = m;
          have_best = true;
        }
      }
      CHECK(CliqueThreatBob().plan(s, std::nullopt).move == best_move);
    }
  }
}

TEST_CASE("minimax Bob finds a winning reply whenever one exists") {
  int positions = 0;
  int bob_wins = 0;
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
      const Graph g = oracle::graph_from_code(n, code);
      if (!oracle::is_chordal(g)) continue;
      for (Vertex v = 0; v < n; ++v) {
        std::vector<int> coloring(n, 0);
        coloring[v] = 1;
        auto cfg = make_config(g, 1, 2);
        const GameState s = GameState::from_coloring(cfg, coloring);
        if (status(s).kind != StatusKind::Ongoing) continue;
        ++positions;
        const bool alice_wins = oracle::alice_wins_walk(g, 1, 2, coloring);
        MinimaxBob bob(1'000'000);
        const Move m = bob.plan(s, std::nullopt).move;
        std::vector<int> child = coloring;
        child[m.vertex] = m.color;
        CHECK(oracle::alice_wins_walk(g, 1, 2, child) == alice_wins);
        bob_wins += !alice_wins;
      }
    }
  }
  CHECK(positions > 100);
  CHECK(bob_wins > 0);
}

TEST_CASE("color policies") {
  auto cfg = make_config(Graph(4), 1, 3);
  const GameState s = GameState::from_coloring(cfg, {1, 1, 2, 0});
  const std::vector<Color> legal{1, 2, 3};
  CHECK(make_color_policy("least-index")(s, 3, legal) == 1);
  CHECK(make_color_policy("greatest-index")(s, 3, legal) == 3);
  CHECK(make_color_policy("least-used")(s, 3, legal) == 3);
  const std::vector<Color> two{1, 2};
  CHECK(make_color_policy("least-used")(s, 3, two) == 2);
  CHECK_THROWS_AS(make_color_policy("rainbow"), InputError);
}

TEST_CASE("strategy selectors") {
  GameConfig cfg{1, 3, Graph::path(4), std::nullopt};
  CHECK(make_strategy(Json("random"), cfg, Player::Bob, 1)->name() == "random");
  CHECK(make_strategy(Json("clique-threat"), cfg, Player::Bob, 1)->name() == "clique-threat");
  CHECK(make_strategy(Json{{"type", "minimax"}, {"budget", 10}}, cfg, Player::Bob, 1)->name() == "minimax");
  CHECK(make_strategy(Json{{"type", "activation"}, {"color_policy", "least-used"}}, cfg, Player::Alice, 1)
            ->name() == "activation/least-used");
  CHECK_THROWS_AS(make_strategy(Json("activation"), cfg, Player::Bob, 1), InputError);
  CHECK_THROWS_AS(make_strategy(Json("random"), cfg, Player::Alice, 1), InputError);
  CHECK_THROWS_AS(make_strategy(Json(3), cfg, Player::Bob, 1), InputError);
  CHECK_THROWS_AS(make_strategy(Json{{"kind", "random"}}, cfg, Player::Bob, 1), InputError);
}

TEST_CASE("scripted Bob skips stale entries and then falls back") {
  auto cfg = make_config(Graph::path(3), 1, 2);
  GameState s(cfg);
  s = apply_move(s, Player::Alice, {0, 1});
  ScriptedBob bob({{0, 2}, {1, 1}, {2, 2}}, std::make_unique<CliqueThreatBob>());
  CHECK(bob.plan(s, std::nullopt).move == Move{2, 2});
  CHECK(bob.plan(s, std::nullopt).move == CliqueThreatBob().plan(s, std::nullopt).move);
}
