#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cliquegame/errors.hpp"
#include "cliquegame/solver.hpp"
#include "cliquegame/strategies.hpp"
#include "oracles.hpp"

using namespace cliquegame;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

std::optional<int> chi(const Graph& g, int k) { return game_chromatic_number(g, k).chi_game; }

}  // namespace

TEST_CASE("known game chromatic numbers") {
  CHECK(chi(Graph(1), 1) == 1);
  CHECK(chi(Graph(5), 1) == 1);
  CHECK(chi(Graph::path(2), 1) == 2);
  CHECK(chi(Graph::path(4), 1) == 3);
  CHECK(chi(Graph::cycle(4), 1) == 3);
  CHECK(chi(Graph::cycle(5), 1) == 3);
  for (int n = 2; n <= 6; ++n) CHECK(chi(Graph::complete(n), 1) == n);
  Graph star(6);
  for (Vertex v = 1; v < 6; ++v) star.add_edge(0, v);
  CHECK(chi(star, 1) == 2);
  CHECK(chi(star, 2) == 1);
}

TEST_CASE("complete graphs under relaxation need ceil(n / k) colors") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int c = 1; c <= 4; ++c) CHECK(alice_wins(Graph::complete(n), k, c) == (c * k >= n));
}

TEST_CASE("solver agrees with two independent brute-force searches") {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
      const Graph g = oracle::graph_from_code(n, code);
      for (int k = 1; k <= 2; ++k)
        for (int c = 1; c <= 3; ++c) {
          const bool solved = alice_wins(g, k, c);
          CHECK(solved == brute_force_winner(g, k, c));
          CHECK(solved == oracle::alice_wins_walk(g, k, c));
        }
    }
  }
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(2));
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const int k = 1 + static_cast<int>(rng.below(2));
    const int c = 2 + static_cast<int>(rng.below(2));
    CHECK(alice_wins(g, k, c) == brute_force_winner(g, k, c));
  }
}

TEST_CASE("brute force refuses large inputs") {
  CHECK_THROWS_AS(brute_force_winner(Graph(7), 1, 2), InputError);
  CHECK_THROWS_AS(brute_force_winner(Graph(3), 1, 4), InputError);
}

TEST_CASE("answers are invariant under relabeling vertices and colors") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const int k = 1 + static_cast<int>(rng.below(2));
    const int c = 2 + static_cast<int>(rng.below(2));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    CHECK(alice_wins(g, k, c) == alice_wins(relabel(g, perm), k, c));

    std::vector<Color> coloring(n, 0);
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.3)) coloring[v] = 1 + static_cast<int>(rng.below(c));
    if (oracle::has_mono_clique(g, coloring, k)) continue;
    std::vector<Color> colors(c);
    std::iota(colors.begin(), colors.end(), 1);
    rng.shuffle(colors);
    std::vector<Color> recolored = coloring;
    for (Color& x : recolored)
      if (x) x = colors[x - 1];
    GameSolver solver(g, k, c);
    CHECK(solver.alice_wins_from(coloring) == solver.alice_wins_from(recolored));
    std::vector<int> walk(coloring.begin(), coloring.end());
    CHECK(solver.alice_wins_from(coloring) == oracle::alice_wins_walk(g, k, c, walk));
  }
}

TEST_CASE("canonical class order") {
  GameSolver::Classes a{0b0110, 0, 0b0001, 0b1000};
  GameSolver::Classes b{0b1000, 0b0001, 0, 0b0110};
  GameSolver::canonicalize(a);
  GameSolver::canonicalize(b);
  CHECK(a == b);
  GameSolver::Classes again = a;
  GameSolver::canonicalize(again);
  CHECK(again == a);
  CHECK(a.front() == 0);
}

TEST_CASE("budget exhaustion is an error, never a guess") {
  const Graph g = sparsify_chordal(generate_ktree(3, 24, 1), 0.2, 2);
  CHECK_THROWS_AS(alice_wins(g, 1, 4, 50), BudgetExceeded);
  const SolveReport r = game_chromatic_number(g, 1, 3, 50);
  REQUIRE(r.entries.size() == 3);
  CHECK_FALSE(r.chi_game.has_value());
  CHECK(r.entries[0].alice_wins == false);
  for (std::size_t i = 1; i < r.entries.size(); ++i) CHECK_FALSE(r.entries[i].alice_wins.has_value());
  const Json doc = solve_report_to_json(r, 1);
  CHECK(doc["entries"][1]["alice_wins"] == "budget");
  CHECK(doc["chi_game"].is_null());
  CHECK_THROWS_AS(GameSolver(Graph(65), 1, 2), InputError);
}

TEST_CASE("solve report") {
  const SolveReport r = game_chromatic_number(Graph::path(4), 1);
  REQUIRE(r.entries.size() == 4);
  CHECK(r.chi_game == 3);
  CHECK(r.monotone);
  CHECK(r.entries[1].alice_wins == false);
  CHECK(r.entries[2].alice_wins == true);
  const Json doc = solve_report_to_json(r, 1);
  CHECK(doc["k"] == 1);
  CHECK(doc["c_max"] == 4);
  CHECK(doc["chi_game"] == 3);
  CHECK(doc["monotone"] == true);
  CHECK_FALSE(doc.contains("elapsed_seconds"));
  CHECK(solve_report_to_json(r, 1, true).contains("elapsed_seconds"));
  CHECK(solve_report_to_json(game_chromatic_number(Graph::path(4), 1), 1) == doc);
}

TEST_CASE("win vectors are monotone on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); code += 7) {
      const Graph g = oracle::graph_from_code(n, code);
      for (int k = 1; k <= 2; ++k) CHECK(game_chromatic_number(g, k).monotone);
    }
  }
}

TEST_CASE("exhaustive loss search") {
  SUBCASE("a triangle with two colors and k = 1 is always lost") {
    GameConfig cfg{1, 2, Graph::complete(3), std::nullopt};
    ActivationAlice alice = ActivationAlice::for_config(cfg);
    const auto loss = find_alice_loss(cfg, alice);
    REQUIRE(loss.has_value());
    CHECK(loss->outcome.kind == OutcomeKind::BobWins);
    CHECK(replay(*loss).outcome == loss->outcome);
  }
  SUBCASE("the path needs a clever Bob") {
    GameConfig cfg{1, 2, Graph::path(4), std::nullopt};
    ActivationAlice alice = ActivationAlice::for_config(cfg);
    const auto loss = find_alice_loss(cfg, alice);
    REQUIRE(loss.has_value());
    CHECK(loss->outcome.kind == OutcomeKind::BobWins);
    CHECK(replay(*loss).outcome.kind == OutcomeKind::BobWins);
    CHECK_FALSE(audit_activations(*loss).has_value());
  }
  SUBCASE("enough colors leave Bob no winning line") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GameConfig cfg{1, 4, sparsify_chordal(generate_ktree(1, 9, seed), 0.0, seed), std::nullopt};
      ActivationAlice alice = ActivationAlice::for_config(cfg);
      CHECK_FALSE(find_alice_loss(cfg, alice).has_value());
    }
  }
  SUBCASE("budget") {
    GameConfig cfg{2, 5, generate_ktree(2, 14, 4), std::nullopt};
    ActivationAlice alice = ActivationAlice::for_config(cfg);
    CHECK_THROWS_AS(find_alice_loss(cfg, alice, 20), BudgetExceeded);
  }
}
