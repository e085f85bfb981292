#include <doctest.h>

#include <set>

#include "cliquegame/errors.hpp"
#include "cliquegame/fixtures.hpp"
#include "cliquegame/strategies.hpp"
#include "oracles.hpp"

using namespace cliquegame;

namespace {

// Number of ring vertices active at the moment the center is colored, or -1
// when the center is never colored.
int ring_active_when_center_colored(const GameTranscript& t, const Fixture& f) {
  std::vector<char> active(t.config.order(), 0);
  for (const GameEvent& e : t.events) {
    if (const auto* a = std::get_if<ActivationEvent>(&e)) {
      active[a->vertex] = 1;
      continue;
    }
    const auto& mv = std::get<MoveEvent>(e);
    if (mv.vertex == f.center) {
      int count = 0;
      for (Vertex r : f.ring()) count += active[r];
      return count;
    }
    active[mv.vertex] = 1;
  }
  return -1;
}

}  // namespace

TEST_CASE("case-analysis fixtures are well formed") {
  const std::vector<Fixture> fixtures = case_analysis_fixtures();
  REQUIRE(fixtures.size() == 14);
  std::set<std::string> names;
  for (const Fixture& f : fixtures) {
    CAPTURE(f.name);
    names.insert(f.name);
    const bool rooted = f.name.ends_with("-rooted");
    CHECK(f.graph.order() == (rooted ? 10 : 9));
    CHECK(f.labels.size() == static_cast<std::size_t>(f.graph.order()));
    CHECK(oracle::is_chordal(f.graph));
    CHECK(oracle::clique_number(f.graph) == 3);
    CHECK(is_simplicial_ordering(OrderedGraph(f.graph, f.ordering)));
    CHECK(f.center == fixture_vertex('g'));
    for (Vertex r : f.ring()) CHECK(f.graph.adjacent(f.center, r));
    if (rooted) {
      CHECK(f.ordering.at(0) == fixture_vertex('z'));
      CHECK(f.graph.degree(fixture_vertex('z')) == 1);
    }
    CHECK(fixture_by_name(f.name).graph == f.graph);
    const Json doc = fixture_to_json(f);
    CHECK(doc["name"] == f.name);
    CHECK(graph_from_json(doc) == f.graph);
  }
  CHECK(names.size() == 14);
  CHECK_THROWS_AS(fixture_by_name("a-z-q"), InputError);
  CHECK_THROWS_AS(fixture_vertex('q'), InputError);
}

TEST_CASE("fixture orderings realize the intended major parents") {
  auto maj = [](const std::string& name, char v) {
    const Fixture f = fixture_by_name(name);
    return OrderedGraph(f.graph, f.ordering).major_parent(fixture_vertex(v));
  };
  const Vertex a = fixture_vertex('a');
  const Vertex c = fixture_vertex('c');
  const Vertex g = fixture_vertex('g');
  CHECK(maj("windmill-g-least", 'g') == std::nullopt);
  CHECK(maj("windmill-g-least", 'a') == g);
  CHECK(maj("windmill-a-g", 'g') == a);
  CHECK(maj("windmill-a-g", 'b') == a);
  CHECK(maj("windmill-a-g", 'c') == g);
  CHECK(maj("windmill-a-b-g", 'g') == a);
  CHECK(maj("windmill-a-b-g", 'b') == a);
  CHECK(maj("a-c-g", 'c') == a);
  CHECK(maj("a-c-g", 'g') == a);
  CHECK(maj("a-c-g", 'd') == c);
  CHECK(maj("a-c-g-shared-a", 'e') == a);
  CHECK(maj("a-c-g-shared-a", 'h') == a);
  CHECK(maj("a-c-g-shared-c", 'e') == c);
  CHECK(maj("a-c-g-shared-c", 'h') == c);
  CHECK(maj("a-c-g-split", 'h') == a);
  CHECK(maj("a-c-g-split", 'e') == c);
  CHECK(maj("a-c-g-split-rooted", 'a') == fixture_vertex('z'));
  CHECK(maj("a-c-g-split-rooted", 'g') == a);
}

TEST_CASE("the windmill trap leaves the center uncolorable") {
  const GameState s = windmill_trap_state();
  CHECK(s.config().k == 2);
  CHECK(s.config().colors == 4);
  CHECK(s.colored_count() == 8);
  const Status st = status(s);
  CHECK(st.kind == StatusKind::BobWins);
  CHECK(st.witness == fixture_vertex('g'));
  const std::vector<int> coloring(s.coloring().begin(), s.coloring().end());
  CHECK(oracle::legal_colors(s.config().play_graph, coloring, 2, 4, fixture_vertex('g')).empty());
}

TEST_CASE("trap scripts cover the ring with the trap colors") {
  const std::vector<std::vector<Move>> scripts = trap_scripts();
  REQUIRE(scripts.size() == 6);
  const GameState trap = windmill_trap_state();
  for (const auto& script : scripts) {
    REQUIRE(script.size() == 8);
    std::set<Vertex> seen;
    for (const Move& m : script) {
      seen.insert(m.vertex);
      CHECK(trap.color(m.vertex) == m.color);
    }
    CHECK(seen.size() == 8);
  }
}

TEST_CASE("Activation Alice defeats every trap script on every fixture") {
  for (const Fixture& f : case_analysis_fixtures()) {
    GameConfig cfg{2, 4, f.graph, std::nullopt};
    for (const auto& script : trap_scripts()) {
      CAPTURE(f.name);
      ActivationAlice alice(OrderedGraph(f.graph, f.ordering), make_color_policy("least-index"));
      ScriptedBob bob(script, std::make_unique<CliqueThreatBob>());
      const GameTranscript t = play_game(cfg, alice, bob);
      CHECK(t.outcome.kind == OutcomeKind::AliceWins);
      CHECK_FALSE(audit_activations(t).has_value());
      const int ring_active = ring_active_when_center_colored(t, f);
      CHECK(ring_active >= 0);
      CHECK(ring_active < 8);
    }
  }
}
