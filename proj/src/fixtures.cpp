#include "cliquegame/fixtures.hpp"

#include "cliquegame/errors.hpp"

namespace cliquegame {
namespace {

std::vector<Vertex> ids(const std::string& letters) {
  std::vector<Vertex> out;
  for (char c : letters) out.push_back(fixture_vertex(c));
  return out;
}

Fixture make_fixture(std::string name, std::string description, const std::string& extra_edges,
                     const std::string& order, bool rooted) {
  const int n = rooted ? 10 : 9;
  Graph g(n);
  const Graph windmill = windmill_graph();
  for (const Edge& e : windmill.edges()) g.add_edge(e.u, e.v);
  for (std::size_t i = 0; i + 1 < extra_edges.size(); i += 2) {
    g.add_edge(fixture_vertex(extra_edges[i]), fixture_vertex(extra_edges[i + 1]));
  }
  std::vector<Vertex> ordering = ids(order);
  std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  if (rooted) {
    g.add_edge(fixture_vertex('z'), ordering.front());
    ordering.insert(ordering.begin(), fixture_vertex('z'));
    labels.push_back("z");
    name += "-rooted";
  }
  return Fixture{std::move(name), std::move(description), std::move(g),
                 LinearOrdering(std::move(ordering)), std::move(labels), fixture_vertex('g')};
}

}  // namespace

Vertex fixture_vertex(char label) {
  if (label == 'z') return 9;
  if (label < 'a' || label > 'i') throw InputError(std::string("unknown fixture label ") + label);
  return label - 'a';
}

Graph windmill_graph() {
  Graph g(9);
  for (char c : std::string("abcdefhi")) g.add_edge(fixture_vertex('g'), fixture_vertex(c));
  for (const char* pair : {"ab", "cd", "ef", "hi"}) {
    g.add_edge(fixture_vertex(pair[0]), fixture_vertex(pair[1]));
  }
  return g;
}

std::vector<Fixture> case_analysis_fixtures() {
  struct Spec {
    const char* name;
    const char* description;
    const char* extra;
    const char* order;
  };
  const Spec specs[] = {
      {"windmill-g-least", "g least in its neighborhood", "", "gabcdefhi"},
      {"windmill-a-g", "a < g least two", "", "agbcdefhi"},
      {"windmill-a-b-g", "a < b < g least three", "", "abgcdefhi"},
      {"a-c-g", "a < c < g with the two back-neighbors of g in different triangles", "ac",
       "acgbdefhi"},
      {"a-c-g-shared-a", "a < c < g, maj(e) = maj(h) = a", "acaeah", "acgbdefhi"},
      {"a-c-g-shared-c", "a < c < g, maj(e) = maj(h) = c", "acecch", "acgbdefhi"},
      {"a-c-g-split", "a < c < g, maj(h) = a and maj(e) = c", "acahce", "acgbdefhi"},
  };
  std::vector<Fixture> out;
  for (bool rooted : {false, true})
    for (const Spec& s : specs) out.push_back(make_fixture(s.name, s.description, s.extra, s.order, rooted));
  return out;
}

Fixture fixture_by_name(const std::string& name) {
  for (Fixture& f : case_analysis_fixtures())
    if (f.name == name) return std::move(f);
  throw InputError("unknown fixture \"" + name + "\"");
}

GameState windmill_trap_state() {
  auto cfg = std::make_shared<GameConfig>();
  cfg->k = 2;
  cfg->colors = 4;
  cfg->play_graph = windmill_graph();
  std::vector<Color> coloring(9, kUncolored);
  const std::pair<char, Color> placed[] = {{'a', 1}, {'b', 1}, {'c', 2}, {'d', 2},
                                           {'e', 3}, {'f', 3}, {'h', 4}, {'i', 4}};
  for (auto [label, color] : placed) coloring[fixture_vertex(label)] = color;
  return GameState::from_coloring(std::move(cfg), std::move(coloring));
}

std::vector<std::vector<Move>> trap_scripts() {
  const char* orders[] = {"abcdefhi", "bdfiaceh", "ihfedcba", "heifdbca", "ehdbfica", "acehbdfi"};
  auto color_of = [](char c) -> Color {
    switch (c) {
      case 'a':
      case 'b':
        return 1;
      case 'c':
      case 'd':
        return 2;
      case 'e':
      case 'f':
        return 3;
      default:
        return 4;
    }
  };
  std::vector<std::vector<Move>> out;
  for (const char* order : orders) {
    std::vector<Move> script;
    for (const char* p = order; *p; ++p) script.push_back({fixture_vertex(*p), color_of(*p)});
    out.push_back(std::move(script));
  }
  return out;
}

Json fixture_to_json(const Fixture& f) {
  Json doc = graph_to_json(f.graph);
  doc["name"] = f.name;
  doc["description"] = f.description;
  doc["ordering"] = ordering_to_json(f.ordering);
  doc["labels"] = f.labels;
  doc["center"] = f.center;
  return doc;
}

}  // namespace cliquegame
