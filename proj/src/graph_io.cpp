#include "cliquegame/graph_io.hpp"

#include "cliquegame/errors.hpp"

namespace cliquegame {
namespace {

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

int read_order(const Json& doc) {
  if (!doc.is_object()) throw InputError("$: expected a JSON object");
  if (!doc.contains("n")) throw InputError("$.n: missing");
  const Json& n = doc["n"];
  if (!n.is_number_integer()) throw InputError("$.n: expected an integer");
  const auto value = n.get<long long>();
  if (value < 0 || value > 1'000'000) {
    throw InputError("$.n: out of range (got " + std::to_string(value) + ")");
  }
  return static_cast<int>(value);
}

Graph read_edges(const Json& doc, const std::string& key, int n) {
  if (!doc.contains(key)) throw InputError("$." + key + ": missing");
  const Json& list = doc[key];
  if (!list.is_array()) throw InputError("$." + key + ": expected an array");
  Graph g(n);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& pair = list[i];
    const std::string where = at(key, i);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InputError(where + ": expected [u, v] with integer endpoints");
    }
    const auto u = pair[0].get<long long>();
    const auto v = pair[1].get<long long>();
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError(where + ": vertex out of range [0, " + std::to_string(n) + "), got [" +
                       std::to_string(u) + ", " + std::to_string(v) + "]");
    }
    if (u >= v) {
      throw InputError(where + ": expected u < v, got [" + std::to_string(u) + ", " +
                       std::to_string(v) + "]");
    }
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw InputError(where + ": duplicate edge [" + std::to_string(u) + ", " +
                       std::to_string(v) + "]");
    }
  }
  return g;
}

Json edge_list(const Graph& g) {
  Json list = Json::array();
  for (const Edge& e : g.edges()) list.push_back({e.u, e.v});
  return list;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["n"] = g.order();
  doc["edges"] = edge_list(g);
  return doc;
}

Graph graph_from_json(const Json& doc) { return read_edges(doc, "edges", read_order(doc)); }

Json witness_to_json(const PartialKTreeWitness& w) {
  Json doc = graph_to_json(w.g);
  doc["h_edges"] = edge_list(w.h);
  doc["k"] = w.k;
  return doc;
}

PartialKTreeWitness witness_from_json(const Json& doc) {
  const int n = read_order(doc);
  PartialKTreeWitness w{read_edges(doc, "edges", n), read_edges(doc, "h_edges", n), 0};
  if (!doc.contains("k") || !doc["k"].is_number_integer()) {
    throw InputError("$.k: expected an integer");
  }
  w.k = doc["k"].get<int>();
  if (auto problem = witness_problem(w)) throw InputError("$: invalid witness: " + *problem);
  return w;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json ordering_to_json(const LinearOrdering& ordering) {
  Json list = Json::array();
  for (Vertex v : ordering.order()) list.push_back(v);
  return list;
}

}  // namespace cliquegame
