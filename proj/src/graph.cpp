#include "cliquegame/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

#include "cliquegame/errors.hpp"
#include "cliquegame/rng.hpp"

namespace cliquegame {

Graph::Graph(int n) {
  if (n < 0) throw InputError("graph order must be non-negative, got " + std::to_string(n));
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  adj_.assign(n, {});
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw InputError("edge " + std::to_string(i) + ": vertex out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw InputError("edge " + std::to_string(i) + ": self-loop on " + std::to_string(u));
    if (!g.add_edge(u, v)) {
      throw InputError("edge " + std::to_string(i) + ": duplicate edge (" + std::to_string(u) +
                       ", " + std::to_string(v) + ")");
    }
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw InputError("unknown vertex " + std::to_string(v) + " (graph has " + std::to_string(n_) +
                     " vertices)");
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return false;
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
  --m_;
  return true;
}

bool Graph::contains_edges_of(const Graph& other) const {
  if (other.n_ != n_) return false;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : other.adj_[u])
      if (!adjacent(u, v)) return false;
  return true;
}

LinearOrdering::LinearOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || v >= n) {
      throw InputError("ordering[" + std::to_string(i) + "]: vertex " + std::to_string(v) +
                       " out of range [0, " + std::to_string(n) + ")");
    }
    if (position_[v] != -1) {
      throw InputError("ordering[" + std::to_string(i) + "]: vertex " + std::to_string(v) +
                       " repeated");
    }
    position_[v] = i;
  }
}

LinearOrdering LinearOrdering::identity(int n) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return LinearOrdering(std::move(order));
}

LinearOrdering LinearOrdering::reversed() const {
  return LinearOrdering(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

OrderedGraph::OrderedGraph(Graph graph, LinearOrdering ordering)
    : graph_(std::move(graph)), ordering_(std::move(ordering)) {
  const int n = graph_.order();
  if (ordering_.size() != n) {
    throw InputError("ordering has " + std::to_string(ordering_.size()) +
                     " vertices but graph has " + std::to_string(n));
  }
  parents_.assign(n, {});
  children_.assign(n, {});
  auto by_position = [this](Vertex a, Vertex b) { return ordering_.less(a, b); };
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : graph_.neighbors(v)) {
      (ordering_.less(u, v) ? parents_[v] : children_[v]).push_back(u);
    }
    std::sort(parents_[v].begin(), parents_[v].end(), by_position);
    std::sort(children_[v].begin(), children_[v].end(), by_position);
  }
}

void OrderedGraph::check_vertex(Vertex v) const {
  if (!graph_.has_vertex(v)) {
    throw InputError("unknown vertex " + std::to_string(v) + " (graph has " +
                     std::to_string(graph_.order()) + " vertices)");
  }
}

std::span<const Vertex> OrderedGraph::parents(Vertex v) const {
  check_vertex(v);
  return parents_[v];
}

std::span<const Vertex> OrderedGraph::children(Vertex v) const {
  check_vertex(v);
  return children_[v];
}

std::optional<Vertex> OrderedGraph::major_parent(Vertex v) const {
  check_vertex(v);
  if (parents_[v].empty()) return std::nullopt;
  return parents_[v].front();
}

bool is_simplicial_ordering(const OrderedGraph& og) {
  const Graph& g = og.graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto ps = og.parents(v);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (!g.adjacent(ps[i], ps[j])) return false;
  }
  return true;
}

LinearOrdering mcs_ordering(const Graph& g) {
  // Maximum-cardinality search visits vertices in the reverse of a perfect
  // elimination ordering: already-visited neighbors of each vertex form a
  // clique when g is chordal. That visit order is exactly the orientation we
  // want (cliques among the earlier neighbors), so it is returned as is.
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::set<Vertex>> buckets(n + 1);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
  int top = 0;
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    while (buckets[top].empty()) --top;
    const Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    visited[v] = true;
    order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (visited[u]) continue;
      buckets[weight[u]].erase(u);
      ++weight[u];
      buckets[weight[u]].insert(u);
      top = std::max(top, weight[u]);
    }
  }
  return LinearOrdering(std::move(order));
}

std::optional<LinearOrdering> simplicial_ordering(const Graph& g) {
  LinearOrdering ordering = mcs_ordering(g);
  if (!is_simplicial_ordering(OrderedGraph(g, ordering))) return std::nullopt;
  return ordering;
}

bool is_chordal(const Graph& g) { return simplicial_ordering(g).has_value(); }

int max_parents(const OrderedGraph& og) {
  int best = 0;
  for (Vertex v = 0; v < og.order(); ++v)
    best = std::max(best, static_cast<int>(og.parents(v).size()));
  return best;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  void expand(std::vector<Vertex>& candidates) {
    if (current.size() > best.size()) best = current;
    while (!candidates.empty()) {
      if (current.size() + candidates.size() <= best.size()) return;
      const Vertex v = candidates.back();
      candidates.pop_back();
      std::vector<Vertex> next;
      for (Vertex u : candidates)
        if (g.adjacent(u, v)) next.push_back(u);
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
  CliqueSearch search{g, {}, {}};
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  // Low-degree vertices last in the candidate list are expanded first.
  std::stable_sort(all.begin(), all.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  if (auto ordering = simplicial_ordering(g)) {
    return 1 + max_parents(OrderedGraph(g, *ordering));
  }
  return static_cast<int>(maximum_clique(g).size());
}

std::optional<std::string> witness_problem(const PartialKTreeWitness& w) {
  if (w.k < 1) return "k must be at least 1";
  if (w.g.order() != w.h.order()) return "g and h have different vertex counts";
  if (!w.h.contains_edges_of(w.g)) {
    for (const Edge& e : w.g.edges()) {
      if (!w.h.adjacent(e.u, e.v)) {
        return "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") of g missing from h";
      }
    }
  }
  if (!is_chordal(w.h)) return "h is not chordal";
  if (clique_number(w.h) > w.k + 1) {
    return "h has clique number " + std::to_string(clique_number(w.h)) + " > k+1 = " +
           std::to_string(w.k + 1);
  }
  return std::nullopt;
}

Graph generate_ktree(int k, int n, std::uint64_t seed) {
  if (k < 1) throw InputError("k-tree parameter k must be >= 1, got " + std::to_string(k));
  if (n < k + 1) {
    throw InputError("k-tree needs n >= k+1 (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                     ")");
  }
  Rng rng(seed);
  std::vector<Vertex> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  rng.shuffle(label);

  Graph g(n);
  std::vector<std::vector<Vertex>> cliques;
  cliques.reserve(static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(n - k - 1) * k);
  for (int i = 0; i <= k; ++i) {
    std::vector<Vertex> face;
    for (int j = 0; j <= k; ++j) {
      if (j != i) face.push_back(label[j]);
      if (j > i) g.add_edge(label[i], label[j]);
    }
    cliques.push_back(std::move(face));
  }
  for (int i = k + 1; i < n; ++i) {
    const Vertex v = label[i];
    const std::vector<Vertex> base = cliques[rng.below(cliques.size())];
    for (Vertex u : base) g.add_edge(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<Vertex> face;
      face.reserve(k);
      for (std::size_t j = 0; j < base.size(); ++j)
        if (j != drop) face.push_back(base[j]);
      face.push_back(v);
      cliques.push_back(std::move(face));
    }
  }
  return g;
}

PartialKTreeWitness generate_partial_ktree(int k, int n, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) {
    throw InputError("keep_prob must lie in [0, 1], got " + std::to_string(keep_prob));
  }
  PartialKTreeWitness w{Graph(), generate_ktree(k, n, seed), k};
  w.g = Graph(n);
  Rng rng(derive_seed(seed, 1));
  for (const Edge& e : w.h.edges())
    if (rng.bernoulli(keep_prob)) w.g.add_edge(e.u, e.v);
  return w;
}

Graph sparsify_chordal(const Graph& h, double drop_prob, std::uint64_t seed) {
  if (!(drop_prob >= 0.0 && drop_prob <= 1.0)) {
    throw InputError("drop_prob must lie in [0, 1], got " + std::to_string(drop_prob));
  }
  const int omega = clique_number(h);
  Graph g = h;
  Rng rng(seed);
  std::vector<Edge> edges = g.edges();
  rng.shuffle(edges);
  for (const Edge& e : edges) {
    if (!rng.bernoulli(drop_prob)) continue;
    g.remove_edge(e.u, e.v);
    if (!is_chordal(g) || clique_number(g) != omega) g.add_edge(e.u, e.v);
  }
  return g;
}

std::uint64_t graph_digest(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (word >> (8 * i)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  feed(static_cast<std::uint64_t>(g.order()));
  for (const Edge& e : g.edges()) {
    feed(static_cast<std::uint64_t>(e.u));
    feed(static_cast<std::uint64_t>(e.v));
  }
  return hash;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace cliquegame
