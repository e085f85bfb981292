#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cliquegame {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on the dense vertex set 0..n-1.
///
/// Neighbor lists are kept sorted; an adjacency bit matrix backs O(1)
/// adjacency queries, which the clique searches lean on heavily.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Rejects self-loops, out-of-range ids
  /// and duplicate edges (in either orientation).
  static Graph from_edges(int n, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  bool contains_edges_of(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

/// A permutation v_1 .. v_n of the vertices, with its inverse.
class LinearOrdering {
 public:
  LinearOrdering() = default;
  /// Throws InputError unless `order` is a permutation of 0..n-1.
  explicit LinearOrdering(std::vector<Vertex> order);

  static LinearOrdering identity(int n);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  Vertex at(int index) const { return order_[index]; }
  int position(Vertex v) const { return position_[v]; }
  bool less(Vertex x, Vertex y) const { return position_[x] < position_[y]; }
  std::span<const Vertex> order() const noexcept { return order_; }

  LinearOrdering reversed() const;

  friend bool operator==(const LinearOrdering&, const LinearOrdering&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// A graph together with a linear ordering of its vertices. Parents are the
/// neighbors strictly earlier in the ordering, children the ones strictly later.
class OrderedGraph {
 public:
  OrderedGraph(Graph graph, LinearOrdering ordering);

  const Graph& graph() const noexcept { return graph_; }
  const LinearOrdering& ordering() const noexcept { return ordering_; }
  int order() const noexcept { return graph_.order(); }

  /// Parents of v, sorted by position (least first).
  std::span<const Vertex> parents(Vertex v) const;
  /// Children of v, sorted by position (least first).
  std::span<const Vertex> children(Vertex v) const;
  /// Least parent of v, or nullopt when v has none.
  std::optional<Vertex> major_parent(Vertex v) const;

 private:
  void check_vertex(Vertex v) const;

  Graph graph_;
  LinearOrdering ordering_;
  std::vector<std::vector<Vertex>> parents_;
  std::vector<std::vector<Vertex>> children_;
};

/// True iff every closed back-neighborhood N+[v] induces a clique.
bool is_simplicial_ordering(const OrderedGraph& og);

/// Maximum-cardinality search visit order (lowest id wins ties). Defined for
/// every graph; simplicial exactly when the graph is chordal.
LinearOrdering mcs_ordering(const Graph& g);

/// A simplicial ordering of g, or nullopt when g is not chordal.
std::optional<LinearOrdering> simplicial_ordering(const Graph& g);

bool is_chordal(const Graph& g);

/// Size of the largest clique. Linear for chordal graphs, branch-and-bound otherwise.
int clique_number(const Graph& g);

/// Largest parent count over all vertices.
int max_parents(const OrderedGraph& og);

/// A largest clique of g (branch and bound, any graph).
std::vector<Vertex> maximum_clique(const Graph& g);

/// Chordal supergraph h of g (same vertex ids) with clique_number(h) <= k + 1.
struct PartialKTreeWitness {
  Graph g;
  Graph h;
  int k = 0;
};

/// Returns a description of the first violated witness invariant, or nullopt.
std::optional<std::string> witness_problem(const PartialKTreeWitness& w);

/// Random k-tree: K_{k+1} grown by attaching each new vertex to a uniformly
/// chosen existing k-clique. Vertex ids are shuffled with the same seed.
Graph generate_ktree(int k, int n, std::uint64_t seed);

/// k-tree h with each edge kept independently with probability keep_prob in g.
PartialKTreeWitness generate_partial_ktree(int k, int n, double keep_prob, std::uint64_t seed);

/// Removes edges of a chordal graph at random (each tried with probability
/// drop_prob) while the graph stays chordal with unchanged clique number.
Graph sparsify_chordal(const Graph& h, double drop_prob, std::uint64_t seed);

/// 64-bit FNV-1a digest of (n, sorted edge list).
std::uint64_t graph_digest(const Graph& g);
std::string digest_hex(std::uint64_t digest);

}  // namespace cliquegame
