#pragma once

// Brute-force reference implementations. Each one works straight from the
// definitions, shares no code with the library beyond the Graph container, and
// is only meant for small inputs.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquegame/graph.hpp"
#include "cliquegame/rng.hpp"

namespace oracle {

using cliquegame::Graph;
using cliquegame::Vertex;

inline bool subset_is_clique(const Graph& g, std::uint32_t mask) {
  for (int a = 0; a < g.order(); ++a) {
    if (!(mask >> a & 1)) continue;
    for (int b = a + 1; b < g.order(); ++b)
      if ((mask >> b & 1) && !g.adjacent(a, b)) return false;
  }
  return true;
}

/// Largest clique size by scanning every vertex subset (n <= 20).
inline int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    const int size = std::popcount(mask);
    if (size > best && subset_is_clique(g, mask)) best = size;
  }
  return best;
}

/// True when some vertex subset of size >= 4 induces a cycle (n <= 16).
inline bool has_induced_long_cycle(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    bool two_regular = true;
    int start = -1;
    for (int v = 0; v < n && two_regular; ++v) {
      if (!(mask >> v & 1)) continue;
      start = v;
      int inside = 0;
      for (int u = 0; u < n; ++u)
        if ((mask >> u & 1) && g.adjacent(u, v)) ++inside;
      two_regular = inside == 2;
    }
    if (!two_regular) continue;
    // A 2-regular induced subgraph is a cycle iff it is connected.
    std::uint32_t seen = 1u << start;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (!(frontier >> v & 1)) continue;
        for (int u = 0; u < n; ++u)
          if ((mask >> u & 1) && g.adjacent(u, v) && !(seen >> u & 1)) next |= 1u << u;
      }
      seen |= next;
      frontier = next;
    }
    if (seen == mask) return true;
  }
  return false;
}

inline bool is_chordal(const Graph& g) { return !has_induced_long_cycle(g); }

/// Lower neighbors of v under `position` (vertex -> index), by direct scan.
inline std::vector<Vertex> lower_neighbors(const Graph& g, const std::vector<int>& position, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v && g.adjacent(u, v) && position[u] < position[v]) out.push_back(u);
  return out;
}

/// Whether some (k+1)-subset containing v is a clique whose other members
/// all have color c.
inline bool completes_mono_clique(const Graph& g, const std::vector<int>& coloring, int k, Vertex v,
                                  int c) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> v & 1) || std::popcount(mask) != k + 1) continue;
    bool mono = true;
    for (int u = 0; u < n && mono; ++u)
      if ((mask >> u & 1) && u != v && coloring[u] != c) mono = false;
    if (mono && subset_is_clique(g, mask)) return true;
  }
  return false;
}

inline std::vector<int> legal_colors(const Graph& g, const std::vector<int>& coloring, int k,
                                     int colors, Vertex v) {
  std::vector<int> out;
  for (int c = 1; c <= colors; ++c)
    if (!completes_mono_clique(g, coloring, k, v, c)) out.push_back(c);
  return out;
}

/// Whether any (k+1)-subset is a monochromatic clique.
inline bool has_mono_clique(const Graph& g, const std::vector<int>& coloring, int k) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k + 1) continue;
    int color = -1;
    bool mono = true;
    for (int u = 0; u < n && mono; ++u) {
      if (!(mask >> u & 1)) continue;
      if (coloring[u] == 0 || (color != -1 && coloring[u] != color)) mono = false;
      color = coloring[u];
    }
    if (mono && subset_is_clique(g, mask)) return true;
  }
  return false;
}

/// Unmemoized alternating game-tree walk from `coloring`; Alice moves when an
/// even number of vertices is colored.
inline bool alice_wins_walk(const Graph& g, int k, int colors, std::vector<int>& coloring) {
  const int n = g.order();
  int colored = 0;
  for (int c : coloring) colored += c != 0;
  if (colored == n) return true;
  for (Vertex v = 0; v < n; ++v)
    if (coloring[v] == 0 && legal_colors(g, coloring, k, colors, v).empty()) return false;
  const bool alice = colored % 2 == 0;
  for (Vertex v = 0; v < n; ++v) {
    if (coloring[v] != 0) continue;
    for (int c : legal_colors(g, coloring, k, colors, v)) {
      coloring[v] = c;
      const bool win = alice_wins_walk(g, k, colors, coloring);
      coloring[v] = 0;
      if (alice == win) return win;
    }
  }
  return !alice;
}

inline bool alice_wins_walk(const Graph& g, int k, int colors) {
  std::vector<int> coloring(g.order(), 0);
  return alice_wins_walk(g, k, colors, coloring);
}

/// The labeled graph on n vertices whose upper-triangle edge bits are `code`.
inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (code >> bit & 1) g.add_edge(i, j);
  return g;
}

inline Graph random_graph(int n, double p, cliquegame::Rng& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

/// Maximum-cardinality search with random tie-breaking. On a chordal graph the
/// visit order is a simplicial ordering in the lower-parent convention.
inline std::vector<Vertex> random_mcs_order(const Graph& g, cliquegame::Rng& rng) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::vector<Vertex> ties;
    for (Vertex v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (weight[v] > best) {
        best = weight[v];
        ties.clear();
      }
      if (weight[v] == best) ties.push_back(v);
    }
    const Vertex v = ties[rng.below(ties.size())];
    done[v] = 1;
    order.push_back(v);
    for (Vertex u : g.neighbors(v))
      if (!done[u]) ++weight[u];
  }
  return order;
}

}  // namespace oracle
