#pragma once

#include <string>
#include <vector>

#include "cliquegame/engine.hpp"

namespace cliquegame {

// Hand-built configurations around a center vertex g that sits in four
// otherwise disjoint triangles {g,a,b}, {g,c,d}, {g,e,f}, {g,h,i}. Vertex ids
// follow the letters: a=0, b=1, ..., i=8, and z=9 where a root is added.

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  LinearOrdering ordering;  ///< simplicial ordering Alice uses
  std::vector<std::string> labels;
  Vertex center = 6;

  /// The eight neighbors of the center inside the four triangles.
  std::vector<Vertex> ring() const { return {0, 1, 2, 3, 4, 5, 7, 8}; }
};

/// Letter label to id ('a' -> 0, ..., 'i' -> 8, 'z' -> 9).
Vertex fixture_vertex(char label);

/// The four triangles through g and nothing else.
Graph windmill_graph();

/// Every case-analysis configuration: the windmill under three orderings (g
/// least; a < g; a < b < g), the a < c < g configuration, and the three
/// major-parent variants (e and h share a; share c; split a / c). Each also
/// comes with a pendant root z attached to the least vertex and placed in front
/// of it, so the first move lands off the windmill.
std::vector<Fixture> case_analysis_fixtures();

/// Looks up a fixture by name; throws InputError.
Fixture fixture_by_name(const std::string& name);

/// k = 2, c = 4 on the windmill with c(a)=c(b)=1, c(c)=c(d)=2, c(e)=c(f)=3 and
/// c(h)=c(i)=4; g is left without a legal color.
GameState windmill_trap_state();

/// Bob move orders that try to assemble the windmill trap above.
std::vector<std::vector<Move>> trap_scripts();

Json fixture_to_json(const Fixture& f);

}  // namespace cliquegame
