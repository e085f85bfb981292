#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquegame/engine.hpp"

namespace cliquegame {

/// floor((3 omega - 1) / k) + 1. Throws InputError unless k >= 1 and omega > k.
int bound_formula(int k, int omega);

/// floor((3 lambda + 2) / k) + 1. Throws InputError unless k >= 1 and lambda + 1 > k.
int partial_bound_formula(int k, int lambda);

enum class Suite { TheoremK3, Theorem2Clique4, TheoremGeneral, CorollaryPartial, Conjecture3Color };

const char* to_string(Suite s);
/// Throws InputError for an unknown name.
Suite suite_from_string(const std::string& name);

struct ExperimentSpec {
  Suite suite = Suite::TheoremK3;
  int instances = 100;
  int n_min = 5;
  int n_max = 30;
  std::optional<int> k;
  std::optional<int> omega;   ///< clique number of the chordal instances
  std::optional<int> lambda;  ///< partial lambda-trees (corollary-partial)
  std::optional<int> colors;
  std::uint64_t seed = 1;
  std::vector<std::string> bobs = {"random", "clique-threat"};
  double drop_prob = 0.3;  ///< chordal sparsification of generated k-trees
  double keep_prob = 0.6;  ///< edge retention for partial k-tree play graphs
  std::string color_policy = "least-index";
  int threads = 1;  ///< 0: one per hardware thread
  long long budget = 2'000'000;
  std::string out;
};

/// A spec with every parameter filled in and the suite's hypotheses checked.
struct ResolvedSpec {
  ExperimentSpec spec;
  int k = 0;
  int omega = 0;  ///< clique number of the graph Alice strategizes on
  int colors = 0;
  std::optional<int> lambda;
};

/// Fills defaults and rejects parameters outside the suite's hypotheses:
/// theorem-k3 fixes omega = k + 1, theorem-2clique4 fixes k = 2 and omega = 3,
/// theorem-general needs ck - 3 omega + 1 > 0 and omega > k, corollary-partial
/// needs the same with omega = lambda + 1 or lambda = k with 4 colors.
/// conjecture-3color plays k = 2, omega = 3, c = 3. Throws InputError.
ResolvedSpec resolve(const ExperimentSpec& spec);

/// Reads `key = value` lines (# comments, quoted strings, [a, b] lists) into a
/// spec. Keys mirror ExperimentSpec fields; `c` sets colors. Throws InputError
/// naming the line.
ExperimentSpec parse_experiment_config(const std::string& text, ExperimentSpec base = {});

struct SuiteRow {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int edges = 0;
  std::string digest;  ///< config digest of the instance
  std::string bob;
  std::string outcome;
  std::optional<Vertex> witness;
  int moves = 0;
  bool violation = false;  ///< Alice did not win, or the audit failed
  std::string audit;       ///< empty when the transcript passes the activation audit
  std::string diagnostic;
};

struct SuiteReport {
  ResolvedSpec spec;
  std::vector<SuiteRow> rows;  ///< by instance index, then Bob order
  int alice_wins = 0;
  int bob_wins = 0;
  int forfeits = 0;
  int inconclusive = 0;  ///< games stopped by the minimax budget
  int violations = 0;
  int audit_failures = 0;
  /// True iff there are no violations; always true for the conjecture suite,
  /// whose losses are findings.
  bool pass = true;
};

/// One sweep instance: the play configuration derived from (spec, index).
/// Re-validates chordality and clique number of the strategy graph.
GameConfig suite_instance(const ResolvedSpec& spec, int index);

/// Generates every instance, plays Activation Alice against each listed Bob
/// and collects the rows. Rows do not depend on the thread count.
SuiteReport run_suite(const ResolvedSpec& spec);

Json report_to_json(const SuiteReport& r);
/// Same content as report_to_json: parameter and summary lines prefixed by
/// '#', then one row per game.
std::string report_to_csv(const SuiteReport& r);

/// Every connected chordal graph on 1..max_n vertices up to isomorphism, each
/// in canonical labeling, ordered by (n, edge count, adjacency code).
std::vector<Graph> connected_chordal_catalog(int max_n);

/// Canonical labeling: the relabeling with the greatest adjacency bit string.
/// Exponential; intended for n <= 8.
Graph canonical_form(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace cliquegame
