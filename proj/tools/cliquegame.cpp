#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cliquegame/errors.hpp"
#include "cliquegame/fixtures.hpp"
#include "cliquegame/harness.hpp"
#include "cliquegame/server.hpp"
#include "cliquegame/solver.hpp"
#include "cliquegame/strategies.hpp"

using namespace cliquegame;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  long long budget = kDefaultBudget;
  std::string config;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + g.out);
  out << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// A graph file holds graph JSON or a witness (recognized by "h_edges").
GameConfig load_config(const std::string& path, const std::string& fixture, int k, int c) {
  GameConfig cfg;
  cfg.k = k;
  cfg.colors = c;
  if (!fixture.empty()) {
    cfg.play_graph = fixture_by_name(fixture).graph;
  } else if (path.empty()) {
    throw InputError("a --graph file or a --fixture name is required");
  } else {
    const Json doc = parse_json_text(read_file(path));
    if (doc.is_object() && doc.contains("h_edges")) {
      PartialKTreeWitness w = witness_from_json(doc);
      cfg.play_graph = std::move(w.g);
      cfg.strategy_graph = std::move(w.h);
    } else {
      cfg.play_graph = graph_from_json(doc);
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-clique-relaxed coloring game: generators, games, solver, verification suites, play service"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "base random seed");
  app.add_option("--out", globals.out, "output file (default stdout)");
  app.add_option("--format", globals.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", globals.budget, "solver node budget");
  app.add_option("--config", globals.config, "experiment config file (key = value lines)");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a generated graph as JSON");
  std::string gen_kind = "chordal";
  int gen_width = 2;
  int gen_n = 12;
  double gen_drop = 0.3;
  double gen_keep = 0.6;
  std::string gen_fixture;
  gen->add_option("--kind", gen_kind, "chordal | ktree | partial-ktree | fixture")
      ->check(CLI::IsMember({"chordal", "ktree", "partial-ktree", "fixture"}));
  gen->add_option("--width", gen_width, "tree width k (clique number k + 1)");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--drop-prob", gen_drop, "edge drop probability for chordal sparsification");
  gen->add_option("--keep-prob", gen_keep, "edge keep probability for partial k-trees");
  gen->add_option("--fixture", gen_fixture, "fixture name (with --kind fixture)");

  // play
  auto* play = app.add_subcommand("play", "play one game and emit its transcript");
  std::string play_graph;
  std::string play_fixture;
  int play_k = 2;
  int play_c = 4;
  std::string play_policy = "least-index";
  std::string play_bob = "clique-threat";
  play->add_option("--graph", play_graph, "graph or witness JSON file");
  play->add_option("--fixture", play_fixture, "built-in fixture instead of --graph");
  play->add_option("-k,--k", play_k, "clique relaxation k");
  play->add_option("-c,--colors", play_c, "number of colors");
  play->add_option("--color-policy", play_policy, "Alice's color policy")
      ->check(CLI::IsMember({"least-index", "greatest-index", "least-used"}));
  play->add_option("--bob", play_bob, "random | clique-threat | minimax")
      ->check(CLI::IsMember({"random", "clique-threat", "minimax"}));

  // solve
  auto* solve = app.add_subcommand("solve", "exact game chromatic number by perfect-play search");
  std::string solve_graph;
  std::string solve_fixture;
  int solve_k = 1;
  std::optional<int> solve_cmax;
  bool solve_timing = false;
  solve->add_option("--graph", solve_graph, "graph JSON file");
  solve->add_option("--fixture", solve_fixture, "built-in fixture instead of --graph");
  solve->add_option("-k,--k", solve_k, "clique relaxation k");
  solve->add_option("--c-max", solve_cmax, "largest color count tried (default n)");
  solve->add_flag("--timing", solve_timing, "include elapsed time in the report");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name;
  std::optional<int> v_instances, v_k, v_omega, v_lambda, v_c, v_nmin, v_nmax, v_threads;
  std::optional<double> v_drop, v_keep;
  std::optional<std::string> v_policy;
  std::vector<std::string> v_bobs;
  verify->add_option("suite", suite_name,
                     "theorem-k3 | theorem-2clique4 | theorem-general | corollary-partial | conjecture-3color")
      ->required();
  verify->add_option("--instances", v_instances, "number of generated instances");
  verify->add_option("-k,--k", v_k, "clique relaxation k");
  verify->add_option("--omega", v_omega, "clique number of the chordal instances");
  verify->add_option("--lambda", v_lambda, "lambda of the partial lambda-trees");
  verify->add_option("-c,--colors", v_c, "number of colors");
  verify->add_option("--n-min", v_nmin, "smallest instance size");
  verify->add_option("--n-max", v_nmax, "largest instance size");
  verify->add_option("--threads", v_threads, "worker threads (0 = all cores)");
  verify->add_option("--drop-prob", v_drop, "chordal sparsification probability");
  verify->add_option("--keep-prob", v_keep, "partial k-tree edge keep probability");
  verify->add_option("--color-policy", v_policy, "Alice's color policy");
  verify->add_option("--bob", v_bobs, "Bob strategies (repeatable)");

  // serve
  auto* serve = app.add_subcommand("serve", "start the interactive play service");
  std::string bind_host = "127.0.0.1";
  int port = 8080;
  bool cors = false;
  int idle_seconds = 3600;
  serve->add_option("--bind", bind_host, "bind address")->envname("CLIQUEGAME_BIND");
  serve->add_option("--port", port, "port (0 picks a free one)")->envname("CLIQUEGAME_PORT");
  serve->add_flag("--cors", cors, "allow cross-origin requests")->envname("CLIQUEGAME_CORS");
  serve->add_option("--idle-timeout", idle_seconds, "session idle timeout in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (gen->parsed()) {
      Json doc;
      if (gen_kind == "fixture") {
        doc = fixture_to_json(fixture_by_name(gen_fixture));
      } else if (gen_kind == "ktree") {
        doc = graph_to_json(generate_ktree(gen_width, gen_n, globals.seed));
      } else if (gen_kind == "chordal") {
        doc = graph_to_json(sparsify_chordal(generate_ktree(gen_width, gen_n, globals.seed), gen_drop,
                                             derive_seed(globals.seed, 2)));
      } else {
        doc = witness_to_json(generate_partial_ktree(gen_width, gen_n, gen_keep, globals.seed));
      }
      emit(globals, dump(doc));
      return kExitPass;
    }

    if (play->parsed()) {
      GameConfig cfg = load_config(play_graph, play_fixture, play_k, play_c);
      std::unique_ptr<Strategy> alice;
      if (!play_fixture.empty()) {
        Fixture f = fixture_by_name(play_fixture);
        alice = std::make_unique<ActivationAlice>(OrderedGraph(cfg.alice_graph(), f.ordering),
                                                  make_color_policy(play_policy), play_policy);
      } else {
        alice = std::make_unique<ActivationAlice>(ActivationAlice::for_config(cfg, play_policy));
      }
      auto bob = make_strategy(Json(play_bob), cfg, Player::Bob, globals.seed, globals.budget);
      const GameTranscript t = play_game(cfg, *alice, *bob);
      emit(globals, dump(transcript_to_json(t)));
      std::cerr << to_string(t.outcome.kind) << " after " << t.events.size() << " events\n";
      return kExitPass;
    }

    if (solve->parsed()) {
      const GameConfig cfg = load_config(solve_graph, solve_fixture, solve_k, 1);
      const SolveReport r = game_chromatic_number(cfg.play_graph, solve_k, solve_cmax, globals.budget);
      if (globals.format == "csv") {
        std::ostringstream out;
        out << "c,alice_wins,nodes\n";
        for (const SolveEntry& e : r.entries) {
          out << e.colors << ',' << (e.alice_wins ? (*e.alice_wins ? "true" : "false") : "budget") << ','
              << e.nodes << "\n";
        }
        emit(globals, out.str());
      } else {
        emit(globals, dump(solve_report_to_json(r, solve_k, solve_timing)));
      }
      if (!r.monotone) std::cerr << "finding: win vector is not monotone in c\n";
      return kExitPass;
    }

    if (verify->parsed()) {
      ExperimentSpec spec;
      if (!globals.config.empty()) spec = parse_experiment_config(read_file(globals.config));
      spec.suite = suite_from_string(suite_name);
      if (app.get_option("--seed")->count() > 0 || globals.config.empty()) spec.seed = globals.seed;
      if (app.get_option("--budget")->count() > 0) spec.budget = globals.budget;
      if (v_instances) spec.instances = *v_instances;
      if (v_k) spec.k = v_k;
      if (v_omega) spec.omega = v_omega;
      if (v_lambda) spec.lambda = v_lambda;
      if (v_c) spec.colors = v_c;
      if (v_nmin) spec.n_min = *v_nmin;
      if (v_nmax) spec.n_max = *v_nmax;
      if (v_threads) spec.threads = *v_threads;
      if (v_drop) spec.drop_prob = *v_drop;
      if (v_keep) spec.keep_prob = *v_keep;
      if (v_policy) spec.color_policy = *v_policy;
      if (!v_bobs.empty()) spec.bobs = v_bobs;
      if (globals.out.empty() && !spec.out.empty()) globals.out = spec.out;

      const ResolvedSpec resolved = resolve(spec);
      const SuiteReport report = run_suite(resolved);
      emit(globals, globals.format == "csv" ? report_to_csv(report) : dump(report_to_json(report)));
      std::cerr << to_string(resolved.spec.suite) << ": " << report.rows.size() << " games, "
                << report.violations << " violations, " << report.inconclusive << " inconclusive, " << (report.pass ? "PASS" : "FAIL") << "\n";
      return report.pass ? kExitPass : kExitViolation;
    }

    if (serve->parsed()) {
      SessionManager sessions{std::chrono::seconds(idle_seconds)};
      HttpService service(sessions, cors);
      const int bound = service.bind(bind_host, port);
      if (bound < 0) throw InputError("cannot bind " + bind_host + ":" + std::to_string(port));
      std::cerr << "listening on " << bind_host << ":" << bound << "\n";
      return service.serve() ? kExitPass : kExitInput;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}
