#include "cliquegame/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "cliquegame/errors.hpp"
#include "cliquegame/rng.hpp"
#include "cliquegame/strategies.hpp"

namespace cliquegame {

int bound_formula(int k, int omega) {
  if (k < 1) throw InputError("k must be at least 1");
  if (omega <= k) {
    throw InputError("bound requires omega > k, got k=" + std::to_string(k) +
                     " omega=" + std::to_string(omega));
  }
  return (3 * omega - 1) / k + 1;
}

int partial_bound_formula(int k, int lambda) {
  if (k < 1) throw InputError("k must be at least 1");
  if (lambda + 1 <= k) {
    throw InputError("bound requires lambda + 1 > k, got k=" + std::to_string(k) +
                     " lambda=" + std::to_string(lambda));
  }
  return (3 * lambda + 2) / k + 1;
}

namespace {

constexpr std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::TheoremK3, "theorem-k3"},
    {Suite::Theorem2Clique4, "theorem-2clique4"},
    {Suite::TheoremGeneral, "theorem-general"},
    {Suite::CorollaryPartial, "corollary-partial"},
    {Suite::Conjecture3Color, "conjecture-3color"},
};

bool general_condition(int k, int omega, int c) { return omega > k && c * k - 3 * omega + 1 > 0; }

std::string triple(int k, int omega, int c) {
  return "k=" + std::to_string(k) + " omega=" + std::to_string(omega) + " c=" + std::to_string(c);
}

}  // namespace

const char* to_string(Suite s) {
  for (auto [suite, name] : kSuiteNames)
    if (suite == s) return name;
  return "?";
}

Suite suite_from_string(const std::string& name) {
  for (auto [suite, text] : kSuiteNames)
    if (name == text) return suite;
  throw InputError("unknown suite \"" + name +
                   "\" (expected theorem-k3, theorem-2clique4, theorem-general, "
                   "corollary-partial or conjecture-3color)");
}

ResolvedSpec resolve(const ExperimentSpec& spec) {
  ResolvedSpec r{spec, 0, 0, 0, std::nullopt};
  if (spec.instances < 0) throw InputError("instances must be non-negative");
  if (spec.n_min < 1 || spec.n_max < spec.n_min) {
    throw InputError("size range must satisfy 1 <= n_min <= n_max, got " +
                     std::to_string(spec.n_min) + ".." + std::to_string(spec.n_max));
  }
  if (!(spec.drop_prob >= 0.0 && spec.drop_prob <= 1.0)) throw InputError("drop_prob must lie in [0, 1]");
  if (!(spec.keep_prob >= 0.0 && spec.keep_prob <= 1.0)) throw InputError("keep_prob must lie in [0, 1]");
  if (spec.threads < 0) throw InputError("threads must be non-negative");
  if (spec.bobs.empty()) throw InputError("at least one bob strategy is required");
  for (const std::string& bob : spec.bobs) {
    if (bob != "random" && bob != "clique-threat" && bob != "minimax") {
      throw InputError("unknown bob strategy \"" + bob + "\"");
    }
  }
  make_color_policy(spec.color_policy);

  auto require_fixed = [&](const std::optional<int>& given, int fixed, const char* what) {
    if (given && *given != fixed) {
      throw InputError(std::string(to_string(spec.suite)) + " requires " + what + " = " +
                       std::to_string(fixed));
    }
  };

  switch (spec.suite) {
    case Suite::TheoremK3:
      r.k = spec.k.value_or(2);
      if (r.k < 1) throw InputError("k must be at least 1");
      require_fixed(spec.omega, r.k + 1, "omega = k + 1, i.e. omega");
      r.omega = r.k + 1;
      r.colors = spec.colors.value_or(r.k + 3);
      if (r.colors != r.k + 3 && !general_condition(r.k, r.omega, r.colors)) {
        throw InputError("theorem-k3 hypotheses fail for " + triple(r.k, r.omega, r.colors));
      }
      break;
    case Suite::Theorem2Clique4:
      require_fixed(spec.k, 2, "k");
      require_fixed(spec.omega, 3, "omega");
      r.k = 2;
      r.omega = 3;
      r.colors = spec.colors.value_or(4);
      if (r.colors < 4) throw InputError("theorem-2clique4 requires c >= 4");
      break;
    case Suite::TheoremGeneral:
      if (!spec.k || !spec.omega) throw InputError("theorem-general requires k and omega");
      r.k = *spec.k;
      r.omega = *spec.omega;
      if (r.k < 1) throw InputError("k must be at least 1");
      if (r.omega <= r.k) throw InputError("theorem-general requires omega > k, got " + triple(r.k, r.omega, spec.colors.value_or(0)));
      r.colors = spec.colors.value_or(bound_formula(r.k, r.omega));
      if (!general_condition(r.k, r.omega, r.colors)) {
        throw InputError("theorem-general requires ck - 3 omega + 1 > 0, got " +
                         triple(r.k, r.omega, r.colors));
      }
      break;
    case Suite::CorollaryPartial: {
      r.k = spec.k.value_or(2);
      if (r.k < 1) throw InputError("k must be at least 1");
      const int lambda = spec.lambda.value_or(r.k);
      if (lambda < 1) throw InputError("lambda must be at least 1");
      if (spec.omega && *spec.omega != lambda + 1) {
        throw InputError("corollary-partial derives omega = lambda + 1");
      }
      r.lambda = lambda;
      r.omega = lambda + 1;
      if (lambda == r.k) {
        r.colors = spec.colors.value_or(4);
        const bool small = r.colors == r.k + 3 || (r.k == 2 && r.colors == 4);
        if (!small && !general_condition(r.k, r.omega, r.colors)) {
          throw InputError("corollary-partial hypotheses fail for " + triple(r.k, r.omega, r.colors));
        }
      } else {
        r.colors = spec.colors.value_or(partial_bound_formula(r.k, lambda));
        if (!general_condition(r.k, r.omega, r.colors)) {
          throw InputError("corollary-partial requires ck - 3(lambda + 1) + 1 > 0 and lambda + 1 > k, got " +
                           triple(r.k, r.omega, r.colors));
        }
      }
      break;
    }
    case Suite::Conjecture3Color:
      require_fixed(spec.k, 2, "k");
      require_fixed(spec.omega, 3, "omega");
      r.k = 2;
      r.omega = 3;
      r.colors = spec.colors.value_or(3);
      if (r.colors < 1) throw InputError("c must be at least 1");
      break;
  }
  if (spec.n_min < r.omega) {
    throw InputError("n_min must be at least omega = " + std::to_string(r.omega));
  }
  return r;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::string unquote(const std::string& s, const std::string& where) {
  if (s.size() >= 2 && s.front() == '"') {
    if (s.back() != '"') throw InputError(where + ": unterminated string");
    return s.substr(1, s.size() - 2);
  }
  return s;
}

long long to_integer(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError(where + ": expected an integer, got \"" + s + "\"");
  return v;
}

double to_real(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError(where + ": expected a number, got \"" + s + "\"");
  return v;
}

std::vector<std::string> to_list(const std::string& s, const std::string& where) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InputError(where + ": unterminated list");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(unquote(item, where));
  }
  return out;
}

}  // namespace

ExperimentSpec parse_experiment_config(const std::string& text, ExperimentSpec spec) {
  std::stringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string where = "line " + std::to_string(number);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;  // blank or a [section] header
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string raw = trim(line.substr(eq + 1));
    const std::string value = unquote(raw, where);
    const std::string at = where + " (" + key + ")";
    if (key == "suite") {
      spec.suite = suite_from_string(value);
    } else if (key == "instances") {
      spec.instances = static_cast<int>(to_integer(value, at));
    } else if (key == "n_min") {
      spec.n_min = static_cast<int>(to_integer(value, at));
    } else if (key == "n_max") {
      spec.n_max = static_cast<int>(to_integer(value, at));
    } else if (key == "k") {
      spec.k = static_cast<int>(to_integer(value, at));
    } else if (key == "omega") {
      spec.omega = static_cast<int>(to_integer(value, at));
    } else if (key == "lambda") {
      spec.lambda = static_cast<int>(to_integer(value, at));
    } else if (key == "c" || key == "colors") {
      spec.colors = static_cast<int>(to_integer(value, at));
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(to_integer(value, at));
    } else if (key == "bobs" || key == "bob") {
      spec.bobs = to_list(raw, at);
    } else if (key == "drop_prob") {
      spec.drop_prob = to_real(value, at);
    } else if (key == "keep_prob") {
      spec.keep_prob = to_real(value, at);
    } else if (key == "color_policy") {
      spec.color_policy = value;
    } else if (key == "threads") {
      spec.threads = static_cast<int>(to_integer(value, at));
    } else if (key == "budget") {
      spec.budget = to_integer(value, at);
    } else if (key == "out") {
      spec.out = value;
    } else {
      throw InputError(where + ": unknown key \"" + key + "\"");
    }
  }
  return spec;
}

GameConfig suite_instance(const ResolvedSpec& spec, int index) {
  const std::uint64_t seed = derive_seed(spec.spec.seed, static_cast<std::uint64_t>(index));
  Rng rng(derive_seed(seed, 0));
  const int span = spec.spec.n_max - spec.spec.n_min + 1;
  const int n = spec.spec.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));

  GameConfig cfg;
  cfg.k = spec.k;
  cfg.colors = spec.colors;
  if (spec.lambda) {
    PartialKTreeWitness w =
        generate_partial_ktree(*spec.lambda, n, spec.spec.keep_prob, derive_seed(seed, 1));
    if (auto problem = witness_problem(w)) throw InputError("generated witness invalid: " + *problem);
    cfg.play_graph = std::move(w.g);
    cfg.strategy_graph = std::move(w.h);
  } else {
    const Graph tree = generate_ktree(spec.omega - 1, n, derive_seed(seed, 1));
    cfg.play_graph = sparsify_chordal(tree, spec.spec.drop_prob, derive_seed(seed, 2));
  }
  const Graph& h = cfg.alice_graph();
  if (!is_chordal(h) || clique_number(h) != spec.omega) {
    throw InputError("instance " + std::to_string(index) + " violates the suite hypotheses");
  }
  cfg.validate();
  return cfg;
}

namespace {

std::vector<SuiteRow> run_instance(const ResolvedSpec& spec, int index) {
  const std::uint64_t seed = derive_seed(spec.spec.seed, static_cast<std::uint64_t>(index));
  const GameConfig cfg = suite_instance(spec, index);
  std::vector<SuiteRow> rows;
  for (std::size_t b = 0; b < spec.spec.bobs.size(); ++b) {
    ActivationAlice alice = ActivationAlice::for_config(cfg, spec.spec.color_policy);
    auto bob = make_strategy(Json(spec.spec.bobs[b]), cfg, Player::Bob, derive_seed(seed, 100 + b),
                             spec.spec.budget);
    SuiteRow row;
    row.index = index;
    row.seed = seed;
    row.n = cfg.order();
    row.edges = static_cast<int>(cfg.play_graph.edge_count());
    row.digest = config_digest(cfg);
    row.bob = spec.spec.bobs[b];
    try {
      const GameTranscript t = play_game(cfg, alice, *bob);
      row.outcome = to_string(t.outcome.kind);
      row.witness = t.outcome.witness;
      row.diagnostic = t.outcome.diagnostic;
      for (const GameEvent& e : t.events) row.moves += std::holds_alternative<MoveEvent>(e) ? 1 : 0;
      row.audit = audit_activations(t).value_or("");
      row.violation = t.outcome.kind != OutcomeKind::AliceWins || !row.audit.empty();
    } catch (const BudgetExceeded& e) {
      row.outcome = "budget";
      row.diagnostic = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SuiteReport run_suite(const ResolvedSpec& spec) {
  const int count = spec.spec.instances;
  std::vector<std::vector<SuiteRow>> per_instance(count);
  std::vector<std::string> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        per_instance[i] = run_instance(spec, i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int threads = spec.spec.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                       : spec.spec.threads;
  threads = std::clamp(threads, 1, std::max(1, count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::string& e : errors)
    if (!e.empty()) throw InputError(e);

  SuiteReport report;
  report.spec = spec;
  for (auto& rows : per_instance)
    for (SuiteRow& row : rows) {
      if (row.outcome == "alice_wins") ++report.alice_wins;
      if (row.outcome == "bob_wins") ++report.bob_wins;
      if (row.outcome == "forfeit") ++report.forfeits;
      if (row.outcome == "budget") ++report.inconclusive;
      if (row.violation) ++report.violations;
      if (!row.audit.empty()) ++report.audit_failures;
      report.rows.push_back(std::move(row));
    }
  report.pass = spec.spec.suite == Suite::Conjecture3Color || report.violations == 0;
  return report;
}

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json params_json(const ResolvedSpec& r) {
  Json p;
  p["suite"] = to_string(r.spec.suite);
  p["instances"] = r.spec.instances;
  p["n_min"] = r.spec.n_min;
  p["n_max"] = r.spec.n_max;
  p["k"] = r.k;
  p["omega"] = r.omega;
  p["lambda"] = optional_int(r.lambda);
  p["c"] = r.colors;
  p["seed"] = r.spec.seed;
  p["bobs"] = r.spec.bobs;
  p["drop_prob"] = r.spec.drop_prob;
  p["keep_prob"] = r.spec.keep_prob;
  p["color_policy"] = r.spec.color_policy;
  p["budget"] = r.spec.budget;
  return p;
}

constexpr const char* kDesignNote =
    "instance counts, size ranges and Bob strategy mixes are choices of this harness";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json report_to_json(const SuiteReport& r) {
  Json doc;
  doc["suite"] = to_string(r.spec.spec.suite);
  doc["note"] = kDesignNote;
  doc["params"] = params_json(r.spec);
  Json rows = Json::array();
  for (const SuiteRow& row : r.rows) {
    Json j;
    j["index"] = row.index;
    j["seed"] = row.seed;
    j["n"] = row.n;
    j["edges"] = row.edges;
    j["digest"] = row.digest;
    j["bob"] = row.bob;
    j["outcome"] = row.outcome;
    j["witness"] = optional_int(row.witness);
    j["moves"] = row.moves;
    j["violation"] = row.violation;
    j["audit"] = row.audit;
    j["diagnostic"] = row.diagnostic;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  Json summary;
  summary["games"] = r.rows.size();
  summary["alice_wins"] = r.alice_wins;
  summary["bob_wins"] = r.bob_wins;
  summary["forfeits"] = r.forfeits;
  summary["inconclusive"] = r.inconclusive;
  summary["violations"] = r.violations;
  summary["audit_failures"] = r.audit_failures;
  summary["pass"] = r.pass;
  doc["summary"] = std::move(summary);
  return doc;
}

std::string report_to_csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "# suite=" << to_string(r.spec.spec.suite) << "\n";
  out << "# note=" << kDesignNote << "\n";
  const Json params = params_json(r.spec);
  for (const auto& [key, value] : params.items()) {
    if (key == "suite") continue;
    out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  out << "# games=" << r.rows.size() << "\n# alice_wins=" << r.alice_wins
      << "\n# bob_wins=" << r.bob_wins << "\n# forfeits=" << r.forfeits
      << "\n# inconclusive=" << r.inconclusive
      << "\n# violations=" << r.violations << "\n# audit_failures=" << r.audit_failures
      << "\n# pass=" << (r.pass ? "true" : "false") << "\n";
  out << "index,seed,n,edges,digest,bob,outcome,witness,moves,violation,audit,diagnostic\n";
  for (const SuiteRow& row : r.rows) {
    out << row.index << ',' << row.seed << ',' << row.n << ',' << row.edges << ',' << row.digest
        << ',' << csv_field(row.bob) << ',' << row.outcome << ','
        << (row.witness ? std::to_string(*row.witness) : "") << ',' << row.moves << ','
        << (row.violation ? "true" : "false") << ',' << csv_field(row.audit) << ','
        << csv_field(row.diagnostic) << "\n";
  }
  return out.str();
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == n;
}

namespace {

// Upper-triangle adjacency bits in (0,1), (0,2), ..., (n-2,n-1) order.
std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
  return code;
}

Graph from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> --bit) & 1) g.add_edge(i, j);
  return g;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw InputError("canonical_form supports at most 8 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = adjacency_code(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::max(best, adjacency_code(g, perm));
  return from_code(n, best);
}

std::vector<Graph> connected_chordal_catalog(int max_n) {
  if (max_n > 7) throw InputError("catalog supports at most 7 vertices");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::pair<int, std::uint64_t>, Graph> unique;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
      Graph g = from_code(n, code);
      if (static_cast<int>(g.edge_count()) < n - 1 || !is_connected(g) || !is_chordal(g)) continue;
      Graph canon = canonical_form(g);
      std::vector<Vertex> id(n);
      std::iota(id.begin(), id.end(), 0);
      unique.emplace(std::pair{canon.edge_count(), adjacency_code(canon, id)}, std::move(canon));
    }
    for (auto& [key, g] : unique) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cliquegame
