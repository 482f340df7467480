// cdrkit command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdrkit/analysis.hpp"
#include "cdrkit/errors.hpp"
#include "cdrkit/games.hpp"
#include "cdrkit/overlap_graph.hpp"
#include "cdrkit/perm.hpp"
#include "cdrkit/sort_ops.hpp"
#include "cdrkit/verify.hpp"

using namespace cdrkit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string literal;
  std::string file;
  std::string fixture_name;

  void attach(CLI::App* cmd) {
    cmd->add_option("perm", literal, "signed permutation, e.g. \"[1,-3,2]\"");
    cmd->add_option("--file", file, "read the permutation from a file");
    cmd->add_option("--fixture", fixture_name, "named fixture (see `fixtures`)");
  }

  bool given() const { return !literal.empty() || !file.empty() || !fixture_name.empty(); }

  SignedPermutation load() const {
    const int sources = !literal.empty() + !file.empty() + !fixture_name.empty();
    if (sources != 1) throw UsageError("give exactly one of a permutation literal, --file or --fixture");
    if (!fixture_name.empty()) return fixture(fixture_name);
    if (!literal.empty()) return parse_permutation(literal);
    const auto perms = parse_permutation_lines(read_file(file));
    if (perms.size() != 1) {
      throw UsageError(file + ": expected one permutation, found " + std::to_string(perms.size()));
    }
    return perms.front();
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

std::vector<Pointer> to_pointers(const std::vector<int>& lows) {
  std::vector<Pointer> out;
  for (int i : lows) out.push_back(Pointer{i});
  return out;
}

std::string join(const LengthCounts& counts, bool with_multiplicity) {
  std::string out;
  for (const auto& [len, count] : counts) {
    if (!out.empty()) out += ",";
    out += std::to_string(len);
    if (with_multiplicity) out += "x" + std::to_string(count);
  }
  return out;
}

// ---- graph -----------------------------------------------------------------

struct GraphCmd {
  Input in;
  std::string format = "dot";

  int run() const {
    const auto g = build_overlap_graph(in.load());
    std::cout << (format == "dot" ? to_dot(g) : to_text(g));
    return 0;
  }
};

// ---- apply -----------------------------------------------------------------

struct ApplyCmd {
  Input in;
  std::string op;
  int pointer = 0;
  std::vector<int> pointers;

  int run() const {
    SortTrace trace(in.load());
    if (op == "cdr") {
      if (pointers.size() > 0) throw UsageError("--op cdr takes --pointer, not --pointers");
      if (pointer == 0) throw UsageError("--op cdr requires --pointer i");
      trace.push_cdr(CdrMove{Pointer{pointer}});
    } else {
      if (pointers.size() != 2) throw UsageError("--op cds requires --pointers i,j");
      trace.push_cds(CdsMove(Pointer{pointers[0]}, Pointer{pointers[1]}));
    }
    std::cout << format_trace(trace) << "# result " << format_permutation(trace.current()) << "\n";
    return 0;
  }
};

// ---- sort ------------------------------------------------------------------

struct SortCmd {
  Input in;
  std::string strategy = "search";
  bool allow_cds = false;
  std::vector<int> prefix;
  std::uint64_t seed = 0;
  bool random = false;
  std::size_t budget = SearchOptions{}.max_states;

  int run() const {
    const auto perm = in.load();
    SortTrace trace(perm);
    SearchOptions options;
    options.max_states = budget;

    if (strategy == "search") {
      if (!prefix.empty()) throw UsageError("--prefix applies to --strategy indiscriminate only");
      const auto result = cdr_sortable_search(perm, options);
      if (result.outcome == Outcome::Undecided) throw std::runtime_error("search budget exhausted");
      if (result.outcome == Outcome::No) throw std::runtime_error(format_permutation(perm) + " is not cdr-sortable");
      for (auto p : result.witness) trace.push_cdr(CdrMove{p});
    } else if (strategy == "greedy-safe") {
      if (!prefix.empty()) throw UsageError("--prefix applies to --strategy indiscriminate only");
      for (auto p : greedy_safe_total_sequence(perm)) trace.push_cdr(CdrMove{p});
    } else {
      for (auto p : to_pointers(prefix)) trace.push_cdr(CdrMove{p});
      Selector selector(random ? SelectionPolicy::Random : SelectionPolicy::Canonical, seed);
      const auto run = indiscriminate_cdr_run(trace.current(), selector);
      for (auto p : run.pointers) trace.push_cdr(CdrMove{p});
    }

    if (allow_cds) {
      Selector selector(random ? SelectionPolicy::Random : SelectionPolicy::Canonical, seed);
      const auto cds = cds_sortable_greedy(trace.current(), selector);
      for (const auto& m : cds.moves) trace.push_cds(m);
    }

    const auto k = trace.count(MoveKind::Cdr);
    const auto m = trace.count(MoveKind::Cds);
    std::cout << format_trace(trace);
    std::cout << "# final " << format_permutation(trace.current())
              << " sorted=" << (is_identity(trace.current()) ? "yes" : "no") << "\n";
    std::cout << "# k=" << k << ", m=" << m << ", k+2m=" << k + 2 * m << "\n";
    return 0;
  }
};

// ---- verify ----------------------------------------------------------------

struct VerifyCmd {
  std::string property;
  std::size_t n = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool records = false;
  bool serial = false;
  std::size_t budget = SearchOptions{}.max_states;

  int run() const {
    const auto prop = parse_property(property);
    if (!prop) throw UsageError("unknown property '" + property + "'");
    if (exhaustive == (samples > 0)) throw UsageError("give exactly one of --exhaustive or --samples K");
    if (n == 0) throw UsageError("--n must be at least 1");
    if (exhaustive && n > 9) throw UsageError("--exhaustive is limited to n <= 9");
    SweepConfig config;
    config.property = *prop;
    config.n = n;
    config.exhaustive = exhaustive;
    config.samples = samples;
    config.seed = seed;
    config.search.max_states = budget;
    const auto report = serial ? run_sweep_serial(config) : run_sweep_parallel(config);
    std::cout << format_report(report, records);
    return report.ok() ? 0 : 1;
  }
};

// ---- game ------------------------------------------------------------------

struct GameCmd {
  Input in;
  std::string graph_file;
  std::string rule = "normal";
  bool oracle = false;
  bool trace = false;
  std::size_t budget = 2'000'000;

  int run() const {
    OrientedGraph g;
    if (!graph_file.empty()) {
      if (in.given()) throw UsageError("give either a permutation or --graph-file, not both");
      g = parse_graph_text(Input::read_file(graph_file));
    } else {
      g = build_overlap_graph(in.load());
    }
    const GameState start{g, Player::One, rule == "normal" ? PlayRule::Normal : PlayRule::Misere};
    const auto verdict = winner_by_parity(start);
    std::cout << "winner: " << to_string(verdict.winner) << " (parity " << (verdict.play_length % 2 ? "odd" : "even")
              << ")\n";
    if (trace) std::cout << format_game_trace(play_out(start));
    if (!oracle) return 0;
    const auto mm = winner_by_minimax(start, budget);
    if (!mm.winner) throw std::runtime_error("minimax position budget exhausted");
    const bool agree = *mm.winner == verdict.winner;
    std::cout << "minimax: " << to_string(*mm.winner) << " (positions " << mm.positions << ")\n";
    std::cout << "oracle: " << (agree ? "agree" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
  }
};

// ---- fixed-points ----------------------------------------------------------

struct FixedPointsCmd {
  Input in;
  std::size_t budget = SearchOptions{}.max_states;

  int run() const {
    const auto perm = in.load();
    SearchOptions options;
    options.max_states = budget;
    const auto fps = enumerate_cdr_fixed_points(perm, options);
    std::cout << "# fixed-points " << format_permutation(perm) << " count=" << fps.fixed_points.size()
              << " states=" << fps.states << " complete=" << (fps.complete ? "yes" : "no") << "\n";
    for (const auto& fp : fps.fixed_points) {
      std::cout << format_permutation(fp.perm) << "\tsteps=" << join(fp.steps, false)
                << "\tsequences=" << join(fp.steps, true) << "\n";
    }
    if (!fps.complete) {
      std::cerr << "error: state budget exhausted; list is partial\n";
      return 1;
    }
    return 0;
  }
};

// ---- parity ----------------------------------------------------------------

struct ParityCmd {
  Input in;
  bool all = false;

  int run() const {
    const auto perm = in.load();
    Selector canonical;
    const auto run = indiscriminate_cdr_run(perm, canonical);
    std::cout << "parity: " << to_string(parity(perm)) << " (maximal sequence length " << run.pointers.size()
              << ")\n";
    if (!all) return 0;
    const auto profile = maximal_sequence_lengths(perm);
    if (!profile.complete) throw std::runtime_error("state budget exhausted");
    std::cout << "lengths: " << join(profile.counts, false) << "\n";
    std::cout << "single parity: " << (profile.single_parity() ? "yes" : "no") << "\n";
    return profile.single_parity() ? 0 : 1;
  }
};

int list_fixtures() {
  for (const auto& [name, perm] : fixtures()) std::cout << name << "\t" << format_permutation(perm) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdrkit: context directed reversals and swaps on signed permutations"};
  app.require_subcommand(1);

  GraphCmd graph;
  auto* graph_cmd = app.add_subcommand("graph", "overlap graph of a permutation");
  graph.in.attach(graph_cmd);
  graph_cmd->add_option("--format", graph.format)->check(CLI::IsMember({"dot", "text"}));

  ApplyCmd apply;
  auto* apply_cmd = app.add_subcommand("apply", "apply one cdr or cds");
  apply.in.attach(apply_cmd);
  apply_cmd->add_option("--op", apply.op)->required()->check(CLI::IsMember({"cdr", "cds"}));
  apply_cmd->add_option("--pointer", apply.pointer, "low index i of pointer (i,i+1)");
  apply_cmd->add_option("--pointers", apply.pointers, "two low indices i,j")->delimiter(',');

  SortCmd sort;
  auto* sort_cmd = app.add_subcommand("sort", "sort and print the trace");
  sort.in.attach(sort_cmd);
  sort_cmd->add_option("--strategy", sort.strategy)
      ->check(CLI::IsMember({"search", "greedy-safe", "indiscriminate"}));
  sort_cmd->add_flag("--allow-cds", sort.allow_cds, "finish with greedy cds moves");
  sort_cmd->add_option("--prefix", sort.prefix, "cdr pointers forced before the run")->delimiter(',');
  sort_cmd->add_flag("--random", sort.random, "pick moves uniformly instead of lowest-first");
  sort_cmd->add_option("--seed", sort.seed);
  sort_cmd->add_option("--budget", sort.budget, "search state limit");

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify", "property sweep");
  verify_cmd->add_option("--property", verify.property)
      ->required()
      ->check(CLI::IsMember({"parity", "rescue", "steps", "same-length", "commutation", "cds-same-length"}));
  verify_cmd->add_option("--n", verify.n)->required();
  verify_cmd->add_flag("--exhaustive", verify.exhaustive);
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_flag("--records", verify.records, "print every record, not only failures");
  verify_cmd->add_flag("--serial", verify.serial, "single-threaded reference sweep");
  verify_cmd->add_option("--budget", verify.budget, "state limit per case");

  GameCmd game;
  auto* game_cmd = app.add_subcommand("game", "decide the gcdr game");
  game.in.attach(game_cmd);
  game_cmd->add_option("--graph-file", game.graph_file, "graph in `graph --format text` form");
  game_cmd->add_option("--rule", game.rule)->check(CLI::IsMember({"normal", "misere"}));
  game_cmd->add_flag("--oracle", game.oracle, "cross-check with minimax");
  game_cmd->add_flag("--trace", game.trace, "print one play-out");
  game_cmd->add_option("--budget", game.budget, "minimax position limit");

  FixedPointsCmd fixed;
  auto* fixed_cmd = app.add_subcommand("fixed-points", "reachable cdr fixed points");
  fixed.in.attach(fixed_cmd);
  fixed_cmd->add_option("--budget", fixed.budget, "state limit");

  ParityCmd par;
  auto* parity_cmd = app.add_subcommand("parity", "parity of maximal cdr sequences");
  par.in.attach(parity_cmd);
  parity_cmd->add_flag("--all", par.all, "enumerate every maximal sequence length");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list named permutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (graph_cmd->parsed()) return graph.run();
    if (apply_cmd->parsed()) return apply.run();
    if (sort_cmd->parsed()) return sort.run();
    if (verify_cmd->parsed()) return verify.run();
    if (game_cmd->parsed()) return game.run();
    if (fixed_cmd->parsed()) return fixed.run();
    if (parity_cmd->parsed()) return par.run();
    if (fixtures_cmd->parsed()) return list_fixtures();
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const NotApplicable& e) {
    std::cerr << "error: not applicable: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
