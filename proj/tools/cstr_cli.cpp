// Command-line front end: solvers, chain analysis, cost models, and
// instance generation, with JSON/TSV reports.
//
// Exit codes: 0 feasible or analysis ok, 1 infeasible, 2 refused/budget,
// 3 input error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cstr/cstr.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitRefused = 2;
constexpr int kExitInputError = 3;

struct CommonOpts {
  std::string input;
  bool fasta = false;
  bool skip_invalid = false;
  std::string metric = "";
  std::int64_t d = -1;
  std::int64_t L = -1;
  std::string algo = "auto";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
  std::uint64_t budget_nodes = 0;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    cstr::write_text_file(out_path, content);
  }
}

cstr::MetricKind parse_metric_kind(const std::string& name) {
  if (name == "hamming") return cstr::MetricKind::Hamming;
  if (name == "levenshtein") return cstr::MetricKind::Levenshtein;
  if (name.rfind("weighted", 0) == 0) return cstr::MetricKind::Weighted;
  throw std::invalid_argument("unknown metric '" + name + "'");
}

cstr::CostScheme load_cost_scheme(const std::string& metric_flag) {
  const auto colon = metric_flag.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("weighted metric needs a table: weighted:<file>");
  }
  const std::string path = metric_flag.substr(colon + 1);
  const cstr::Json j = cstr::Json::parse(cstr::read_text_file(path));
  auto alphabet = cstr::make_alphabet(j.at("alphabet").get<std::string>());
  return cstr::cost_table_from_json(alphabet, j.at("costs"));
}

// Loads an instance from JSON (native schema) or FASTA plus flags.
cstr::InstanceFile load_instance(const CommonOpts& opts) {
  cstr::InstanceFile file;
  if (opts.fasta) {
    if (opts.metric.rfind("weighted", 0) == 0) {
      file.scheme = load_cost_scheme(opts.metric);
      file.alphabet = file.scheme->alphabet();
    } else {
      file.alphabet = cstr::dna();
    }
    std::ifstream in(opts.input);
    if (!in) throw std::invalid_argument("cannot open FASTA file: " + opts.input);
    auto parsed = cstr::parse_fasta(in, file.alphabet, opts.skip_invalid);
    for (auto& warning : parsed.warnings) std::cerr << "warning: " << warning << "\n";
    for (auto& rec : parsed.records) file.strings.push_back(rec.seq);
    if (opts.d < 0) throw std::invalid_argument("--d is required with FASTA input");
    file.metric = opts.metric.empty() ? cstr::MetricKind::Hamming
                                      : parse_metric_kind(opts.metric);
  } else {
    file = cstr::instance_from_json(cstr::Json::parse(cstr::read_text_file(opts.input)));
    if (!opts.metric.empty()) {
      file.metric = parse_metric_kind(opts.metric);
      if (file.metric == cstr::MetricKind::Weighted) {
        file.scheme = load_cost_scheme(opts.metric);
      }
    }
  }
  if (opts.d >= 0) file.d = opts.d;
  if (opts.L >= 0) file.L = static_cast<std::size_t>(opts.L);
  return file;
}

int outcome_exit(cstr::Outcome o) {
  switch (o) {
    case cstr::Outcome::Feasible: return kExitFeasible;
    case cstr::Outcome::Infeasible: return kExitInfeasible;
    case cstr::Outcome::Refused: return kExitRefused;
  }
  return kExitInputError;
}

int cmd_solve_csp(const CommonOpts& opts) {
  const cstr::InstanceFile file = load_instance(opts);
  const cstr::CspInstance inst = file.to_csp();
  const std::uint64_t budget =
      opts.budget_nodes ? opts.budget_nodes : cstr::kDefaultExhaustiveBudget;

  std::string algo = opts.algo;
  if (algo == "auto") algo = cstr::auto_algorithm(inst);
  if (algo == "marx") throw std::invalid_argument("marx is a CSSP algorithm");

  std::optional<cstr::SearchStats> stats;
  const cstr::SolveResult res = cstr::run_algorithm(algo, inst, budget, &stats);

  cstr::Json j;
  j["schema_version"] = cstr::kSchemaVersion;
  j["problem"] = "csp";
  j["algorithm"] = algo;
  j["metric"] = cstr::metric_name(inst.metric.kind);
  j["d"] = inst.d;
  j["outcome"] = cstr::outcome_name(res.outcome);
  if (res.center) {
    j["center"] = res.center->to_string();
    j["radius"] = cstr::radius(*res.center, inst).to_string();
  }
  if (!res.note.empty()) j["note"] = res.note;
  if (stats) {
    j["stats"] = cstr::Json{{"nodes_expanded", stats->nodes_expanded},
                            {"max_depth", stats->max_depth},
                            {"pruned_by_budget", stats->pruned_by_budget},
                            {"pruned_by_bound", stats->pruned_by_bound}};
  }
  emit(cstr::dump_json(j), opts.out);
  return outcome_exit(res.outcome);
}

int cmd_solve_cssp(const CommonOpts& opts) {
  const cstr::InstanceFile file = load_instance(opts);
  const cstr::CsspInstance inst = file.to_cssp();
  const std::uint64_t budget =
      opts.budget_nodes ? opts.budget_nodes : cstr::kDefaultCsspBudget;

  cstr::Json j;
  j["schema_version"] = cstr::kSchemaVersion;
  j["problem"] = "cssp";
  j["d"] = inst.d;
  j["L"] = inst.L;

  cstr::SolveResult res;
  if (opts.algo == "brute") {
    j["algorithm"] = "brute";
    res = cstr::brute_force_cssp(inst, budget);
  } else {
    j["algorithm"] = "marx";
    auto [r, info] = cstr::solve_cssp(inst, budget);
    res = r;
    j["generators_tried"] = info.generators_tried;
    j["generators_skipped_conflict"] = info.generators_skipped_conflict;
    j["candidates_checked"] = info.candidates_checked;
    if (info.witness_generator) {
      cstr::Json members = cstr::Json::array();
      for (const auto& m : info.witness_generator->members) {
        members.push_back(m.to_string());
      }
      j["witness_generator"] = std::move(members);
      j["witness_conflict"] = info.witness_generator->conflict_count();
    }
  }
  j["outcome"] = cstr::outcome_name(res.outcome);
  if (res.center) {
    j["center"] = res.center->to_string();
    j["radius"] = cstr::cssp_radius(*res.center, inst).to_string();
  }
  if (!res.note.empty()) j["note"] = res.note;
  emit(cstr::dump_json(j), opts.out);
  return outcome_exit(res.outcome);
}

int cmd_analyze_chain(std::int64_t d, const CommonOpts& opts, bool no_graph) {
  const std::uint64_t cap =
      opts.budget_nodes ? opts.budget_nodes : cstr::kDefaultChainNodeCap;
  const cstr::TreeChain chain = cstr::build_tree_chain(d, cap);
  const cstr::ChainAnalysis analysis = cstr::analyze_chain(chain);
  emit(cstr::dump_json(cstr::chain_analysis_to_json(chain, analysis, !no_graph)),
       opts.out);
  const bool ok = analysis.rows_ok && analysis.stationary_ok && analysis.reversible;
  return ok ? kExitFeasible : kExitInputError;
}

int cmd_cost_model(const cstr::CostParams& params, const std::string& k_class,
                   double beta, const CommonOpts& opts) {
  const auto profiles = cstr::cost_report(params);
  std::string content;
  if (opts.format == "tsv") {
    content = cstr::cost_profiles_to_tsv(profiles);
  } else {
    content = cstr::dump_json(cstr::cost_profiles_to_json(profiles));
  }
  if (!k_class.empty()) {
    cstr::KGrowth growth;
    if (k_class == "const") {
      growth = cstr::KGrowth::Constant;
    } else if (k_class == "log") {
      growth = cstr::KGrowth::Logarithmic;
    } else if (k_class == "poly") {
      growth = cstr::KGrowth::Polynomial;
    } else if (k_class == "exp") {
      growth = cstr::KGrowth::Exponential;
    } else {
      throw std::invalid_argument("--k-class must be const|log|poly|exp");
    }
    const auto rows = cstr::regime_report(beta, growth);
    if (opts.format == "tsv") {
      content += cstr::regime_to_tsv(rows, beta, growth);
    } else {
      content += cstr::dump_json(cstr::regime_to_json(rows, beta, growth));
    }
  }
  emit(content, opts.out);
  return kExitFeasible;
}

int cmd_grover(std::uint64_t N, std::uint64_t marked, std::int64_t t,
               const std::string& mode, std::uint64_t minfind_n,
               const CommonOpts& opts) {
  cstr::Json j;
  j["schema_version"] = cstr::kSchemaVersion;
  if (minfind_n > 0) {
    // random permutation of 0..n-1 as the value list
    std::mt19937_64 rng(opts.seed);
    std::vector<double> values(minfind_n);
    for (std::size_t i = 0; i < minfind_n; ++i) values[i] = static_cast<double>(i);
    for (std::size_t i = minfind_n; i > 1; --i) {
      std::swap(values[i - 1],
                values[cstr::uniform_below(rng, i)]);
    }
    const auto run = cstr::min_find_simulate(values, opts.seed);
    j["simulation"] = "min-find";
    j["n"] = minfind_n;
    j["seed"] = opts.seed;
    j["argmin"] = run.argmin;
    j["modeled_queries"] = run.modeled_queries;
    j["rounds"] = run.rounds;
    emit(cstr::dump_json(j), opts.out);
    return kExitFeasible;
  }

  const std::uint64_t iterations =
      t >= 0 ? static_cast<std::uint64_t>(t) : cstr::grover_optimal_iterations(N, marked);
  const cstr::GroverMode gm = mode == "statevector" ? cstr::GroverMode::Statevector
                                                    : cstr::GroverMode::ClosedForm;
  const cstr::GroverRun run = cstr::grover_simulate(N, marked, iterations, gm);
  j["simulation"] = "grover";
  j["N"] = run.search_space;
  j["marked"] = run.marked_count;
  j["t"] = run.iterations;
  j["mode"] = gm == cstr::GroverMode::Statevector ? "statevector" : "closed-form";
  j["success_probability"] = run.success_probability;
  j["oracle_queries"] = run.oracle_queries;
  emit(cstr::dump_json(j), opts.out);
  return kExitFeasible;
}

int cmd_gen_instance(const std::string& alphabet, std::size_t n, std::size_t k,
                     std::int64_t d, const CommonOpts& opts) {
  const auto planted =
      cstr::gen_planted_instance(cstr::make_alphabet(alphabet), n, k, d, opts.seed);
  cstr::InstanceFile file;
  file.alphabet = planted.instance.alphabet();
  file.strings = planted.instance.strings;
  file.d = planted.instance.d;
  file.metric = cstr::MetricKind::Hamming;
  file.provenance = cstr::Json{{"generator", "planted"},
                               {"seed", opts.seed},
                               {"hidden_center", planted.center.to_string()}};
  emit(cstr::dump_json(cstr::instance_to_json(file)), opts.out);
  return kExitFeasible;
}

int cmd_bench(const std::string& alphabet, std::size_t count, std::size_t n,
              std::size_t k, std::int64_t d, const std::string& algos_csv,
              bool timing, const CommonOpts& opts) {
  std::vector<std::string> algos;
  std::string token;
  std::istringstream ss(algos_csv);
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) algos.push_back(token);
  }
  if (algos.empty()) throw std::invalid_argument("bench: no algorithms given");

  auto ab = cstr::make_alphabet(alphabet);
  std::vector<std::pair<std::string, cstr::CspInstance>> instances;
  for (std::size_t i = 0; i < count; ++i) {
    auto planted =
        cstr::gen_planted_instance(ab, n, k, d, cstr::derive_seed(opts.seed, i));
    instances.emplace_back("planted-" + std::to_string(i), planted.instance);
  }
  const std::uint64_t budget =
      opts.budget_nodes ? opts.budget_nodes : cstr::kDefaultExhaustiveBudget;
  const auto results = cstr::run_benchmark(algos, instances, opts.seed, budget);
  emit(cstr::dump_json(cstr::benchmark_to_json(results, timing)), opts.out);

  for (const auto& r : results) {
    if (r.outcome == cstr::Outcome::Refused) return kExitRefused;
  }
  return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closest String / Closest Substring solvers and chain analysis"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::int64_t chain_d = 2;
  bool no_graph = false;
  cstr::CostParams cost_params;
  std::string metric_flag = "hamming";
  std::string k_class;
  double beta = 0.001;
  std::uint64_t grover_n = 16, grover_marked = 1, minfind_n = 0;
  std::int64_t grover_t = -1;
  std::string grover_mode = "closed-form";
  std::string gen_alphabet = "ACGT";
  std::size_t gen_n = 8, gen_k = 3;
  std::int64_t gen_d = 1;
  std::size_t bench_count = 10;
  std::string bench_algos = "treesearch,exhaustive";
  bool bench_timing = false;

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--input", opts.input, "instance file (JSON, or FASTA with --fasta)")
          ->required();
      cmd->add_flag("--fasta", opts.fasta, "treat input as FASTA");
      cmd->add_flag("--skip-invalid", opts.skip_invalid,
                    "drop FASTA records with out-of-alphabet symbols");
    }
    cmd->add_option("--format", opts.format, "output format: json or tsv");
    cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");
  };

  auto* solve_csp = app.add_subcommand("solve-csp", "solve a Closest String instance");
  add_io(solve_csp, true);
  solve_csp->add_option("--metric", opts.metric,
                        "hamming | levenshtein | weighted:<costs.json>");
  solve_csp->add_option("--d", opts.d, "threshold distance (overrides file)");
  solve_csp->add_option("--algo", opts.algo, "auto | exhaustive | treesearch | dp");
  solve_csp->add_option("--budget-nodes", opts.budget_nodes, "solver budget override");

  auto* solve_cssp = app.add_subcommand("solve-cssp", "solve a Closest Substring instance");
  add_io(solve_cssp, true);
  solve_cssp->add_option("--d", opts.d, "threshold distance (overrides file)");
  solve_cssp->add_option("--L", opts.L, "target substring length (overrides file)");
  solve_cssp->add_option("--algo", opts.algo, "marx | brute");
  solve_cssp->add_option("--budget-nodes", opts.budget_nodes, "solver budget override");

  auto* analyze = app.add_subcommand("analyze-chain",
                                     "build and verify the tree walk chain");
  analyze->add_option("--d", chain_d, "tree parameter d >= 1")->required();
  analyze->add_flag("--no-graph", no_graph, "omit per-node/per-edge JSON sections");
  analyze->add_option("--budget-nodes", opts.budget_nodes, "node cap override");
  add_io(analyze, false);

  auto* cost = app.add_subcommand("cost-model", "closed-form runtime comparison");
  cost->add_option("--sigma", cost_params.sigma, "alphabet size");
  cost->add_option("--n", cost_params.n, "string length");
  cost->add_option("--k", cost_params.k, "number of strings");
  cost->add_option("--d", cost_params.d, "threshold distance");
  cost->add_option("--metric", metric_flag, "hamming | levenshtein");
  cost->add_option("--k-class", k_class, "regime table row: const | log | poly | exp");
  cost->add_option("--beta", beta, "d = beta*n for the regime table");
  add_io(cost, false);

  auto* grover = app.add_subcommand("grover-sim", "Grover / min-finding simulation");
  grover->add_option("--N", grover_n, "search space size");
  grover->add_option("--marked", grover_marked, "number of marked items");
  grover->add_option("--t", grover_t, "iterations (default: optimal)");
  grover->add_option("--mode", grover_mode, "closed-form | statevector");
  grover->add_option("--minfind", minfind_n,
                     "run min-finding on a random permutation of this size");
  grover->add_option("--seed", opts.seed, "seed for min-finding");
  add_io(grover, false);

  auto* gen = app.add_subcommand("gen-instance", "generate a planted instance");
  gen->add_option("--alphabet", gen_alphabet, "alphabet symbols");
  gen->add_option("--n", gen_n, "string length");
  gen->add_option("--k", gen_k, "number of strings");
  gen->add_option("--d", gen_d, "threshold distance");
  gen->add_option("--seed", opts.seed, "generator seed");
  add_io(gen, false);

  auto* bench = app.add_subcommand("bench", "benchmark solvers on planted instances");
  bench->add_option("--alphabet", gen_alphabet, "alphabet symbols");
  bench->add_option("--count", bench_count, "number of instances");
  bench->add_option("--n", gen_n, "string length");
  bench->add_option("--k", gen_k, "number of strings");
  bench->add_option("--d", gen_d, "threshold distance");
  bench->add_option("--algos", bench_algos, "comma-separated algorithm list");
  bench->add_option("--seed", opts.seed, "master seed");
  bench->add_flag("--timing", bench_timing,
                  "include wall times (breaks byte-for-byte determinism)");
  bench->add_option("--budget-nodes", opts.budget_nodes, "per-cell budget override");
  add_io(bench, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_csp->parsed()) return cmd_solve_csp(opts);
    if (solve_cssp->parsed()) return cmd_solve_cssp(opts);
    if (analyze->parsed()) return cmd_analyze_chain(chain_d, opts, no_graph);
    if (cost->parsed()) {
      cost_params.metric = parse_metric_kind(metric_flag);
      return cmd_cost_model(cost_params, k_class, beta, opts);
    }
    if (grover->parsed()) {
      return cmd_grover(grover_n, grover_marked, grover_t, grover_mode, minfind_n, opts);
    }
    if (gen->parsed()) return cmd_gen_instance(gen_alphabet, gen_n, gen_k, gen_d, opts);
    if (bench->parsed()) {
      return cmd_bench(gen_alphabet, bench_count, gen_n, gen_k, gen_d, bench_algos,
                       bench_timing, opts);
    }
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
