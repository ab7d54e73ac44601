// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "treenet/cost.hpp"
#include "treenet/records.hpp"
#include "treenet/reduction.hpp"
#include "treenet/search.hpp"
#include "treenet/stats.hpp"
#include "treenet/workloads.hpp"

namespace {

using namespace treenet;

// Raised for unreadable or malformed input files; maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledDemand load_demand(const std::string& text, const std::string& format) {
  return format == "matrix" ? parse_matrix(text) : parse_edgelist(text);
}

std::vector<RunRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return read_records(in);
}

// `a b` lines are edges; a lone label declares a vertex.
std::pair<OlaInstance, std::vector<std::string>> parse_ola(const std::string& text) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  const auto intern = [&](const std::string& l) {
    const auto [it, fresh] = index.try_emplace(l, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(l);
    return it->second;
  };
  OlaInstance ola;
  std::istringstream in(text);
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string s; fields >> s;) f.push_back(s);
    if (f.empty()) continue;
    if (f.size() > 2) throw Error("malformed line " + std::to_string(line_no));
    const Vertex a = intern(f[0]);
    if (f.size() == 2) ola.edges.push_back({a, intern(f[1])});
  }
  ola.n = labels.size();
  return {std::move(ola), std::move(labels)};
}

struct OptimizeArgs {
  std::string input, format = "edgelist", algo, out;
  std::optional<double> budget_s;
  std::optional<std::uint64_t> budget_q;
  std::uint64_t runs = 1, seed = 0;
};

int cmd_optimize(const OptimizeArgs& a) {
  const std::string text = read_file(a.input);
  const LabeledDemand input = load_demand(text, a.format);
  const std::string digest = input_digest(text);
  const Budget budget =
      a.budget_s ? Budget::wall_seconds(*a.budget_s) : Budget::query_count(*a.budget_q);

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::app);
    if (!file) throw InputError("cannot open '" + a.out + "' for appending");
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  for (std::uint64_t k = 0; k < a.runs; ++k) {
    const std::uint64_t seed = a.seed + k;
    const RunResult result = run_algorithm(a.algo, input.demand, budget, seed);
    out << to_json_line(make_record(result, seed, budget, input.labels, digest)) << '\n'
        << std::flush;
    std::cerr << result.algorithm << " seed " << seed << ": cost " << to_string(result.best.cost)
              << ", " << result.queries << " queries" << (result.exhausted ? ", exhausted" : "")
              << '\n';
  }
  return 0;
}

int cmd_summarize(const std::vector<std::string>& files, const std::string& verify_input,
                  const std::string& format) {
  std::vector<RunRecord> records;
  for (const auto& f : files) {
    auto part = load_records(f);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (!verify_input.empty()) {
    const std::string text = read_file(verify_input);
    const LabeledDemand input = load_demand(text, format);
    const std::string digest = input_digest(text);
    for (const auto& r : records)
      if (!verify_record(r, input, digest)) {
        std::cerr << "record " << r.algorithm << " seed " << r.seed
                  << " does not match the demand file\n";
        return 1;
      }
  }
  if (records.empty()) throw Error("no records");
  std::cout << format_summary(summarize_by_algorithm(records))
            << "# median: lower-middle element for even counts\n";
  return 0;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, const std::string& alt) {
  const auto costs = [](const std::vector<RunRecord>& rs) {
    std::vector<Cost> out;
    for (const auto& r : rs) out.push_back(r.best_cost);
    return out;
  };
  const auto a = costs(load_records(file_a));
  const auto b = costs(load_records(file_b));
  const Alternative alternative = alt == "less"      ? Alternative::kLess
                                  : alt == "greater" ? Alternative::kGreater
                                                     : Alternative::kTwoSided;
  const RankSumResult r = wilcoxon_rank_sum<Cost>(a, b, alternative);
  std::cout << "n_a " << a.size() << "\nn_b " << b.size() << "\nU " << r.statistic << "\np "
            << r.p_value << "\nmethod " << (r.exact ? "exact" : "normal") << '\n';
  return 0;
}

int cmd_reduce(const std::string& input, std::uint64_t bound, const std::string& out_path) {
  auto [ola, labels] = parse_ola(read_file(input));
  ola.bound = bound;
  const ObtInstance obt = build_obt_instance(ola);
  for (std::size_t i = 1; i <= obt.helper_count(); ++i) labels.push_back("h" + std::to_string(i));
  const std::string text = write_edgelist(obt.demand, labels);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
  }
  std::cerr << "d1 " << obt.d1 << "\nd2 " << obt.d2 << "\nC " << to_string(obt.bound) << '\n';
  return 0;
}

struct GenArgs {
  std::size_t n = 0;
  double alpha = 0.0;
  std::uint64_t requests = 0, seed = 0;
  std::string pool, out;
};

int cmd_gen(const GenArgs& a) {
  SyntheticConfig config;
  config.n = a.n;
  config.alpha = a.alpha;
  config.requests = a.requests;
  config.seed = a.seed;
  config.pair_pool = a.pool.empty() ? all_pairs(a.n) : parse_pair_pool(read_file(a.pool));
  const DemandGraph demand = generate_synthetic(config);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < a.n; ++v) labels.push_back(std::to_string(v));
  const std::string text = write_edgelist(demand, labels);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot write '" + a.out + "'");
    out << text;
  }
  return 0;
}

int cmd_eval(const std::string& input, const std::string& format, const std::string& tree_path) {
  const LabeledDemand d = load_demand(read_file(input), format);
  const Tree tree = parse_tree(read_file(tree_path), d.labels);
  std::cout << to_string(cost(tree, d.demand)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demand-aware binary tree network optimizer"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Run an algorithm K times, append JSON records");
  optimize->add_option("--input", opt.input, "Demand file")->required();
  optimize->add_option("--format", opt.format, "Demand format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));
  optimize->add_option("--algo", opt.algo, "init[+mutation], e.g. mst+random")->required();
  auto* bs = optimize->add_option("--budget-s", opt.budget_s, "Wall-clock seconds per run")
                 ->check(CLI::NonNegativeNumber);
  auto* bq = optimize->add_option("--budget-q", opt.budget_q, "Queries per run");
  bs->excludes(bq);
  optimize->add_option("--runs", opt.runs, "Number of runs");
  optimize->add_option("--seed", opt.seed, "Seed of the first run");
  optimize->add_option("--out", opt.out, "Record file (appended; stdout if omitted)");

  std::vector<std::string> summary_files;
  std::string verify_input, verify_format = "edgelist";
  auto* summarize_cmd = app.add_subcommand("summarize", "Min / median / max per algorithm");
  summarize_cmd->add_option("records", summary_files, "Record files")->required();
  summarize_cmd->add_option("--verify", verify_input, "Re-evaluate records against this demand");
  summarize_cmd->add_option("--format", verify_format, "Demand format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));

  std::string cmp_a, cmp_b, alternative = "two-sided";
  auto* compare = app.add_subcommand("compare", "Wilcoxon rank sum test on best costs");
  compare->add_option("a", cmp_a, "First record file")->required();
  compare->add_option("b", cmp_b, "Second record file")->required();
  compare->add_option("--alternative", alternative, "two-sided, less or greater")
      ->check(CLI::IsMember({"two-sided", "less", "greater"}));

  std::string ola_input, reduce_out;
  std::uint64_t bound = 0;
  auto* reduce = app.add_subcommand("reduce", "Linear arrangement instance to tree demand");
  reduce->add_option("--input", ola_input, "Graph as `a b` lines")->required();
  reduce->add_option("--bound", bound, "Arrangement cost bound X")->required();
  reduce->add_option("--out", reduce_out, "Demand file (stdout if omitted)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Synthetic workload with temporal locality");
  gen->add_option("--n", gen_args.n, "Vertex count")->required();
  gen->add_option("--alpha", gen_args.alpha, "Repeat probability in [0, 1)")->required();
  gen->add_option("--requests", gen_args.requests, "Request count")->required();
  gen->add_option("--seed", gen_args.seed, "Seed");
  gen->add_option("--pool", gen_args.pool, "Pair pool file (default: all pairs)");
  gen->add_option("--out", gen_args.out, "Demand file (stdout if omitted)");

  std::string eval_input, eval_format = "edgelist", eval_tree;
  auto* eval = app.add_subcommand("eval", "Cost of a tree file on a demand file");
  eval->add_option("--input", eval_input, "Demand file")->required();
  eval->add_option("--format", eval_format, "Demand format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));
  eval->add_option("--tree", eval_tree, "Tree file")->required();

  try {
    app.parse(argc, argv);
    if (optimize->parsed() && !opt.budget_s && !opt.budget_q)
      throw CLI::ValidationError("optimize", "one of --budget-s or --budget-q is required");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (optimize->parsed()) {
      try {
        AlgorithmSpec::parse(opt.algo);
      } catch (const Error& e) {
        std::cerr << e.what() << '\n' << optimize->help();
        return 2;
      }
      return cmd_optimize(opt);
    }
    if (summarize_cmd->parsed()) return cmd_summarize(summary_files, verify_input, verify_format);
    if (compare->parsed()) return cmd_compare(cmp_a, cmp_b, alternative);
    if (reduce->parsed()) return cmd_reduce(ola_input, bound, reduce_out);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (eval->parsed()) return cmd_eval(eval_input, eval_format, eval_tree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
