#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgbs/bench.hpp"
#include "tgbs/campaign.hpp"
#include "tgbs/classify.hpp"
#include "tgbs/dataset.hpp"
#include "tgbs/embedding.hpp"
#include "tgbs/error.hpp"
#include "tgbs/graph.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;

/// Flag value, else $TGBS_OUTPUT_DIR, else ./results.
fs::path output_dir(const std::string& flag) {
  fs::path dir = "results";
  if (const char* env = std::getenv("TGBS_OUTPUT_DIR"); env && *env) dir = env;
  if (!flag.empty()) dir = flag;
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) tgbs::fail(tgbs::ErrorKind::Io, "cannot write " + path.string());
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) tgbs::fail(tgbs::ErrorKind::Io, "cannot read " + path.string());
  return in;
}

json read_json(const fs::path& path) {
  auto in = open_input(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    tgbs::fail(tgbs::ErrorKind::Format, path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& j) { open_output(path) << j.dump(2) << '\n'; }

struct GenerateArgs {
  std::string kind = "er";
  std::size_t nodes = 64;
  double p = -1.0;
  double p_dense = 0.75;
  double p_sparse = 0.1;
  double dense_fraction = 0.1;
  bool weights = false;
  std::uint64_t seed = 0;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  std::optional<tgbs::Graph> generated;
  json info = {{"kind", a.kind}, {"nodes", a.nodes}, {"seed", a.seed}};
  if (a.kind == "er") {
    const double p = a.p >= 0.0 ? a.p : tgbs::connectivity_threshold_probability(a.nodes);
    info["p"] = p;
    generated = tgbs::erdos_renyi(a.nodes, p, a.seed);
  } else if (a.kind == "planted") {
    auto planted = tgbs::planted_graph(a.nodes, a.p_dense, a.p_sparse, a.dense_fraction, a.seed);
    info["planted"] = std::vector<tgbs::NodeId>(planted.planted.begin(), planted.planted.end());
    generated = std::move(planted.graph);
  } else {
    tgbs::fail(tgbs::ErrorKind::InvalidParameter, "unknown graph kind '" + a.kind + "'");
  }
  tgbs::Graph g = std::move(*generated);
  if (a.weights) g = tgbs::assign_uniform_weights(g, tgbs::derive_seed({a.seed, 1}));
  if (a.output.empty() || a.output == "-") {
    tgbs::write_edge_list(std::cout, g);
  } else {
    auto out = open_output(a.output);
    tgbs::write_edge_list(out, g);
    write_json(a.output + ".json", info);
  }
  std::cerr << "nodes " << g.node_count() << ", edges " << g.edge_count() << '\n';
  return 0;
}

struct EmbedArgs {
  std::string graph;
  double mean_photon = tgbs::kDefaultMeanPhoton;
  double gamma = tgbs::kDefaultThreshold;
  std::optional<double> alpha;
  std::string output;
};

int run_embed(const EmbedArgs& a) {
  auto in = open_input(a.graph);
  const tgbs::Graph g = tgbs::read_edge_list(in);
  const Eigen::MatrixXd encoded = a.alpha ? tgbs::weighted_encode(g, *a.alpha) : g.adjacency();
  const auto problem = tgbs::embed(encoded, a.mean_photon, a.gamma);
  write_json(a.output, tgbs::to_json(problem));
  std::cerr << "modes " << problem.modes() << ", scale " << problem.scale << ", decompose "
            << problem.decompose_seconds << " s\n";
  return 0;
}

struct SampleArgs {
  std::string problem;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::string output;
};

int run_sample(const SampleArgs& a) {
  const auto problem = tgbs::embedded_problem_from_json(read_json(a.problem));
  const auto batch = tgbs::sample_graph(problem, a.samples, a.seed);
  auto out = open_output(a.output);
  tgbs::write_samples(out, batch);
  write_json(a.output + ".json",
             tgbs::samples_sidecar(batch, {{"problem", a.problem}, {"samples", a.samples}, {"seed", a.seed}}));
  std::cerr << "mean clicks " << batch.mean_click_count() << '\n';
  return 0;
}

int run_decompose_bench(const tgbs::DecomposeBenchOptions& options, const std::string& out_flag) {
  const auto rows = tgbs::decompose_bench(options);
  const fs::path path = output_dir(out_flag) / "decompose_bench.csv";
  auto out = open_output(path);
  tgbs::write_decompose_bench_csv(out, options, rows);
  std::size_t failed = 0;
  for (const auto& r : rows) {
    std::cout << std::setw(6) << r.size << "  decompose " << std::scientific << std::setprecision(3)
              << r.decompose_mean << " s  sampling " << r.sampling_mean << " s" << std::defaultfloat;
    if (!r.error.empty()) {
      std::cout << "  error: " << r.error;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << "wrote " << path.string() << '\n';
  return failed == rows.size() ? 1 : 0;
}

int run_seed_density(const tgbs::SeedDensityOptions& options, const std::string& out_flag) {
  const auto rows = tgbs::seed_density(options);
  const fs::path path = output_dir(out_flag) / "seed_density.csv";
  auto out = open_output(path);
  tgbs::write_seed_density_csv(out, options, rows);
  std::size_t failed = 0;
  for (const auto& r : rows) {
    std::cout << std::setw(6) << r.size << "  gbs " << std::fixed << std::setprecision(4) << r.gbs_mean_density
              << "  random " << r.random_mean_density << "  mean seed " << r.mean_seed_size << std::defaultfloat;
    if (!r.error.empty()) {
      std::cout << "  error: " << r.error;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << "wrote " << path.string() << '\n';
  return failed == rows.size() ? 1 : 0;
}

int run_solve(const tgbs::ExperimentConfig& config, const std::string& out_flag) {
  const auto records = tgbs::run_campaign(config);
  const fs::path path = output_dir(out_flag) / ("solve_" + std::string(tgbs::to_string(config.problem)) + ".csv");
  auto out = open_output(path);
  tgbs::write_campaign_csv(out, config, records);

  std::size_t failures = 0;
  for (const auto& r : records)
    if (!r.error.empty()) {
      ++failures;
      std::cerr << "size " << r.size << " instance " << r.instance << " " << tgbs::to_string(r.strategy) << ": "
                << r.error << '\n';
    }
  std::cout << std::left << std::setw(8) << "size" << std::setw(16) << "strategy" << std::setw(12) << "best"
            << std::setw(14) << "search_s" << std::setw(14) << "total_s" << "total+decomp_s\n";
  for (const auto& s : tgbs::summarize(records))
    std::cout << std::setw(8) << s.size << std::setw(16) << tgbs::to_string(s.strategy) << std::setw(12)
              << s.mean_best_score << std::setw(14) << s.mean_search_seconds << std::setw(14)
              << s.mean_total_without_decompose << s.mean_total_with_decompose << '\n';
  std::cout << "wrote " << path.string() << '\n';
  return !records.empty() && failures == records.size() ? 1 : 0;
}

struct DatasetArgs {
  std::string dir;
  std::string name;
  std::size_t min_nodes = 0;
  std::size_t max_nodes = SIZE_MAX;
};

tgbs::LabeledDataset load_dataset(const DatasetArgs& a) {
  auto d = tgbs::parse_tudataset(a.dir, a.name);
  if (a.min_nodes > 0 || a.max_nodes != SIZE_MAX) d = tgbs::filter_by_size(d, a.min_nodes, a.max_nodes);
  return d;
}

int run_parse_dataset(const DatasetArgs& a) {
  const auto d = load_dataset(a);
  std::cout << "dataset: " << d.name << '\n'
            << "graphs: " << d.size() << '\n'
            << "classes: " << d.class_count() << '\n'
            << "max nodes: " << d.max_node_count() << '\n'
            << "dropped self-loops: " << d.dropped_self_loops << '\n';
  return 0;
}

int run_featurize(const DatasetArgs& a, const tgbs::FeaturizeOptions& options, std::optional<double> bandwidth,
                  const std::string& out_flag) {
  const auto d = load_dataset(a);
  const auto f = tgbs::featurize_dataset(d, options);
  for (const auto& s : f.skipped) std::cerr << "graph " << s.index << " skipped: " << s.reason << '\n';
  if (f.features.empty()) {
    std::cerr << "no graph could be featurized\n";
    return 1;
  }
  const auto k = tgbs::rbf_gram(f.features, bandwidth.value_or(tgbs::default_bandwidth(f.features)));

  json provenance = {{"dataset", d.name},
                     {"dir", a.dir},
                     {"min_nodes", a.min_nodes},
                     {"max_nodes", a.max_nodes == SIZE_MAX ? json(nullptr) : json(a.max_nodes)},
                     {"pad_to", f.pad_to},
                     {"skipped", f.skipped.size()}};
  const json sidecar = tgbs::gram_sidecar(k, options, d.name);
  provenance["options"] = sidecar;

  const fs::path dir = output_dir(out_flag);
  const std::string stem = d.name + "_" + std::string(tgbs::to_string(options.binning));
  auto features = open_output(dir / (stem + "_features.csv"));
  tgbs::write_features_csv(features, f, provenance);
  auto gram = open_output(dir / (stem + "_gram.csv"));
  tgbs::write_gram_csv(gram, k, f, provenance);
  json full = sidecar;
  full["provenance"] = provenance;
  full["labels"] = f.labels;
  full["graph_ids"] = f.graph_ids;
  write_json(dir / (stem + "_gram.json"), full);

  std::cout << "featurized " << f.features.size() << " of " << d.size() << " graphs, bandwidth " << k.bandwidth
            << '\n';
  if (k.values.rows() <= 4) std::cout << "gram:\n" << k.values << '\n';
  std::cout << "wrote " << (dir / stem).string() << "_{features.csv,gram.csv,gram.json}\n";
  return 0;
}

void add_common_sampling(CLI::App* cmd, double& mean_photon, double& gamma) {
  cmd->add_option("--mean-photon", mean_photon, "Target mean photon number")->check(CLI::PositiveNumber);
  cmd->add_option("--gamma", gamma, "Detector threshold")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold Gaussian boson sampling benchmarks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a random graph as an edge list");
  generate->add_option("--kind", gen.kind, "er or planted")->check(CLI::IsMember({"er", "planted"}));
  generate->add_option("--nodes", gen.nodes, "Node count")->required();
  generate->add_option("-p,--p", gen.p, "Edge probability (default ln(n)/n)");
  generate->add_option("--p-dense", gen.p_dense);
  generate->add_option("--p-sparse", gen.p_sparse);
  generate->add_option("--dense-fraction", gen.dense_fraction);
  generate->add_flag("--weights", gen.weights, "Attach uniform [0,1) node weights");
  generate->add_option("--seed", gen.seed)->required();
  generate->add_option("-o,--output", gen.output, "Edge-list path (stdout if omitted)");

  EmbedArgs emb;
  auto* embed = app.add_subcommand("embed", "Decompose and rescale a graph into a sampling problem");
  embed->add_option("--graph", emb.graph, "Edge-list file")->required();
  add_common_sampling(embed, emb.mean_photon, emb.gamma);
  embed->add_option("--alpha", emb.alpha, "Use the weighted encoding with this alpha");
  embed->add_option("-o,--output", emb.output, "JSON output path")->required();

  SampleArgs smp;
  auto* sample = app.add_subcommand("sample", "Draw threshold samples from an embedded problem");
  sample->add_option("--problem", smp.problem, "JSON written by embed")->required();
  sample->add_option("-n,--samples", smp.samples)->check(CLI::PositiveNumber);
  sample->add_option("--seed", smp.seed)->required();
  sample->add_option("-o,--output", smp.output, "Click-pattern output path")->required();

  std::string out_flag;
  std::string sizes_help = "Comma-separated graph sizes";

  tgbs::DecomposeBenchOptions bench;
  auto* decompose_bench = app.add_subcommand("decompose-bench", "Time decomposition against sampling");
  decompose_bench->add_option("--sizes", bench.sizes, sizes_help)->delimiter(',')->required();
  decompose_bench->add_option("--instances", bench.instances);
  decompose_bench->add_option("--realizations", bench.realizations);
  add_common_sampling(decompose_bench, bench.mean_photon, bench.gamma);
  decompose_bench->add_option("--seed", bench.seed)->required();
  decompose_bench->add_option("--output-dir", out_flag);

  tgbs::SeedDensityOptions density;
  auto* seed_density = app.add_subcommand("seed-density", "Compare sampled seed density with a random baseline");
  seed_density->add_option("--sizes", density.sizes, sizes_help)->delimiter(',')->required();
  seed_density->add_option("--instances", density.instances);
  seed_density->add_option("--samples", density.samples);
  add_common_sampling(seed_density, density.mean_photon, density.gamma);
  seed_density->add_option("--seed", density.seed)->required();
  seed_density->add_option("--output-dir", out_flag);

  tgbs::ExperimentConfig cfg;
  std::string config_path;
  std::string problem_name;
  std::vector<std::string> strategy_names;
  std::uint64_t solve_seed = 0;
  std::size_t solve_k = 0;
  auto* solve = app.add_subcommand("solve", "Run a seeded solver campaign on planted graphs");
  solve->add_option("--config", config_path, "JSON experiment config; flags override its fields");
  auto* o_problem = solve->add_option("--problem", problem_name, "densest-k, max-clique or max-weighted-clique");
  auto* o_sizes = solve->add_option("--sizes", cfg.sizes, sizes_help)->delimiter(',');
  auto* o_instances = solve->add_option("--instances", cfg.instances);
  auto* o_strategies =
      solve->add_option("--strategies", strategy_names, "gbs, random-single, random-j, greedy")->delimiter(',');
  auto* o_restarts = solve->add_option("--restarts", cfg.restarts);
  auto* o_mean_photon = solve->add_option("--mean-photon", cfg.mean_photon);
  auto* o_gamma = solve->add_option("--gamma", cfg.gamma);
  auto* o_alpha = solve->add_option("--alpha", cfg.alpha);
  auto* o_cycles = solve->add_option("--cycles", cfg.cycles);
  auto* o_p_dense = solve->add_option("--p-dense", cfg.p_dense);
  auto* o_p_sparse = solve->add_option("--p-sparse", cfg.p_sparse);
  auto* o_fraction = solve->add_option("--dense-fraction", cfg.dense_fraction);
  auto* o_k = solve->add_option("-k", solve_k, "Densest-k target (default: planted block size)");
  auto* o_seed = solve->add_option("--seed", solve_seed);
  solve->add_option("--output-dir", out_flag);

  DatasetArgs ds;
  auto add_dataset = [&ds](CLI::App* cmd) {
    cmd->add_option("--dir", ds.dir, "TUDataset directory")->required();
    cmd->add_option("--name", ds.name, "Dataset prefix, e.g. MUTAG")->required();
    cmd->add_option("--min-nodes", ds.min_nodes);
    cmd->add_option("--max-nodes", ds.max_nodes);
  };
  auto* parse_dataset = app.add_subcommand("parse-dataset", "Parse and summarize a TUDataset directory");
  add_dataset(parse_dataset);

  tgbs::FeaturizeOptions feat;
  std::string binning_name = "count";
  bool unsorted = false;
  std::optional<double> bandwidth;
  auto* featurize = app.add_subcommand("featurize", "Export sample features and an RBF Gram matrix");
  add_dataset(featurize);
  featurize->add_option("--binning", binning_name)->check(CLI::IsMember({"count", "detector"}));
  featurize->add_option("--samples", feat.n_samples)->check(CLI::PositiveNumber);
  add_common_sampling(featurize, feat.mean_photon, feat.gamma);
  featurize->add_flag("--cumulative", feat.cumulative);
  featurize->add_flag("--unsorted-detectors", unsorted);
  featurize->add_option("--bandwidth", bandwidth)->check(CLI::PositiveNumber);
  featurize->add_option("--seed", feat.seed)->required();
  featurize->add_option("--output-dir", out_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*embed) return run_embed(emb);
    if (*sample) return run_sample(smp);
    if (*decompose_bench) return run_decompose_bench(bench, out_flag);
    if (*seed_density) return run_seed_density(density, out_flag);
    if (*parse_dataset) return run_parse_dataset(ds);
    if (*featurize) {
      feat.binning = tgbs::binning_from_string(binning_name);
      feat.sort_detectors = !unsorted;
      return run_featurize(ds, feat, bandwidth, out_flag);
    }
    if (*solve) {
      tgbs::ExperimentConfig resolved = config_path.empty()
                                            ? tgbs::ExperimentConfig{}
                                            : tgbs::experiment_config_from_json(read_json(config_path));
      if (o_problem->count()) resolved.problem = tgbs::problem_kind_from_string(problem_name);
      if (o_sizes->count()) resolved.sizes = cfg.sizes;
      if (o_instances->count()) resolved.instances = cfg.instances;
      if (o_strategies->count()) {
        resolved.strategies.clear();
        for (const auto& s : strategy_names) resolved.strategies.push_back(tgbs::seed_kind_from_string(s));
      }
      if (o_restarts->count()) resolved.restarts = cfg.restarts;
      if (o_mean_photon->count()) resolved.mean_photon = cfg.mean_photon;
      if (o_gamma->count()) resolved.gamma = cfg.gamma;
      if (o_alpha->count()) resolved.alpha = cfg.alpha;
      if (o_cycles->count()) resolved.cycles = cfg.cycles;
      if (o_p_dense->count()) resolved.p_dense = cfg.p_dense;
      if (o_p_sparse->count()) resolved.p_sparse = cfg.p_sparse;
      if (o_fraction->count()) resolved.dense_fraction = cfg.dense_fraction;
      if (o_k->count()) resolved.k = solve_k;
      if (o_seed->count()) resolved.seed = solve_seed;
      tgbs::validate(resolved);
      return run_solve(resolved, out_flag);
    }
  } catch (const tgbs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == tgbs::ErrorKind::InvalidParameter ? kUsageError : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
