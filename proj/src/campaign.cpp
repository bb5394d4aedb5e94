#include "tgbs/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "tgbs/csv.hpp"
#include "tgbs/error.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::DensestK: return "densest-k";
    case ProblemKind::MaxClique: return "max-clique";
    case ProblemKind::MaxWeightedClique: return "max-weighted-clique";
  }
  return "unknown";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  for (auto kind : {ProblemKind::DensestK, ProblemKind::MaxClique, ProblemKind::MaxWeightedClique})
    if (name == to_string(kind)) return kind;
  fail(ErrorKind::InvalidParameter, "unknown problem '" + std::string(name) + "'");
}

void validate(const ExperimentConfig& c) {
  require(c.seed.has_value(), "a master seed is mandatory");
  require(!c.sizes.empty(), "at least one graph size is required");
  require(!c.strategies.empty(), "at least one seed strategy is required");
  require(c.instances >= 1, "instances must be >= 1");
  require(c.restarts >= 1, "restarts must be >= 1");
  require(c.cycles >= 1, "cycles must be >= 1");
  require(c.mean_photon > 0.0, "mean photon number must be positive");
  require(c.gamma >= 0.0, "gamma must be >= 0");
  require(c.alpha >= 0.0, "alpha must be >= 0");
  if (c.k) require(*c.k >= 1, "k must be >= 1");
}

nlohmann::json to_json(const ExperimentConfig& c) {
  std::vector<std::string> strategies;
  for (auto s : c.strategies) strategies.emplace_back(to_string(s));
  nlohmann::json j = {
      {"problem", to_string(c.problem)},
      {"sizes", c.sizes},
      {"instances", c.instances},
      {"strategies", strategies},
      {"restarts", c.restarts},
      {"mean_photon", c.mean_photon},
      {"gamma", c.gamma},
      {"alpha", c.alpha},
      {"cycles", c.cycles},
      {"p_dense", c.p_dense},
      {"p_sparse", c.p_sparse},
      {"dense_fraction", c.dense_fraction},
  };
  j["k"] = c.k ? nlohmann::json(*c.k) : nlohmann::json(nullptr);
  j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
  return j;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known = {"problem", "sizes",     "instances", "strategies", "restarts",
                                              "mean_photon", "gamma", "alpha",     "cycles",     "p_dense",
                                              "p_sparse", "dense_fraction", "k",   "seed"};
  if (!j.is_object()) fail(ErrorKind::Format, "experiment config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) fail(ErrorKind::Format, "unknown config key '" + key + "'");
  try {
    ExperimentConfig c;
    if (j.contains("problem")) c.problem = problem_kind_from_string(j["problem"].get<std::string>());
    if (j.contains("sizes")) c.sizes = j["sizes"].get<std::vector<std::size_t>>();
    if (j.contains("instances")) c.instances = j["instances"].get<std::size_t>();
    if (j.contains("strategies")) {
      c.strategies.clear();
      for (const auto& s : j["strategies"]) c.strategies.push_back(seed_kind_from_string(s.get<std::string>()));
    }
    if (j.contains("restarts")) c.restarts = j["restarts"].get<std::size_t>();
    if (j.contains("mean_photon")) c.mean_photon = j["mean_photon"].get<double>();
    if (j.contains("gamma")) c.gamma = j["gamma"].get<double>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("cycles")) c.cycles = j["cycles"].get<std::size_t>();
    if (j.contains("p_dense")) c.p_dense = j["p_dense"].get<double>();
    if (j.contains("p_sparse")) c.p_sparse = j["p_sparse"].get<double>();
    if (j.contains("dense_fraction")) c.dense_fraction = j["dense_fraction"].get<double>();
    if (j.contains("k") && !j["k"].is_null()) c.k = j["k"].get<std::size_t>();
    if (j.contains("seed") && !j["seed"].is_null()) c.seed = j["seed"].get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Format, std::string("experiment config: ") + e.what());
  }
}

namespace {

enum Stream : std::uint64_t { kGraphStream = 0, kWeightStream = 1, kSampleStream = 2, kSeedStream = 3, kSearchStream = 4 };

std::uint64_t strategy_key(SeedKind kind) { return static_cast<std::uint64_t>(kind); }

}  // namespace

Graph campaign_graph(const ExperimentConfig& c, std::size_t size, std::size_t instance) {
  const std::uint64_t master = c.seed.value();
  auto planted = planted_graph(size, c.p_dense, c.p_sparse, c.dense_fraction,
                               derive_seed({master, size, instance, kGraphStream}));
  if (c.problem == ProblemKind::MaxWeightedClique)
    return assign_uniform_weights(planted.graph, derive_seed({master, size, instance, kWeightStream}));
  return std::move(planted.graph);
}

double recompute_score(ProblemKind problem, const Graph& g, const NodeSubset& subset) {
  switch (problem) {
    case ProblemKind::DensestK: return subset.size() >= 2 ? density(g, subset) : 0.0;
    case ProblemKind::MaxClique: return static_cast<double>(subset.size());
    case ProblemKind::MaxWeightedClique: return weight_sum(g, subset);
  }
  return 0.0;
}

std::vector<CampaignRecord> run_campaign(const ExperimentConfig& config) {
  validate(config);
  const std::uint64_t master = *config.seed;
  using Clock = std::chrono::steady_clock;
  std::vector<CampaignRecord> records;

  const bool needs_samples = std::any_of(config.strategies.begin(), config.strategies.end(), [](SeedKind k) {
    return k == SeedKind::GbsSample || k == SeedKind::RandomJNode;
  });

  for (std::size_t size : config.sizes) {
    for (std::size_t instance = 0; instance < config.instances; ++instance) {
      auto failed = [&](SeedKind strategy, std::size_t restart, const std::string& what) {
        CampaignRecord r;
        r.size = size;
        r.instance = instance;
        r.strategy = strategy;
        r.restart = restart;
        r.error = what;
        records.push_back(std::move(r));
      };

      std::optional<Graph> graph;
      std::size_t k = 0;
      try {
        graph = campaign_graph(config, size, instance);
        const auto planted_size = static_cast<std::size_t>(std::llround(config.dense_fraction * static_cast<double>(size)));
        k = config.k.value_or(planted_size);
        require(k <= size, "k exceeds the graph size");
      } catch (const Error& e) {
        for (auto s : config.strategies) failed(s, 0, e.what());
        continue;
      }
      const Graph& g = *graph;

      std::optional<EmbeddedProblem> problem;
      std::optional<SampleBatch> batch;
      std::string sampling_error;
      if (needs_samples) {
        try {
          const Eigen::MatrixXd encoded =
              config.problem == ProblemKind::MaxWeightedClique ? weighted_encode(g, config.alpha) : g.adjacency();
          problem = embed(encoded, config.mean_photon, config.gamma);
          batch = sample_graph(*problem, config.restarts, derive_seed({master, size, instance, kSampleStream}));
        } catch (const Error& e) {
          sampling_error = e.what();
        }
      }
      double sampling_seconds = 0.0;
      if (batch)
        sampling_seconds = batch->timings["generate"] + batch->timings["propagate"] + batch->timings["threshold"];

      for (SeedKind strategy : config.strategies) {
        const bool uses_batch = strategy == SeedKind::GbsSample || strategy == SeedKind::RandomJNode;
        if (uses_batch && !batch) {
          failed(strategy, 0, sampling_error);
          continue;
        }
        std::optional<SampleCursor> cursor;
        if (batch) cursor.emplace(*batch);
        const std::size_t runs = strategy == SeedKind::GreedyPeeling ? 1 : config.restarts;
        std::size_t produced = 0;
        for (std::size_t restart = 0; restart < runs; ++restart) {
          const auto key = strategy_key(strategy);
          try {
            const auto seed_start = Clock::now();
            NodeSubset seed = make_seed(g, strategy, cursor ? &*cursor : nullptr,
                                        derive_seed({master, size, instance, kSeedStream, key, restart}));
            double seed_seconds = std::chrono::duration<double>(Clock::now() - seed_start).count();
            if (strategy == SeedKind::GbsSample) seed_seconds += sampling_seconds / static_cast<double>(config.restarts);

            const auto search_seed = derive_seed({master, size, instance, kSearchStream, key, restart});
            SearchResult result;
            switch (config.problem) {
              case ProblemKind::DensestK: result = densest_k_search(g, seed, k); break;
              case ProblemKind::MaxClique: result = max_clique_search(g, seed, config.cycles, search_seed); break;
              case ProblemKind::MaxWeightedClique:
                result = max_weighted_clique_search(g, seed, config.cycles, search_seed);
                break;
            }
            result.seed_seconds = seed_seconds;
            result.decompose_seconds = strategy == SeedKind::GbsSample ? problem->decompose_seconds : 0.0;

            CampaignRecord r;
            r.size = size;
            r.instance = instance;
            r.strategy = strategy;
            // GBS rows are indexed by the realization they consumed, so skipped
            // empty rows still count as samples drawn.
            r.restart = strategy == SeedKind::GbsSample ? cursor->consumed() - 1 : restart;
            r.result = std::move(result);
            r.sampling_seconds = uses_batch ? sampling_seconds : 0.0;
            records.push_back(std::move(r));
            ++produced;
          } catch (const Error& e) {
            // Empty click rows are skipped; the batch simply runs out.
            if (e.kind() == ErrorKind::EmptySeed && produced > 0) break;
            failed(strategy, restart, e.what());
            if (e.kind() == ErrorKind::EmptySeed) break;
          }
        }
      }
    }
  }
  return records;
}

std::vector<TimingSummary> summarize(const std::vector<CampaignRecord>& records) {
  struct InstanceTotals {
    double best = 0.0;
    double without = 0.0;
    double decompose = 0.0;
    bool any = false;
  };
  struct Group {
    std::map<std::size_t, InstanceTotals> per_instance;
    double search_sum = 0.0;
    std::size_t runs = 0;
  };
  std::map<std::pair<std::size_t, SeedKind>, Group> groups;
  for (const auto& r : records) {
    if (!r.error.empty()) continue;
    auto& group = groups[{r.size, r.strategy}];
    auto& t = group.per_instance[r.instance];
    t.best = t.any ? std::max(t.best, r.result.score) : r.result.score;
    t.any = true;
    t.without += r.result.seed_seconds + r.result.search_seconds;
    t.decompose = r.result.decompose_seconds;
    group.search_sum += r.result.search_seconds;
    ++group.runs;
  }
  std::vector<TimingSummary> out;
  for (const auto& [key, group] : groups) {
    TimingSummary s;
    s.size = key.first;
    s.strategy = key.second;
    s.instances = group.per_instance.size();
    for (const auto& [instance, t] : group.per_instance) {
      s.mean_best_score += t.best;
      s.mean_total_without_decompose += t.without;
      s.mean_total_with_decompose += t.without + t.decompose;
    }
    const auto n = static_cast<double>(s.instances);
    s.mean_best_score /= n;
    s.mean_total_without_decompose /= n;
    s.mean_total_with_decompose /= n;
    s.mean_search_seconds = group.search_sum / static_cast<double>(group.runs);
    out.push_back(s);
  }
  return out;
}

std::size_t samples_to_reach(std::span<const double> scores, double fraction) {
  if (scores.empty()) return 0;
  const double goal = fraction * *std::max_element(scores.begin(), scores.end());
  double running = scores.front();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    running = std::max(running, scores[i]);
    if (running >= goal) return i + 1;
  }
  return scores.size();
}

std::size_t samples_to_reach(std::span<const CampaignRecord> runs, double fraction) {
  double best = 0.0;
  bool any = false;
  for (const auto& r : runs)
    if (r.error.empty()) {
      best = any ? std::max(best, r.result.score) : r.result.score;
      any = true;
    }
  if (!any) return 0;
  const double goal = fraction * best;
  for (const auto& r : runs)
    if (r.error.empty() && r.result.score >= goal) return r.restart + 1;
  return 0;
}

void write_campaign_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<CampaignRecord>& records) {
  write_csv_preamble(out, kSolveSchema, to_json(config));
  out << "problem,size,instance,strategy,restart,score,seed_size,subset_size,iterations,pruned,"
         "sampling_seconds,seed_seconds,search_seconds,decompose_seconds,total_seconds,error\n";
  for (const auto& r : records) {
    const auto& res = r.result;
    out << to_string(config.problem) << ',' << r.size << ',' << r.instance << ',' << to_string(r.strategy) << ','
        << r.restart << ',' << format_real(res.score) << ',' << res.seed.size() << ',' << res.subset.size() << ','
        << res.iterations << ',' << (res.pruned ? 1 : 0) << ',' << format_real(r.sampling_seconds) << ','
        << format_real(res.seed_seconds) << ',' << format_real(res.search_seconds) << ','
        << format_real(res.decompose_seconds) << ','
        << format_real(res.seed_seconds + res.search_seconds + res.decompose_seconds) << ',' << csv_field(r.error)
        << '\n';
  }
}

}  // namespace tgbs
