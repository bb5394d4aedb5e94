#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgbs/embedding.hpp"
#include "tgbs/solvers.hpp"

namespace tgbs {

enum class ProblemKind { DensestK, MaxClique, MaxWeightedClique };

std::string_view to_string(ProblemKind kind) noexcept;
ProblemKind problem_kind_from_string(std::string_view name);

/// Declarative description of a solver campaign over planted graphs. Every
/// RNG stream is keyed by (seed, size, instance, strategy, restart).
struct ExperimentConfig {
  ProblemKind problem = ProblemKind::DensestK;
  std::vector<std::size_t> sizes;
  std::size_t instances = 100;
  std::vector<SeedKind> strategies{SeedKind::GbsSample, SeedKind::RandomSingleNode, SeedKind::RandomJNode,
                                   SeedKind::GreedyPeeling};
  /// Realizations drawn per instance; also the restart count of the random
  /// strategies. Greedy peeling is deterministic and runs once.
  std::size_t restarts = 20;
  double mean_photon = kDefaultMeanPhoton;
  double gamma = kDefaultThreshold;
  double alpha = kDefaultWeightAlpha;
  std::size_t cycles = kDefaultCliqueCycles;
  double p_dense = 0.75;
  double p_sparse = 0.1;
  double dense_fraction = 0.1;
  /// Densest-k target size; defaults to the planted block size.
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
};

/// Throws invalid-parameter when the config cannot run (missing seed, no sizes, ...).
void validate(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

struct CampaignRecord {
  std::size_t size = 0;
  std::size_t instance = 0;
  SeedKind strategy = SeedKind::GbsSample;
  /// Run index; for GBS rows, the index of the realization consumed.
  std::size_t restart = 0;
  SearchResult result;
  /// Set when this run failed; result is then empty.
  std::string error;
  /// Sampling wall-clock for the instance batch (GBS and random-J rows).
  double sampling_seconds = 0.0;
};

std::vector<CampaignRecord> run_campaign(const ExperimentConfig& config);

/// Recomputes the score of a record from its graph and subset.
double recompute_score(ProblemKind problem, const Graph& g, const NodeSubset& subset);

/// The graph instance run_campaign builds for (size, instance).
Graph campaign_graph(const ExperimentConfig& config, std::size_t size, std::size_t instance);

/// Per-(size, strategy) mean over instances of the instance-level total time:
/// the sum of seed and search seconds over restarts, plus the decomposition
/// once for the GBS strategy.
struct TimingSummary {
  std::size_t size = 0;
  SeedKind strategy = SeedKind::GbsSample;
  double mean_best_score = 0.0;
  double mean_search_seconds = 0.0;
  double mean_total_without_decompose = 0.0;
  double mean_total_with_decompose = 0.0;
  std::size_t instances = 0;
};

std::vector<TimingSummary> summarize(const std::vector<CampaignRecord>& records);

/// 1-based count of runs, in order, until the running best first reaches
/// fraction * max(scores). Zero for an empty sequence.
std::size_t samples_to_reach(std::span<const double> scores, double fraction);

/// Samples drawn until the running best of one (size, instance, strategy)
/// group first reaches fraction * its final best, using each record's
/// restart index (the consumed realization for GBS rows). Runs must be in
/// campaign order. Zero when no run succeeded.
std::size_t samples_to_reach(std::span<const CampaignRecord> runs, double fraction);

inline constexpr std::string_view kSolveSchema = "tgbs.solve.v1";

/// CSV with a schema line and the resolved config as a comment header.
void write_campaign_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<CampaignRecord>& records);

}  // namespace tgbs
