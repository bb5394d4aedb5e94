#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgbs/embedding.hpp"

namespace tgbs {

/// Erdos-Renyi edge probability ln(n) / n used by the timing studies.
double connectivity_threshold_probability(std::size_t n);

struct DecomposeBenchRow {
  std::size_t size = 0;
  std::size_t instances = 0;
  double decompose_mean = 0.0;
  double decompose_std = 0.0;
  double sampling_mean = 0.0;
  double sampling_std = 0.0;
  /// Empty when every instance succeeded.
  std::string error;
};

struct DecomposeBenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t instances = 100;
  std::size_t realizations = 20;
  double mean_photon = kDefaultMeanPhoton;
  double gamma = kDefaultThreshold;
  std::uint64_t seed = 0;
};

/// Times the Takagi decomposition and the sampling stages separately on
/// Erdos-Renyi graphs. One warm-up instance per size is discarded.
std::vector<DecomposeBenchRow> decompose_bench(const DecomposeBenchOptions& options);

struct SeedDensityRow {
  std::size_t size = 0;
  std::size_t instances = 0;
  double gbs_mean_density = 0.0;
  double random_mean_density = 0.0;
  double mean_seed_size = 0.0;
  /// Seeds with fewer than two nodes have no density and are not averaged.
  std::size_t gbs_seeds_used = 0;
  std::size_t random_seeds_used = 0;
  std::string error;
};

struct SeedDensityOptions {
  std::vector<std::size_t> sizes;
  std::size_t instances = 100;
  std::size_t samples = 20;
  double mean_photon = kDefaultMeanPhoton;
  double gamma = kDefaultThreshold;
  std::uint64_t seed = 0;
};

/// Mean density of sampled subgraphs versus a baseline that includes every
/// node independently with probability 1 / j, j being the mean sampled size.
std::vector<SeedDensityRow> seed_density(const SeedDensityOptions& options);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

inline constexpr std::string_view kDecomposeBenchSchema = "tgbs.decompose-bench.v1";
inline constexpr std::string_view kSeedDensitySchema = "tgbs.seed-density.v1";

nlohmann::json to_json(const DecomposeBenchOptions& options);
nlohmann::json to_json(const SeedDensityOptions& options);
void write_decompose_bench_csv(std::ostream& out, const DecomposeBenchOptions& options,
                               const std::vector<DecomposeBenchRow>& rows);
void write_seed_density_csv(std::ostream& out, const SeedDensityOptions& options,
                            const std::vector<SeedDensityRow>& rows);

}  // namespace tgbs
