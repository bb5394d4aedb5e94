#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tgbs/graph.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs {

enum class SeedKind { GbsSample, RandomSingleNode, RandomJNode, GreedyPeeling };

std::string_view to_string(SeedKind kind) noexcept;
SeedKind seed_kind_from_string(std::string_view name);

/// Walks a SampleBatch in realization order, skipping rows without clicks.
class SampleCursor {
 public:
  explicit SampleCursor(const SampleBatch& batch) : batch_(&batch) {}

  /// Next non-empty clicked subset, or nullopt once the batch is exhausted.
  std::optional<NodeSubset> next();
  std::size_t consumed() const noexcept { return next_row_; }
  const SampleBatch& batch() const noexcept { return *batch_; }

 private:
  const SampleBatch* batch_;
  std::size_t next_row_ = 0;
};

/// Rounded mean click count of a batch, at least 1.
std::size_t mean_seed_size(const SampleBatch& batch);

/// Builds the starting subgraph for one search run.
///   GbsSample        next non-empty realization of `samples`
///   RandomSingleNode one uniform node
///   RandomJNode      J distinct uniform nodes, J = mean_seed_size(samples)
///   GreedyPeeling    every node
NodeSubset make_seed(const Graph& g, SeedKind kind, SampleCursor* samples, std::uint64_t rng_seed);

struct SearchResult {
  NodeSubset subset;
  /// Density (densest-k), clique size (max clique) or weight sum (weighted).
  double score = 0.0;
  NodeSubset seed;
  std::size_t iterations = 0;
  double search_seconds = 0.0;
  double seed_seconds = 0.0;
  double decompose_seconds = 0.0;
  /// Densest-k only: the frontier emptied before reaching k nodes.
  bool pruned = false;
};

/// Grow by the outside node with the most edges into S, shrink by the member
/// with the fewest, until |S| = k. Ties go to the lowest index.
SearchResult densest_k_search(const Graph& g, const NodeSubset& seed, std::size_t k);

inline constexpr std::size_t kDefaultCliqueCycles = 50;
inline constexpr std::size_t kCliqueStallLimit = 10;

/// Shrink to a clique, then alternate grow and swap phases for up to `cycles`
/// rounds, stopping early after kCliqueStallLimit rounds without improvement.
SearchResult max_clique_search(const Graph& g, const NodeSubset& seed, std::size_t cycles, std::uint64_t rng_seed);

/// Same skeleton as max_clique_search with weight-aware selection: shrink by
/// (subgraph degree, weight), grow by weight, swap only if the weight does not
/// drop. Score is the member weight sum.
SearchResult max_weighted_clique_search(const Graph& g, const NodeSubset& seed, std::size_t cycles,
                                        std::uint64_t rng_seed);

}  // namespace tgbs
