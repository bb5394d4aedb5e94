#include "tgbs/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "tgbs/error.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

std::string_view to_string(SeedKind kind) noexcept {
  switch (kind) {
    case SeedKind::GbsSample: return "gbs";
    case SeedKind::RandomSingleNode: return "random-single";
    case SeedKind::RandomJNode: return "random-j";
    case SeedKind::GreedyPeeling: return "greedy";
  }
  return "unknown";
}

SeedKind seed_kind_from_string(std::string_view name) {
  for (auto kind : {SeedKind::GbsSample, SeedKind::RandomSingleNode, SeedKind::RandomJNode, SeedKind::GreedyPeeling})
    if (name == to_string(kind)) return kind;
  fail(ErrorKind::InvalidParameter, "unknown seed strategy '" + std::string(name) + "'");
}

std::optional<NodeSubset> SampleCursor::next() {
  while (next_row_ < batch_->realizations()) {
    const auto row = next_row_++;
    if (batch_->click_count(row) > 0) return batch_->clicked(row);
  }
  return std::nullopt;
}

std::size_t mean_seed_size(const SampleBatch& batch) {
  const auto j = static_cast<std::size_t>(std::llround(batch.mean_click_count()));
  return std::max<std::size_t>(j, 1);
}

NodeSubset make_seed(const Graph& g, SeedKind kind, SampleCursor* samples, std::uint64_t rng_seed) {
  const auto m = g.node_count();
  Rng rng(rng_seed);
  switch (kind) {
    case SeedKind::GbsSample: {
      require(samples != nullptr, "GBS seeding needs a sample batch");
      require(samples->batch().modes() == m, "sample batch does not match the graph");
      auto seed = samples->next();
      if (!seed) fail(ErrorKind::EmptySeed, "no non-empty realization left in the sample batch");
      return std::move(*seed);
    }
    case SeedKind::RandomSingleNode: {
      std::uniform_int_distribution<NodeId> pick(0, m - 1);
      return NodeSubset{pick(rng)};
    }
    case SeedKind::RandomJNode: {
      require(samples != nullptr, "random J-node seeding needs a sample batch to size J");
      const auto j = std::min(mean_seed_size(samples->batch()), m);
      std::vector<NodeId> all(m);
      std::iota(all.begin(), all.end(), NodeId{0});
      std::vector<NodeId> chosen;
      chosen.reserve(j);
      std::sample(all.begin(), all.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(j), rng);
      return NodeSubset(std::move(chosen));
    }
    case SeedKind::GreedyPeeling:
      return NodeSubset::range(m);
  }
  fail(ErrorKind::InvalidParameter, "unknown seed strategy");
}

namespace {

/// Current subgraph with per-node counts of neighbors inside it.
class WorkingSet {
 public:
  WorkingSet(const Graph& g, const NodeSubset& seed)
      : g_(g), in_(g.node_count(), 0), inside_degree_(g.node_count(), 0) {
    require(!seed.empty(), "seed must be non-empty");
    require(seed.members().back() < g.node_count(), "seed index out of range");
    for (NodeId v : seed) add(v);
  }

  void add(NodeId v) {
    in_[v] = 1;
    members_.insert(std::upper_bound(members_.begin(), members_.end(), v), v);
    for (NodeId u : g_.neighbors(v)) ++inside_degree_[u];
  }

  void remove(NodeId v) {
    in_[v] = 0;
    members_.erase(std::lower_bound(members_.begin(), members_.end(), v));
    for (NodeId u : g_.neighbors(v)) --inside_degree_[u];
  }

  bool contains(NodeId v) const { return in_[v] != 0; }
  std::size_t inside_degree(NodeId v) const { return inside_degree_[v]; }
  std::size_t size() const { return members_.size(); }
  const std::vector<NodeId>& members() const { return members_; }
  NodeSubset subset() const { return NodeSubset(members_); }

 private:
  const Graph& g_;
  std::vector<char> in_;
  std::vector<std::size_t> inside_degree_;
  std::vector<NodeId> members_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SearchResult densest_k_search(const Graph& g, const NodeSubset& seed, std::size_t k) {
  const auto m = g.node_count();
  require(k >= 1 && k <= m, "k must lie in [1, M]");
  const auto start = Clock::now();
  WorkingSet s(g, seed);
  SearchResult result;
  result.seed = seed;

  while (s.size() != k) {
    if (s.size() < k) {
      std::optional<NodeId> best;
      for (NodeId u = 0; u < m; ++u) {
        if (s.contains(u) || s.inside_degree(u) == 0) continue;
        if (!best || s.inside_degree(u) > s.inside_degree(*best)) best = u;
      }
      if (!best) {
        result.pruned = true;
        break;
      }
      s.add(*best);
    } else {
      NodeId worst = s.members().front();
      for (NodeId v : s.members())
        if (s.inside_degree(v) < s.inside_degree(worst)) worst = v;
      s.remove(worst);
    }
    ++result.iterations;
  }

  result.subset = s.subset();
  result.score = result.subset.size() >= 2 ? density(g, result.subset) : 0.0;
  result.search_seconds = seconds_since(start);
  return result;
}

namespace {

/// Selection rules that differ between the cardinality and weighted searches.
struct CliquePolicy {
  const Graph& g;
  const Eigen::VectorXd* weights;  // null for the unweighted search

  double weight(NodeId v) const { return weights ? (*weights)(static_cast<Eigen::Index>(v)) : 1.0; }

  /// True if a should be shrunk away before b.
  bool shrink_before(const WorkingSet& s, NodeId a, NodeId b) const {
    if (s.inside_degree(a) != s.inside_degree(b)) return s.inside_degree(a) < s.inside_degree(b);
    if (weights && weight(a) != weight(b)) return weight(a) < weight(b);
    return a < b;
  }

  /// True if a is preferred over b when growing or swapping in.
  bool grow_before(NodeId a, NodeId b) const {
    if (weights && weight(a) != weight(b)) return weight(a) > weight(b);
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  }

  bool accept_swap(NodeId out, NodeId in) const { return !weights || weight(in) >= weight(out); }

  double score(const WorkingSet& s) const {
    if (!weights) return static_cast<double>(s.size());
    double total = 0.0;
    for (NodeId v : s.members()) total += weight(v);
    return total;
  }
};

SearchResult clique_search(const CliquePolicy& policy, const NodeSubset& seed, std::size_t cycles,
                           std::uint64_t rng_seed) {
  require(cycles >= 1, "cycles must be >= 1");
  const Graph& g = policy.g;
  const auto m = g.node_count();
  const auto start = Clock::now();
  WorkingSet s(g, seed);
  Rng rng(rng_seed);
  SearchResult result;
  result.seed = seed;

  // Shrink until every member sees all the others.
  while (true) {
    NodeId worst = s.members().front();
    for (NodeId v : s.members())
      if (policy.shrink_before(s, v, worst)) worst = v;
    if (s.inside_degree(worst) + 1 == s.size()) break;
    s.remove(worst);
  }

  auto grow = [&] {
    while (true) {
      std::optional<NodeId> best;
      for (NodeId u = 0; u < m; ++u) {
        if (s.contains(u) || s.inside_degree(u) != s.size()) continue;
        if (!best || policy.grow_before(u, *best)) best = u;
      }
      if (!best) return;
      s.add(*best);
    }
  };

  grow();
  NodeSubset best = s.subset();
  double best_score = policy.score(s);
  std::size_t stall = 0;

  for (std::size_t cycle = 0; cycle < cycles; ++cycle) {
    // Outside nodes missing exactly one member are the only swap partners.
    bool any_partner = false;
    for (NodeId u = 0; u < m && !any_partner; ++u)
      any_partner = !s.contains(u) && s.inside_degree(u) + 1 == s.size();
    if (!any_partner) break;

    ++result.iterations;
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    const NodeId out = s.members()[pick(rng)];
    std::optional<NodeId> in;
    for (NodeId u = 0; u < m; ++u) {
      if (s.contains(u) || s.inside_degree(u) + 1 != s.size() || g.has_edge(u, out)) continue;
      if (!in || policy.grow_before(u, *in)) in = u;
    }
    if (in && policy.accept_swap(out, *in)) {
      s.remove(out);
      s.add(*in);
      grow();
    }

    const double score = policy.score(s);
    if (score > best_score) {
      best_score = score;
      best = s.subset();
      stall = 0;
    } else if (++stall >= kCliqueStallLimit) {
      break;
    }
  }

  result.subset = std::move(best);
  result.score = best_score;
  result.search_seconds = seconds_since(start);
  return result;
}

}  // namespace

SearchResult max_clique_search(const Graph& g, const NodeSubset& seed, std::size_t cycles, std::uint64_t rng_seed) {
  return clique_search(CliquePolicy{g, nullptr}, seed, cycles, rng_seed);
}

SearchResult max_weighted_clique_search(const Graph& g, const NodeSubset& seed, std::size_t cycles,
                                        std::uint64_t rng_seed) {
  return clique_search(CliquePolicy{g, &g.node_weights()}, seed, cycles, rng_seed);
}

}  // namespace tgbs
