#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tgbs {

using NodeId = std::size_t;

/// Sorted, duplicate-free set of node indices.
class NodeSubset {
 public:
  NodeSubset() = default;
  /// Normalizes: the input is sorted and de-duplicated.
  explicit NodeSubset(std::vector<NodeId> members);
  NodeSubset(std::initializer_list<NodeId> members);

  static NodeSubset range(std::size_t count);

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(NodeId v) const noexcept;
  NodeId operator[](std::size_t i) const noexcept { return members_[i]; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const NodeSubset&, const NodeSubset&) = default;

 private:
  std::vector<NodeId> members_;
};

/// Undirected graph with a dense symmetric adjacency matrix and optional node
/// weights. Immutable once constructed; neighbor lists are built up front for
/// the solver inner loops.
class Graph {
 public:
  /// Edgeless graph on node_count nodes.
  explicit Graph(std::size_t node_count);
  /// Validates symmetry, zero diagonal, non-negative entries and weights.
  explicit Graph(Eigen::MatrixXd adjacency, std::optional<Eigen::VectorXd> node_weights = std::nullopt);

  static Graph from_edges(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return static_cast<std::size_t>(adjacency_.rows()); }
  const Eigen::MatrixXd& adjacency() const noexcept { return adjacency_; }

  bool has_edge(NodeId u, NodeId v) const noexcept { return adjacency_(u, v) != 0.0; }
  std::span<const NodeId> neighbors(NodeId v) const noexcept { return neighbors_[v]; }
  std::size_t degree(NodeId v) const noexcept { return neighbors_[v].size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_node_weights() const noexcept { return node_weights_.has_value(); }
  /// Throws invalid-parameter when the graph carries no node weights.
  const Eigen::VectorXd& node_weights() const;

  Graph with_node_weights(Eigen::VectorXd weights) const;
  /// Relabels node i as perm[i].
  Graph permuted(std::span<const NodeId> perm) const;
  Graph induced(const NodeSubset& s) const;

 private:
  Eigen::MatrixXd adjacency_;
  std::optional<Eigen::VectorXd> node_weights_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::size_t edge_count_ = 0;
};

struct PlantedGraph {
  Graph graph;
  NodeSubset planted;
};

Graph erdos_renyi(std::size_t n, double p, std::uint64_t rng_seed);

/// Dense block (p_dense inside) embedded in a sparse block (p_sparse inside
/// and across). Node labels are shuffled so the planted set is a uniformly
/// random subset rather than a contiguous index range.
PlantedGraph planted_graph(std::size_t n_total, double p_dense, double p_sparse, double dense_fraction,
                           std::uint64_t rng_seed);

Graph assign_uniform_weights(const Graph& g, std::uint64_t rng_seed);

/// Edges with both endpoints in s (presence only).
std::size_t edges_within(const Graph& g, const NodeSubset& s);
/// 2e / (k(k-1)); requires |s| >= 2.
double density(const Graph& g, const NodeSubset& s);
bool is_clique(const Graph& g, const NodeSubset& s);
std::size_t subgraph_degree(const Graph& g, const NodeSubset& s, NodeId v);
double weight_sum(const Graph& g, const NodeSubset& s);

/// Edge-list text format: header `M`, then `u v [w]` per edge (u < v), then
/// optionally `# weights` followed by one node weight per line.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace tgbs
