#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// solver code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tgbs/error.hpp"
#include "tgbs/graph.hpp"

namespace tgbs::test {

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// Visits every k-subset of {0..m-1} in lexicographic order.
inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<NodeId>&)>& visit) {
  if (k > m) return;
  std::vector<NodeId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool adjacent_all(const Graph& g, const std::vector<NodeId>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacency()(s[i], s[j]) == 0.0) return false;
  return true;
}

inline std::size_t count_edges(const Graph& g, const std::vector<NodeId>& s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacency()(s[i], s[j]) != 0.0) ++e;
  return e;
}

/// Exhaustive optimum of the densest-k problem.
inline double brute_force_densest(const Graph& g, std::size_t k) {
  double best = 0.0;
  for_each_subset(g.node_count(), k, [&](const std::vector<NodeId>& s) {
    const double kk = static_cast<double>(k);
    best = std::max(best, 2.0 * static_cast<double>(count_edges(g, s)) / (kk * (kk - 1.0)));
  });
  return best;
}

/// Exhaustive maximum clique size and maximum clique weight (bitmask scan).
struct CliqueOptimum {
  std::size_t size = 0;
  double weight = 0.0;
};

inline CliqueOptimum brute_force_cliques(const Graph& g) {
  const auto m = g.node_count();
  CliqueOptimum best;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<NodeId> s;
    for (std::size_t v = 0; v < m; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (!adjacent_all(g, s)) continue;
    best.size = std::max(best.size, s.size());
    if (g.has_node_weights()) {
      double w = 0.0;
      for (NodeId v : s) w += g.node_weights()(static_cast<Eigen::Index>(v));
      best.weight = std::max(best.weight, w);
    }
  }
  return best;
}

/// A clique no outside node can extend.
inline bool is_maximal_clique(const Graph& g, const NodeSubset& s) {
  std::vector<NodeId> members(s.begin(), s.end());
  if (!adjacent_all(g, members)) return false;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (s.contains(u)) continue;
    bool all = true;
    for (NodeId v : s) all = all && g.adjacency()(u, v) != 0.0;
    if (all) return false;
  }
  return true;
}

inline Graph triangle_with_pendant() {
  // 0-1-2 triangle, pendant 3 attached to 2.
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  return Graph::from_edges(4, edges);
}

inline Graph two_triangles() {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph::from_edges(6, edges);
}

inline Graph complete_graph(std::size_t n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  a.diagonal().setZero();
  return Graph(a);
}

inline Graph path3() {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}};
  return Graph::from_edges(3, edges);
}

/// K4 on {0,1,2,3} plus pendant 4 attached to 3.
inline Graph k4_with_pendant() {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  return Graph::from_edges(5, edges);
}

}  // namespace tgbs::test
