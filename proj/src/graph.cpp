#include "tgbs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "tgbs/error.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

NodeSubset::NodeSubset(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSubset::NodeSubset(std::initializer_list<NodeId> members) : NodeSubset(std::vector<NodeId>(members)) {}

NodeSubset NodeSubset::range(std::size_t count) {
  std::vector<NodeId> all(count);
  std::iota(all.begin(), all.end(), NodeId{0});
  return NodeSubset(std::move(all));
}

bool NodeSubset::contains(NodeId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t node_count) : Graph(Eigen::MatrixXd::Zero(node_count, node_count)) {}

Graph::Graph(Eigen::MatrixXd adjacency, std::optional<Eigen::VectorXd> node_weights)
    : adjacency_(std::move(adjacency)), node_weights_(std::move(node_weights)) {
  require(adjacency_.rows() == adjacency_.cols(), "adjacency must be square");
  require(adjacency_.rows() >= 1, "graph needs at least one node");
  const auto m = node_count();
  neighbors_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    require(adjacency_(i, i) == 0.0, "adjacency diagonal must be zero");
    for (std::size_t j = 0; j < m; ++j) {
      const double w = adjacency_(i, j);
      require(std::isfinite(w) && w >= 0.0, "edge weights must be finite and non-negative");
      require(w == adjacency_(j, i), "adjacency must be symmetric");
      if (w != 0.0) {
        neighbors_[i].push_back(j);
        if (i < j) ++edge_count_;
      }
    }
  }
  if (node_weights_) {
    require(static_cast<std::size_t>(node_weights_->size()) == m, "node_weights length must equal node count");
    for (double w : *node_weights_) require(std::isfinite(w) && w >= 0.0, "node weights must be non-negative");
  }
}

Graph Graph::from_edges(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(node_count, node_count);
  for (auto [u, v] : edges) {
    require(u < node_count && v < node_count, "edge endpoint out of range");
    require(u != v, "self-loops are not allowed");
    a(u, v) = a(v, u) = 1.0;
  }
  return Graph(std::move(a));
}

const Eigen::VectorXd& Graph::node_weights() const {
  if (!node_weights_) fail(ErrorKind::InvalidParameter, "graph has no node weights");
  return *node_weights_;
}

Graph Graph::with_node_weights(Eigen::VectorXd weights) const { return Graph(adjacency_, std::move(weights)); }

Graph Graph::permuted(std::span<const NodeId> perm) const {
  const auto m = node_count();
  require(perm.size() == m, "permutation length must equal node count");
  std::vector<bool> seen(m, false);
  for (NodeId p : perm) {
    require(p < m && !seen[p], "not a permutation");
    seen[p] = true;
  }
  Eigen::MatrixXd a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(perm[i], perm[j]) = adjacency_(i, j);
  std::optional<Eigen::VectorXd> w;
  if (node_weights_) {
    w = Eigen::VectorXd(m);
    for (std::size_t i = 0; i < m; ++i) (*w)(perm[i]) = (*node_weights_)(i);
  }
  return Graph(std::move(a), std::move(w));
}

Graph Graph::induced(const NodeSubset& s) const {
  require(!s.empty(), "induced subgraph needs at least one node");
  const auto k = s.size();
  Eigen::MatrixXd a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = adjacency_(s[i], s[j]);
  std::optional<Eigen::VectorXd> w;
  if (node_weights_) {
    w = Eigen::VectorXd(k);
    for (std::size_t i = 0; i < k; ++i) (*w)(i) = (*node_weights_)(s[i]);
  }
  return Graph(std::move(a), std::move(w));
}

namespace {

void check_probability(double p, const char* name) {
  require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0,1]");
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t rng_seed) {
  require(n >= 1, "erdos_renyi needs n >= 1");
  check_probability(p, "edge probability");
  Rng rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit(rng) < p) a(i, j) = a(j, i) = 1.0;
  return Graph(std::move(a));
}

PlantedGraph planted_graph(std::size_t n_total, double p_dense, double p_sparse, double dense_fraction,
                           std::uint64_t rng_seed) {
  check_probability(p_dense, "p_dense");
  check_probability(p_sparse, "p_sparse");
  require(dense_fraction > 0.0 && dense_fraction < 1.0, "dense_fraction must lie in (0,1)");
  require(p_dense > p_sparse, "p_dense must exceed p_sparse");
  const auto n_dense = static_cast<std::size_t>(std::llround(dense_fraction * static_cast<double>(n_total)));
  require(n_dense >= 2, "dense block must contain at least two nodes");

  Rng rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_total, n_total);
  for (std::size_t i = 0; i < n_total; ++i) {
    for (std::size_t j = i + 1; j < n_total; ++j) {
      const double p = (i < n_dense && j < n_dense) ? p_dense : p_sparse;
      if (unit(rng) < p) a(i, j) = a(j, i) = 1.0;
    }
  }

  std::vector<NodeId> perm(n_total);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  Graph block_ordered(std::move(a));
  std::vector<NodeId> planted(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_dense));
  return {block_ordered.permuted(perm), NodeSubset(std::move(planted))};
}

Graph assign_uniform_weights(const Graph& g, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd w(g.node_count());
  for (auto& x : w) x = unit(rng);
  return g.with_node_weights(std::move(w));
}

namespace {

void check_subset(const Graph& g, const NodeSubset& s) {
  if (!s.empty()) require(s.members().back() < g.node_count(), "subset index out of range");
}

}  // namespace

std::size_t edges_within(const Graph& g, const NodeSubset& s) {
  check_subset(g, s);
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) ++count;
  return count;
}

double density(const Graph& g, const NodeSubset& s) {
  require(s.size() >= 2, "density is undefined for fewer than two nodes");
  const auto k = static_cast<double>(s.size());
  return 2.0 * static_cast<double>(edges_within(g, s)) / (k * (k - 1.0));
}

bool is_clique(const Graph& g, const NodeSubset& s) {
  require(!s.empty(), "is_clique needs a non-empty subset");
  return edges_within(g, s) == s.size() * (s.size() - 1) / 2;
}

std::size_t subgraph_degree(const Graph& g, const NodeSubset& s, NodeId v) {
  require(v < g.node_count(), "node index out of range");
  check_subset(g, s);
  std::size_t count = 0;
  for (NodeId u : s)
    if (u != v && g.has_edge(u, v)) ++count;
  return count;
}

double weight_sum(const Graph& g, const NodeSubset& s) {
  const auto& w = g.node_weights();
  double total = 0.0;
  for (NodeId v : s) total += w(v);
  return total;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto m = g.node_count();
  out << m << '\n';
  out << std::setprecision(17);
  for (std::size_t u = 0; u < m; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      out << u << ' ' << v;
      const double w = g.adjacency()(u, v);
      if (w != 1.0) out << ' ' << w;
      out << '\n';
    }
  }
  if (g.has_node_weights()) {
    out << "# weights\n";
    for (double w : g.node_weights()) out << w << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::optional<std::size_t> m;
  Eigen::MatrixXd a;
  std::vector<double> weights;
  bool in_weights = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.find("weights", first) != std::string::npos) in_weights = true;
      continue;
    }
    std::istringstream fields(line);
    auto bad = [&] { fail(ErrorKind::Format, "edge list line " + std::to_string(line_no) + ": '" + line + "'"); };
    if (!m) {
      long long header = 0;
      if (!(fields >> header) || header < 1) bad();
      m = static_cast<std::size_t>(header);
      a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(*m), static_cast<Eigen::Index>(*m));
    } else if (in_weights) {
      double w = 0.0;
      if (!(fields >> w)) bad();
      weights.push_back(w);
    } else {
      long long u = -1, v = -1;
      double w = 1.0;
      if (!(fields >> u >> v)) bad();
      if (!(fields >> w)) w = 1.0;
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *m || static_cast<std::size_t>(v) >= *m || u == v) bad();
      a(u, v) = a(v, u) = w;
    }
  }
  if (!m) fail(ErrorKind::Format, "edge list is missing the node-count header");
  std::optional<Eigen::VectorXd> w;
  if (in_weights) {
    if (weights.size() != *m) fail(ErrorKind::Format, "weight block length does not match node count");
    w = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  }
  return Graph(std::move(a), std::move(w));
}

}  // namespace tgbs
