#include "tgbs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <string_view>

#include "tgbs/error.hpp"

namespace tgbs {

std::size_t LabeledDataset::class_count() const {
  if (labels.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
}

std::size_t LabeledDataset::max_node_count() const {
  std::size_t m = 0;
  for (const auto& g : graphs) m = std::max(m, g.node_count());
  return m;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view token, const std::filesystem::path& file, std::size_t line_no) {
  token = trim(token);
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    fail(ErrorKind::Format, file.string() + ":" + std::to_string(line_no) + ": not an integer: '" +
                                std::string(token) + "'");
  return value;
}

/// One integer per non-blank line.
std::vector<long long> read_column(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::Io, "cannot open " + file.string());
  std::vector<long long> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    values.push_back(parse_int(line, file, line_no));
  }
  return values;
}

}  // namespace

LabeledDataset parse_tudataset(const std::filesystem::path& dir, const std::string& name) {
  const auto edges_file = dir / (name + "_A.txt");
  const auto indicator_file = dir / (name + "_graph_indicator.txt");
  const auto labels_file = dir / (name + "_graph_labels.txt");
  for (const auto& f : {edges_file, indicator_file, labels_file})
    if (!std::filesystem::exists(f)) fail(ErrorKind::Io, "missing dataset file " + f.string());

  const auto indicator = read_column(indicator_file);
  const auto raw_labels = read_column(labels_file);
  const std::size_t graph_count = raw_labels.size();

  // Global node id (1-based) -> (graph index, local index).
  std::vector<std::size_t> node_graph(indicator.size());
  std::vector<std::size_t> node_local(indicator.size());
  std::vector<std::size_t> sizes(graph_count, 0);
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    const long long gid = indicator[i];
    if (gid < 1 || static_cast<std::size_t>(gid) > graph_count)
      fail(ErrorKind::Format, indicator_file.string() + ":" + std::to_string(i + 1) + ": graph id " +
                                  std::to_string(gid) + " has no label");
    node_graph[i] = static_cast<std::size_t>(gid - 1);
    node_local[i] = sizes[node_graph[i]]++;
  }
  for (std::size_t g = 0; g < graph_count; ++g)
    if (sizes[g] == 0) fail(ErrorKind::Format, "graph " + std::to_string(g + 1) + " has no nodes");

  std::vector<Eigen::MatrixXd> adjacency;
  adjacency.reserve(graph_count);
  for (auto m : sizes) adjacency.push_back(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)));

  LabeledDataset d;
  d.name = name;

  std::ifstream in(edges_file);
  if (!in) fail(ErrorKind::Io, "cannot open " + edges_file.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos)
      fail(ErrorKind::Format, edges_file.string() + ":" + std::to_string(line_no) + ": expected 'u, v'");
    const long long u = parse_int(row.substr(0, comma), edges_file, line_no);
    const long long v = parse_int(row.substr(comma + 1), edges_file, line_no);
    const auto n_nodes = static_cast<long long>(indicator.size());
    if (u < 1 || v < 1 || u > n_nodes || v > n_nodes)
      fail(ErrorKind::Format, edges_file.string() + ":" + std::to_string(line_no) + ": node id out of range");
    const auto ui = static_cast<std::size_t>(u - 1);
    const auto vi = static_cast<std::size_t>(v - 1);
    if (node_graph[ui] != node_graph[vi])
      fail(ErrorKind::Format, edges_file.string() + ":" + std::to_string(line_no) + ": edge crosses graphs");
    if (ui == vi) {
      ++d.dropped_self_loops;
      continue;
    }
    auto& a = adjacency[node_graph[ui]];
    a(node_local[ui], node_local[vi]) = 1.0;
    a(node_local[vi], node_local[ui]) = 1.0;
  }

  std::map<long long, int> remap;
  d.graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    d.graphs.emplace_back(std::move(adjacency[g]));
    const auto it = remap.emplace(raw_labels[g], static_cast<int>(remap.size())).first;
    d.labels.push_back(it->second);
  }
  return d;
}

LabeledDataset filter_by_size(const LabeledDataset& d, std::size_t min_nodes, std::size_t max_nodes) {
  require(min_nodes <= max_nodes, "min_nodes must not exceed max_nodes");
  LabeledDataset out;
  out.name = d.name;
  out.dropped_self_loops = d.dropped_self_loops;
  for (std::size_t i = 0; i < d.graphs.size(); ++i) {
    const auto m = d.graphs[i].node_count();
    if (m < min_nodes || m > max_nodes) continue;
    out.graphs.push_back(d.graphs[i]);
    out.labels.push_back(d.labels[i]);
  }
  if (out.graphs.empty()) fail(ErrorKind::EmptyResult, "no graph of " + d.name + " survives the size filter");
  return out;
}

}  // namespace tgbs
