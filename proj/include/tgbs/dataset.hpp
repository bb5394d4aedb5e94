#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "tgbs/graph.hpp"

namespace tgbs {

struct LabeledDataset {
  std::string name;
  std::vector<Graph> graphs;
  /// Contiguous 0..K-1 after ingestion.
  std::vector<int> labels;
  /// Self-loops present in the source edge file and dropped during parsing.
  std::size_t dropped_self_loops = 0;

  std::size_t size() const noexcept { return graphs.size(); }
  std::size_t class_count() const;
  std::size_t max_node_count() const;
};

/// Reads the TUDataset plain-text layout: `<name>_A.txt`,
/// `<name>_graph_indicator.txt` and `<name>_graph_labels.txt`. Node and edge
/// attributes are ignored.
LabeledDataset parse_tudataset(const std::filesystem::path& dir, const std::string& name);

/// Keeps graphs with min_nodes <= M <= max_nodes. Labels are not remapped.
LabeledDataset filter_by_size(const LabeledDataset& d, std::size_t min_nodes,
                              std::size_t max_nodes = std::numeric_limits<std::size_t>::max());

}  // namespace tgbs
