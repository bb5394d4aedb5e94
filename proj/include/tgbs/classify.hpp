#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "tgbs/dataset.hpp"
#include "tgbs/embedding.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs {

enum class Binning { Count, Detector };

std::string_view to_string(Binning b) noexcept;
Binning binning_from_string(std::string_view name);

struct FeatureVector {
  std::vector<double> values;
  Binning binning = Binning::Count;
  std::size_t n_samples = 0;
};

struct KernelMatrix {
  Eigen::MatrixXd values;
  double bandwidth = 0.0;
};

/// Histogram of total clicks per realization over 0..pad_to, normalized by N.
FeatureVector count_binning(const SampleBatch& samples, std::size_t pad_to);

/// Per-mode click frequency, zero-padded to pad_to. With sort_descending the
/// frequencies are sorted before padding, which makes the vector invariant
/// under node relabeling.
FeatureVector detector_binning(const SampleBatch& samples, std::size_t pad_to, bool sort_descending = true);

/// Running-sum transform of a feature vector.
FeatureVector cumulative(const FeatureVector& f);

/// K_ij = exp(-|x_i - x_j|^2 / (2 bandwidth^2)).
KernelMatrix rbf_gram(const std::vector<FeatureVector>& features, double bandwidth);

/// bandwidth^2 = D * Var(all feature entries). Falls back to 1 when the
/// features have no spread.
double default_bandwidth(const std::vector<FeatureVector>& features);

/// Mean per-class recall over classes 0..class_count-1.
double balanced_accuracy(std::span<const int> predicted, std::span<const int> actual, std::size_t class_count);

struct FeaturizeOptions {
  double mean_photon = 5.0;
  double gamma = kDefaultThreshold;
  std::size_t n_samples = 6000;
  Binning binning = Binning::Count;
  bool sort_detectors = true;
  bool cumulative = false;
  std::uint64_t seed = 0;
};

struct SkippedGraph {
  std::size_t index = 0;
  std::string reason;
};

struct FeaturizedDataset {
  std::vector<FeatureVector> features;
  std::vector<int> labels;
  /// Index into the source dataset for each feature row.
  std::vector<std::size_t> graph_ids;
  std::vector<SkippedGraph> skipped;
  std::size_t pad_to = 0;
};

/// Embeds and samples every graph, padding features to the dataset's largest
/// graph. Identical adjacency matrices share one decomposition. Graphs that
/// cannot be embedded are recorded in `skipped`.
FeaturizedDataset featurize_dataset(const LabeledDataset& d, const FeaturizeOptions& options);

inline constexpr std::string_view kFeaturesSchema = "tgbs.features.v1";
inline constexpr std::string_view kGramSchema = "tgbs.gram.v1";

/// One row per graph: id, label, then the D feature values.
void write_features_csv(std::ostream& out, const FeaturizedDataset& f, const nlohmann::json& provenance);
/// Row i holds id, label, then K_i0 .. K_i(G-1).
void write_gram_csv(std::ostream& out, const KernelMatrix& k, const FeaturizedDataset& f,
                    const nlohmann::json& provenance);
nlohmann::json gram_sidecar(const KernelMatrix& k, const FeaturizeOptions& options, const std::string& dataset);

}  // namespace tgbs
