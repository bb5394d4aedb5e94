#include "tgbs/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "tgbs/csv.hpp"
#include "tgbs/error.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

std::string_view to_string(Binning b) noexcept { return b == Binning::Count ? "count" : "detector"; }

Binning binning_from_string(std::string_view name) {
  if (name == "count") return Binning::Count;
  if (name == "detector") return Binning::Detector;
  fail(ErrorKind::InvalidParameter, "unknown binning '" + std::string(name) + "'");
}

FeatureVector count_binning(const SampleBatch& samples, std::size_t pad_to) {
  require(pad_to >= samples.modes(), "pad_to must be at least the mode count");
  require(samples.realizations() >= 1, "empty sample batch");
  FeatureVector f{std::vector<double>(pad_to + 1, 0.0), Binning::Count, samples.realizations()};
  for (std::size_t n = 0; n < samples.realizations(); ++n) f.values[samples.click_count(n)] += 1.0;
  const double inv = 1.0 / static_cast<double>(samples.realizations());
  for (auto& v : f.values) v *= inv;
  return f;
}

FeatureVector detector_binning(const SampleBatch& samples, std::size_t pad_to, bool sort_descending) {
  require(pad_to >= samples.modes(), "pad_to must be at least the mode count");
  require(samples.realizations() >= 1, "empty sample batch");
  FeatureVector f{std::vector<double>(pad_to, 0.0), Binning::Detector, samples.realizations()};
  std::vector<std::size_t> hits(samples.modes(), 0);
  for (std::size_t n = 0; n < samples.realizations(); ++n) {
    const auto row = samples.row(n);
    for (std::size_t m = 0; m < samples.modes(); ++m) hits[m] += row[m];
  }
  const double inv = 1.0 / static_cast<double>(samples.realizations());
  for (std::size_t m = 0; m < samples.modes(); ++m) f.values[m] = static_cast<double>(hits[m]) * inv;
  if (sort_descending)
    std::sort(f.values.begin(), f.values.begin() + static_cast<std::ptrdiff_t>(samples.modes()), std::greater<>());
  return f;
}

FeatureVector cumulative(const FeatureVector& f) {
  FeatureVector out = f;
  std::partial_sum(out.values.begin(), out.values.end(), out.values.begin());
  return out;
}

KernelMatrix rbf_gram(const std::vector<FeatureVector>& features, double bandwidth) {
  require(bandwidth > 0.0 && std::isfinite(bandwidth), "bandwidth must be positive");
  const auto g = features.size();
  if (g > 0) {
    const auto d = features.front().values.size();
    for (const auto& f : features) require(f.values.size() == d, "feature vectors differ in length");
  }
  KernelMatrix k{Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g)), bandwidth};
  const double denom = 2.0 * bandwidth * bandwidth;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      double dist2 = 0.0;
      for (std::size_t t = 0; t < features[i].values.size(); ++t) {
        const double diff = features[i].values[t] - features[j].values[t];
        dist2 += diff * diff;
      }
      const double value = std::exp(-dist2 / denom);
      k.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
      k.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = value;
    }
  }
  return k;
}

double default_bandwidth(const std::vector<FeatureVector>& features) {
  if (features.empty()) return 1.0;
  const auto d = features.front().values.size();
  double sum = 0.0, sum_sq = 0.0;
  std::size_t count = 0;
  for (const auto& f : features)
    for (double v : f.values) {
      sum += v;
      sum_sq += v * v;
      ++count;
    }
  const double mean = sum / static_cast<double>(count);
  const double variance = std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
  const double bandwidth_sq = static_cast<double>(d) * variance;
  return bandwidth_sq > 0.0 ? std::sqrt(bandwidth_sq) : 1.0;
}

double balanced_accuracy(std::span<const int> predicted, std::span<const int> actual, std::size_t class_count) {
  require(predicted.size() == actual.size(), "label lists differ in length");
  require(class_count >= 1, "class_count must be >= 1");
  std::vector<std::size_t> total(class_count, 0), hits(class_count, 0);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    require(actual[i] >= 0 && static_cast<std::size_t>(actual[i]) < class_count, "label outside 0..K-1");
    ++total[static_cast<std::size_t>(actual[i])];
    if (predicted[i] == actual[i]) ++hits[static_cast<std::size_t>(actual[i])];
  }
  double recall_sum = 0.0;
  for (std::size_t c = 0; c < class_count; ++c) {
    require(total[c] > 0, "class " + std::to_string(c) + " has no instances; recall is undefined");
    recall_sum += static_cast<double>(hits[c]) / static_cast<double>(total[c]);
  }
  return recall_sum / static_cast<double>(class_count);
}

namespace {

std::string adjacency_key(const Eigen::MatrixXd& a) {
  std::string key(reinterpret_cast<const char*>(a.data()), static_cast<std::size_t>(a.size()) * sizeof(double));
  key.append(std::to_string(a.rows()));
  return key;
}

}  // namespace

FeaturizedDataset featurize_dataset(const LabeledDataset& d, const FeaturizeOptions& options) {
  require(options.n_samples >= 1, "n_samples must be >= 1");
  FeaturizedDataset out;
  out.pad_to = d.max_node_count();
  std::unordered_map<std::string, EmbeddedProblem> cache;

  for (std::size_t i = 0; i < d.graphs.size(); ++i) {
    const Graph& g = d.graphs[i];
    try {
      if (g.edge_count() == 0) fail(ErrorKind::NoSignal, "graph has no edges");
      const auto key = adjacency_key(g.adjacency());
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, embed(g.adjacency(), options.mean_photon, options.gamma)).first;
      const SampleBatch samples = sample_graph(it->second, options.n_samples, derive_seed({options.seed, i}));
      FeatureVector f = options.binning == Binning::Count
                            ? count_binning(samples, out.pad_to)
                            : detector_binning(samples, out.pad_to, options.sort_detectors);
      if (options.cumulative) f = cumulative(f);
      out.features.push_back(std::move(f));
      out.labels.push_back(d.labels[i]);
      out.graph_ids.push_back(i);
    } catch (const Error& e) {
      out.skipped.push_back({i, e.what()});
    }
  }
  return out;
}

void write_features_csv(std::ostream& out, const FeaturizedDataset& f, const nlohmann::json& provenance) {
  write_csv_preamble(out, kFeaturesSchema, provenance);
  const std::size_t d = f.features.empty() ? 0 : f.features.front().values.size();
  out << "id,label";
  for (std::size_t t = 0; t < d; ++t) out << ",f" << t;
  out << '\n';
  for (std::size_t i = 0; i < f.features.size(); ++i) {
    out << f.graph_ids[i] << ',' << f.labels[i];
    for (double v : f.features[i].values) out << ',' << format_real(v);
    out << '\n';
  }
}

void write_gram_csv(std::ostream& out, const KernelMatrix& k, const FeaturizedDataset& f,
                    const nlohmann::json& provenance) {
  require(static_cast<std::size_t>(k.values.rows()) == f.features.size(), "Gram matrix does not match the features");
  write_csv_preamble(out, kGramSchema, provenance);
  out << "id,label";
  for (std::size_t j = 0; j < f.graph_ids.size(); ++j) out << ",k" << f.graph_ids[j];
  out << '\n';
  for (Eigen::Index i = 0; i < k.values.rows(); ++i) {
    out << f.graph_ids[static_cast<std::size_t>(i)] << ',' << f.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < k.values.cols(); ++j) out << ',' << format_real(k.values(i, j));
    out << '\n';
  }
}

nlohmann::json gram_sidecar(const KernelMatrix& k, const FeaturizeOptions& options, const std::string& dataset) {
  return {
      {"schema", kGramSchema},
      {"dataset", dataset},
      {"size", k.values.rows()},
      {"bandwidth", k.bandwidth},
      {"binning", to_string(options.binning)},
      {"sorted_detectors", options.sort_detectors},
      {"cumulative", options.cumulative},
      {"n_samples", options.n_samples},
      {"mean_photon", options.mean_photon},
      {"gamma", options.gamma},
      {"seed", options.seed},
  };
}

}  // namespace tgbs
