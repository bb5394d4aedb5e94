#include "tgbs/bench.hpp"

#include <cmath>
#include <exception>
#include <ostream>
#include <random>

#include "tgbs/csv.hpp"
#include "tgbs/error.hpp"
#include "tgbs/graph.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs {

double connectivity_threshold_probability(std::size_t n) {
  require(n >= 2, "connectivity threshold needs n >= 2");
  return std::min(1.0, std::log(static_cast<double>(n)) / static_cast<double>(n));
}

namespace {

struct RunningStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  /// Sample standard deviation; zero for fewer than two values.
  double stddev() const {
    if (n < 2) return 0.0;
    const double m = mean();
    return std::sqrt(std::max(0.0, (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1)));
  }
};

double sampling_seconds(SampleBatch& batch) {
  return batch.timings["generate"] + batch.timings["propagate"] + batch.timings["threshold"];
}

// Keys separating the graph, sampling and baseline streams.
constexpr std::uint64_t kGraphKey = 0;
constexpr std::uint64_t kSampleKey = 1;
constexpr std::uint64_t kBaselineKey = 2;
constexpr std::uint64_t kWarmupInstance = ~std::uint64_t{0};

}  // namespace

std::vector<DecomposeBenchRow> decompose_bench(const DecomposeBenchOptions& options) {
  require(!options.sizes.empty(), "at least one size is required");
  require(options.instances >= 1 && options.realizations >= 1, "instances and realizations must be >= 1");
  std::vector<DecomposeBenchRow> rows;
  for (std::size_t n : options.sizes) {
    DecomposeBenchRow row;
    row.size = n;
    RunningStats decompose, sampling;
    try {
      const double p = connectivity_threshold_probability(n);
      auto run_one = [&](std::uint64_t instance) {
        const Graph g = erdos_renyi(n, p, derive_seed({options.seed, n, instance, kGraphKey}));
        const EmbeddedProblem problem = embed(g.adjacency(), options.mean_photon, options.gamma);
        SampleBatch batch =
            sample_graph(problem, options.realizations, derive_seed({options.seed, n, instance, kSampleKey}));
        return std::pair{problem.decompose_seconds, sampling_seconds(batch)};
      };
      run_one(kWarmupInstance);
      for (std::size_t i = 0; i < options.instances; ++i) {
        const auto [d, s] = run_one(i);
        decompose.add(d);
        sampling.add(s);
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.instances = decompose.n;
    row.decompose_mean = decompose.mean();
    row.decompose_std = decompose.stddev();
    row.sampling_mean = sampling.mean();
    row.sampling_std = sampling.stddev();
    rows.push_back(row);
  }
  return rows;
}

std::vector<SeedDensityRow> seed_density(const SeedDensityOptions& options) {
  require(!options.sizes.empty(), "at least one size is required");
  require(options.instances >= 1 && options.samples >= 1, "instances and samples must be >= 1");
  std::vector<SeedDensityRow> rows;
  for (std::size_t n : options.sizes) {
    SeedDensityRow row;
    row.size = n;
    try {
      const double p = connectivity_threshold_probability(n);
      std::vector<Graph> graphs;
      RunningStats gbs, seed_size;
      for (std::size_t i = 0; i < options.instances; ++i) {
        Graph g = erdos_renyi(n, p, derive_seed({options.seed, n, i, kGraphKey}));
        const EmbeddedProblem problem = embed(g.adjacency(), options.mean_photon, options.gamma);
        const SampleBatch batch = sample_graph(problem, options.samples, derive_seed({options.seed, n, i, kSampleKey}));
        for (std::size_t r = 0; r < batch.realizations(); ++r) {
          seed_size.add(static_cast<double>(batch.click_count(r)));
          const NodeSubset s = batch.clicked(r);
          if (s.size() >= 2) gbs.add(density(g, s));
        }
        graphs.push_back(std::move(g));
      }

      // Baseline: every node joins independently with probability 1 / j.
      const double mean_size = seed_size.mean();
      const double inclusion = mean_size > 1.0 ? 1.0 / mean_size : 1.0;
      RunningStats random;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        Rng rng = make_rng({options.seed, n, i, kBaselineKey});
        std::bernoulli_distribution join(inclusion);
        for (std::size_t r = 0; r < options.samples; ++r) {
          std::vector<NodeId> members;
          for (NodeId v = 0; v < n; ++v)
            if (join(rng)) members.push_back(v);
          if (members.size() >= 2) random.add(density(graphs[i], NodeSubset(std::move(members))));
        }
      }
      row.instances = graphs.size();
      row.gbs_mean_density = gbs.mean();
      row.random_mean_density = random.mean();
      row.mean_seed_size = mean_size;
      row.gbs_seeds_used = gbs.n;
      row.random_seeds_used = random.n;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "slope needs at least two paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "log-log slope needs positive values");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

nlohmann::json to_json(const DecomposeBenchOptions& o) {
  return {{"sizes", o.sizes},         {"instances", o.instances}, {"realizations", o.realizations},
          {"mean_photon", o.mean_photon}, {"gamma", o.gamma},     {"seed", o.seed}};
}

nlohmann::json to_json(const SeedDensityOptions& o) {
  return {{"sizes", o.sizes},         {"instances", o.instances}, {"samples", o.samples},
          {"mean_photon", o.mean_photon}, {"gamma", o.gamma},     {"seed", o.seed}};
}

void write_decompose_bench_csv(std::ostream& out, const DecomposeBenchOptions& options,
                               const std::vector<DecomposeBenchRow>& rows) {
  write_csv_preamble(out, kDecomposeBenchSchema, to_json(options));
  out << "size,instances,decompose_mean_seconds,decompose_std_seconds,sampling_mean_seconds,sampling_std_seconds,error\n";
  for (const auto& r : rows)
    out << r.size << ',' << r.instances << ',' << format_real(r.decompose_mean) << ',' << format_real(r.decompose_std)
        << ',' << format_real(r.sampling_mean) << ',' << format_real(r.sampling_std) << ',' << csv_field(r.error)
        << '\n';
}

void write_seed_density_csv(std::ostream& out, const SeedDensityOptions& options,
                            const std::vector<SeedDensityRow>& rows) {
  write_csv_preamble(out, kSeedDensitySchema, to_json(options));
  out << "size,instances,gbs_mean_density,random_mean_density,mean_seed_size,gbs_seeds_used,random_seeds_used,error\n";
  for (const auto& r : rows)
    out << r.size << ',' << r.instances << ',' << format_real(r.gbs_mean_density) << ','
        << format_real(r.random_mean_density) << ',' << format_real(r.mean_seed_size) << ',' << r.gbs_seeds_used << ','
        << r.random_seeds_used << ',' << csv_field(r.error) << '\n';
}

}  // namespace tgbs
