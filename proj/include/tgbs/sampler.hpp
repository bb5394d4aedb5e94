#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "tgbs/embedding.hpp"
#include "tgbs/graph.hpp"

namespace tgbs {

/// Vacuum amplitude scale: sigma^2 = 1/2 is the energy per vacuum mode.
inline const double kVacuumSigma = std::sqrt(0.5);

/// Realizations per independent RNG stream. Stream b covers realizations
/// [b * kRealizationBlock, (b + 1) * kRealizationBlock) and is seeded from
/// (rng_seed, b), so a batch can be split across workers on block boundaries
/// without changing the output.
inline constexpr std::size_t kRealizationBlock = 4096;

using ComplexRows = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// N x M complex amplitudes, one realization per row.
struct AmplitudeBatch {
  ComplexRows values;
  static constexpr double sigma_squared = 0.5;

  std::size_t realizations() const noexcept { return static_cast<std::size_t>(values.rows()); }
  std::size_t modes() const noexcept { return static_cast<std::size_t>(values.cols()); }
};

/// Binary detection record, N x M, plus wall-clock timing per stage
/// (decompose, generate, propagate, threshold). Timings cover the compute
/// only, not allocation of the result buffers.
class SampleBatch {
 public:
  SampleBatch(std::size_t realizations, std::size_t modes);

  std::size_t realizations() const noexcept { return n_; }
  std::size_t modes() const noexcept { return m_; }

  bool click(std::size_t n, std::size_t m) const noexcept { return clicks_[n * m_ + m] != 0; }
  void set_click(std::size_t n, std::size_t m, bool value) noexcept { clicks_[n * m_ + m] = value ? 1 : 0; }
  std::span<const std::uint8_t> row(std::size_t n) const noexcept { return {clicks_.data() + n * m_, m_}; }

  std::size_t click_count(std::size_t n) const noexcept;
  NodeSubset clicked(std::size_t n) const;
  double mean_click_count() const noexcept;

  std::map<std::string, double> timings;

  friend bool operator==(const SampleBatch& a, const SampleBatch& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.clicks_ == b.clicks_;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint8_t> clicks_;
};

/// a = cosh(r) sigma z + sinh(r) sigma conj(z) with z standard complex
/// Gaussian (real and imaginary parts i.i.d. normal, variance 1/2).
AmplitudeBatch generate_squeezed(const Eigen::VectorXd& squeeze, std::size_t realizations, std::uint64_t rng_seed);

/// Replaces every realization a by U a (one matrix product).
AmplitudeBatch propagate(const AmplitudeBatch& batch, const Eigen::MatrixXcd& unitary);

/// click iff |a_m| > gamma_m.
SampleBatch threshold_detect(const AmplitudeBatch& batch, const Eigen::VectorXd& gamma);

SampleBatch sample_graph(const EmbeddedProblem& problem, std::size_t realizations, std::uint64_t rng_seed);

/// One line of M '0'/'1' characters per realization.
void write_samples(std::ostream& out, const SampleBatch& batch);
SampleBatch read_samples(std::istream& in);
nlohmann::json samples_sidecar(const SampleBatch& batch, const nlohmann::json& parameters);

}  // namespace tgbs
