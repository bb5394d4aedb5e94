#include "tgbs/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>

#include "tgbs/error.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

SampleBatch::SampleBatch(std::size_t realizations, std::size_t modes)
    : n_(realizations), m_(modes), clicks_(realizations * modes, 0) {}

std::size_t SampleBatch::click_count(std::size_t n) const noexcept {
  const auto r = row(n);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), std::uint8_t{1}));
}

NodeSubset SampleBatch::clicked(std::size_t n) const {
  std::vector<NodeId> nodes;
  const auto r = row(n);
  for (std::size_t m = 0; m < m_; ++m)
    if (r[m]) nodes.push_back(m);
  return NodeSubset(std::move(nodes));
}

double SampleBatch::mean_click_count() const noexcept {
  if (n_ == 0) return 0.0;
  std::size_t total = static_cast<std::size_t>(std::count(clicks_.begin(), clicks_.end(), std::uint8_t{1}));
  return static_cast<double>(total) / static_cast<double>(n_);
}

namespace {

void check_squeeze(const Eigen::VectorXd& squeeze) {
  require(squeeze.size() >= 1, "at least one mode is required");
  for (double r : squeeze) require(std::isfinite(r) && r >= 0.0, "squeezing strengths must be finite and >= 0");
}

void fill_squeezed(ComplexRows& out, const Eigen::VectorXd& squeeze, std::uint64_t rng_seed) {
  const auto n_total = static_cast<std::size_t>(out.rows());
  const auto m_total = static_cast<std::size_t>(out.cols());
  std::vector<double> ch(m_total), sh(m_total);
  for (std::size_t m = 0; m < m_total; ++m) {
    ch[m] = std::cosh(squeeze(static_cast<Eigen::Index>(m))) * kVacuumSigma;
    sh[m] = std::sinh(squeeze(static_cast<Eigen::Index>(m))) * kVacuumSigma;
  }
  for (std::size_t block = 0; block * kRealizationBlock < n_total; ++block) {
    Rng rng = make_rng({rng_seed, block});
    std::normal_distribution<double> normal(0.0, kVacuumSigma);
    const std::size_t end = std::min(n_total, (block + 1) * kRealizationBlock);
    for (std::size_t n = block * kRealizationBlock; n < end; ++n) {
      for (std::size_t m = 0; m < m_total; ++m) {
        const double x = normal(rng);
        const double y = normal(rng);
        const std::complex<double> z(x, y);
        out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m)) = ch[m] * z + sh[m] * std::conj(z);
      }
    }
  }
}

void detect_into(SampleBatch& out, const ComplexRows& values, const Eigen::VectorXd& gamma) {
  const auto m_total = out.modes();
  for (std::size_t n = 0; n < out.realizations(); ++n)
    for (std::size_t m = 0; m < m_total; ++m) {
      const auto a = values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
      out.set_click(n, m, std::abs(a) > gamma(static_cast<Eigen::Index>(m)));
    }
}

void check_gamma(const Eigen::VectorXd& gamma, std::size_t modes) {
  require(static_cast<std::size_t>(gamma.size()) == modes, "threshold vector length must equal mode count");
  for (double g : gamma) require(g >= 0.0, "thresholds must be >= 0");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

AmplitudeBatch generate_squeezed(const Eigen::VectorXd& squeeze, std::size_t realizations, std::uint64_t rng_seed) {
  require(realizations >= 1, "at least one realization is required");
  check_squeeze(squeeze);
  AmplitudeBatch batch{ComplexRows(static_cast<Eigen::Index>(realizations), squeeze.size())};
  fill_squeezed(batch.values, squeeze, rng_seed);
  return batch;
}

AmplitudeBatch propagate(const AmplitudeBatch& batch, const Eigen::MatrixXcd& unitary) {
  require(unitary.rows() == unitary.cols() && static_cast<std::size_t>(unitary.cols()) == batch.modes(),
          "unitary dimension does not match the amplitude batch");
  AmplitudeBatch out{ComplexRows(batch.values.rows(), batch.values.cols())};
  // Row a^T becomes (U a)^T = a^T U^T.
  out.values.noalias() = batch.values * unitary.transpose();
  return out;
}

SampleBatch threshold_detect(const AmplitudeBatch& batch, const Eigen::VectorXd& gamma) {
  check_gamma(gamma, batch.modes());
  SampleBatch out(batch.realizations(), batch.modes());
  detect_into(out, batch.values, gamma);
  return out;
}

SampleBatch sample_graph(const EmbeddedProblem& problem, std::size_t realizations, std::uint64_t rng_seed) {
  require(realizations >= 1, "at least one realization is required");
  const auto m = problem.modes();
  check_squeeze(problem.squeeze);
  check_gamma(problem.thresholds, m);
  require(static_cast<std::size_t>(problem.unitary.rows()) == m && static_cast<std::size_t>(problem.unitary.cols()) == m,
          "unitary dimension does not match the squeezing vector");

  const auto rows = static_cast<Eigen::Index>(realizations);
  ComplexRows input(rows, static_cast<Eigen::Index>(m));
  ComplexRows output(rows, static_cast<Eigen::Index>(m));
  SampleBatch samples(realizations, m);

  auto start = std::chrono::steady_clock::now();
  fill_squeezed(input, problem.squeeze, rng_seed);
  samples.timings["generate"] = seconds_since(start);

  start = std::chrono::steady_clock::now();
  output.noalias() = input * problem.unitary.transpose();
  samples.timings["propagate"] = seconds_since(start);

  start = std::chrono::steady_clock::now();
  detect_into(samples, output, problem.thresholds);
  samples.timings["threshold"] = seconds_since(start);
  samples.timings["decompose"] = problem.decompose_seconds;
  return samples;
}

void write_samples(std::ostream& out, const SampleBatch& batch) {
  std::string line(batch.modes(), '0');
  for (std::size_t n = 0; n < batch.realizations(); ++n) {
    const auto r = batch.row(n);
    for (std::size_t m = 0; m < batch.modes(); ++m) line[m] = r[m] ? '1' : '0';
    out << line << '\n';
  }
}

SampleBatch read_samples(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!lines.empty() && line.size() != lines.front().size())
      fail(ErrorKind::Format, "sample rows have inconsistent lengths");
    if (line.find_first_not_of("01") != std::string::npos) fail(ErrorKind::Format, "sample rows must be 0/1 strings");
    lines.push_back(std::move(line));
  }
  if (lines.empty()) fail(ErrorKind::Format, "no samples");
  SampleBatch batch(lines.size(), lines.front().size());
  for (std::size_t n = 0; n < lines.size(); ++n)
    for (std::size_t m = 0; m < batch.modes(); ++m) batch.set_click(n, m, lines[n][m] == '1');
  return batch;
}

nlohmann::json samples_sidecar(const SampleBatch& batch, const nlohmann::json& parameters) {
  return {
      {"schema", "tgbs.samples.v1"},
      {"realizations", batch.realizations()},
      {"modes", batch.modes()},
      {"mean_click_count", batch.mean_click_count()},
      {"timings", batch.timings},
      {"parameters", parameters},
  };
}

}  // namespace tgbs
