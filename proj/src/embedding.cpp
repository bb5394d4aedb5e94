#include "tgbs/embedding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <vector>

#include "tgbs/error.hpp"

namespace tgbs {

TakagiFactors takagi_decompose(const Eigen::MatrixXd& a) {
  require(a.rows() == a.cols() && a.rows() >= 1, "takagi_decompose needs a non-empty square matrix");
  require(a.allFinite(), "matrix entries must be finite");
  require((a - a.transpose()).cwiseAbs().maxCoeff() < 1e-12, "matrix is not symmetric");
  const auto m = a.rows();

  if (a.isZero(0.0)) {
    return {Eigen::MatrixXcd::Identity(m, m), Eigen::VectorXd::Zero(m)};
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  if (eig.info() != Eigen::Success) fail(ErrorKind::Numeric, "symmetric eigensolver did not converge");
  const Eigen::VectorXd& mu = eig.eigenvalues();
  const Eigen::MatrixXd& v = eig.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return std::abs(mu(i)) > std::abs(mu(j)); });

  TakagiFactors out{Eigen::MatrixXcd(m, m), Eigen::VectorXd(m)};
  const std::complex<double> i_unit(0.0, 1.0);
  for (Eigen::Index col = 0; col < m; ++col) {
    const auto src = order[static_cast<std::size_t>(col)];
    out.lambdas(col) = std::abs(mu(src));
    if (mu(src) >= 0.0)
      out.unitary.col(col) = v.col(src).cast<std::complex<double>>();
    else
      out.unitary.col(col) = i_unit * v.col(src).cast<std::complex<double>>();
  }
  return out;
}

double mean_photon_number(const Eigen::VectorXd& squeeze) {
  double n = 0.0;
  for (double r : squeeze) n += std::sinh(r) * std::sinh(r);
  return n;
}

namespace {

/// sum x^2 / (1 - x^2) for x_m = t * ratio_m.
double photon_sum(const Eigen::VectorXd& ratios, double t) {
  double total = 0.0;
  for (double q : ratios) {
    const double x = t * q;
    total += x * x / ((1.0 - x) * (1.0 + x));
  }
  return total;
}

}  // namespace

SqueezeSchedule rescale_to_mean_photon(const Eigen::VectorXd& lambdas, double mean_photon_target) {
  require(mean_photon_target > 0.0 && std::isfinite(mean_photon_target), "mean photon target must be positive");
  require(lambdas.size() >= 1 && lambdas.allFinite() && lambdas.minCoeff() >= 0.0,
          "lambdas must be finite and non-negative");
  const double lambda_max = lambdas.maxCoeff();
  if (lambda_max <= 0.0) fail(ErrorKind::NoSignal, "all Takagi values are zero (graph has no edges)");

  // Bisect on t = c * lambda_max in (0, 1). With s = sum (l/l_max)^2 the
  // photon sum is bounded by s t^2 <= f(t) <= s t^2 / (1 - t^2), which
  // brackets the root tightly even for very small targets.
  const Eigen::VectorXd ratios = lambdas / lambda_max;
  const double s = ratios.squaredNorm();
  const double target = mean_photon_target;
  double lo = std::sqrt(target / (s + target));
  double hi = std::min(1.0, std::sqrt(target / s));
  double t = 0.5 * (lo + hi);
  double value = photon_sum(ratios, t);
  for (int iter = 0; iter < 200 && std::abs(value - target) > 1e-13 * target; ++iter) {
    if (value > target)
      hi = t;
    else
      lo = t;
    const double mid = 0.5 * (lo + hi);
    if (mid == t) break;
    t = mid;
    value = photon_sum(ratios, t);
  }
  if (!(std::abs(value - target) <= 1e-10 * target) || !(t < 1.0))
    fail(ErrorKind::Numeric, "mean photon rescaling did not converge");

  SqueezeSchedule out{t / lambda_max, Eigen::VectorXd(lambdas.size())};
  for (Eigen::Index m = 0; m < lambdas.size(); ++m) out.squeeze(m) = std::atanh(t * ratios(m));
  return out;
}

Eigen::MatrixXd weighted_encode(const Graph& g, double alpha) {
  require(alpha >= 0.0 && std::isfinite(alpha), "alpha must be non-negative");
  const auto& w = g.node_weights();
  const auto m = static_cast<Eigen::Index>(g.node_count());
  // Edge presence only, matching the unweighted degree matrix.
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index u = 0; u < m; ++u) {
    const auto nbrs = g.neighbors(static_cast<NodeId>(u));
    laplacian(u, u) = static_cast<double>(nbrs.size());
    for (NodeId v : nbrs) laplacian(u, static_cast<Eigen::Index>(v)) = -1.0;
  }
  const Eigen::VectorXd omega = Eigen::VectorXd::Ones(m) + alpha * w;
  return omega.asDiagonal() * laplacian * omega.asDiagonal();
}

EmbeddedProblem embed(const Eigen::MatrixXd& a, double mean_photon_target, double gamma) {
  require(gamma >= 0.0, "threshold must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  TakagiFactors factors = takagi_decompose(a);
  const auto stop = std::chrono::steady_clock::now();
  SqueezeSchedule schedule = rescale_to_mean_photon(factors.lambdas, mean_photon_target);

  EmbeddedProblem p;
  p.unitary = std::move(factors.unitary);
  p.lambdas = std::move(factors.lambdas);
  p.squeeze = std::move(schedule.squeeze);
  p.scale = schedule.scale;
  p.thresholds = Eigen::VectorXd::Constant(p.lambdas.size(), gamma);
  p.mean_photon_target = mean_photon_target;
  p.decompose_seconds = std::chrono::duration<double>(stop - start).count();
  return p;
}

nlohmann::json to_json(const EmbeddedProblem& p) {
  const auto m = static_cast<Eigen::Index>(p.modes());
  nlohmann::json unitary = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) unitary.push_back({p.unitary(i, j).real(), p.unitary(i, j).imag()});
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.begin(), v.end()); };
  return {
      {"modes", m},
      {"unitary", std::move(unitary)},
      {"lambdas", vec(p.lambdas)},
      {"squeeze", vec(p.squeeze)},
      {"scale", p.scale},
      {"thresholds", vec(p.thresholds)},
      {"mean_photon_target", p.mean_photon_target},
  };
}

EmbeddedProblem embedded_problem_from_json(const nlohmann::json& j) {
  try {
    const auto m = j.at("modes").get<Eigen::Index>();
    const auto& unitary = j.at("unitary");
    if (m < 1 || static_cast<Eigen::Index>(unitary.size()) != m * m)
      fail(ErrorKind::Format, "unitary must hold modes^2 entries");
    auto vec = [&](const char* key) {
      const auto values = j.at(key).get<std::vector<double>>();
      if (static_cast<Eigen::Index>(values.size()) != m) fail(ErrorKind::Format, std::string(key) + " has wrong length");
      return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(values.data(), m));
    };
    EmbeddedProblem p;
    p.unitary.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index k = 0; k < m; ++k) {
        const auto& pair = unitary.at(static_cast<std::size_t>(i * m + k));
        p.unitary(i, k) = {pair.at(0).get<double>(), pair.at(1).get<double>()};
      }
    p.lambdas = vec("lambdas");
    p.squeeze = vec("squeeze");
    p.thresholds = vec("thresholds");
    p.scale = j.at("scale").get<double>();
    p.mean_photon_target = j.at("mean_photon_target").get<double>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Format, std::string("embedded problem JSON: ") + e.what());
  }
}

}  // namespace tgbs
