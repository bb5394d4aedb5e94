#pragma once

#include <complex>

#include <Eigen/Dense>
#include <json.hpp>

#include "tgbs/graph.hpp"

namespace tgbs {

/// A = U diag(lambdas) U^T with U unitary and lambdas >= 0, descending.
struct TakagiFactors {
  Eigen::MatrixXcd unitary;
  Eigen::VectorXd lambdas;
};

/// Takagi factorization of a real symmetric matrix via its eigendecomposition:
/// columns belonging to negative eigenvalues pick up a factor of i so that
/// U diag(|mu|) U^T reproduces A.
TakagiFactors takagi_decompose(const Eigen::MatrixXd& a);

struct SqueezeSchedule {
  double scale = 0.0;
  Eigen::VectorXd squeeze;
};

/// Sum of sinh^2(r_m), the mean photon number of a squeezing vector.
double mean_photon_number(const Eigen::VectorXd& squeeze);

/// Finds c in (0, 1/lambda_max) with sum (c l)^2 / (1 - (c l)^2) = target by
/// bisection and returns r_m = atanh(c l_m).
SqueezeSchedule rescale_to_mean_photon(const Eigen::VectorXd& lambdas, double mean_photon_target);

/// Omega (D - A) Omega with Omega = diag(1 + alpha w_i) and D the unweighted
/// degree matrix.
Eigen::MatrixXd weighted_encode(const Graph& g, double alpha);

/// A fully programmed sampler run.
struct EmbeddedProblem {
  Eigen::MatrixXcd unitary;
  Eigen::VectorXd lambdas;
  Eigen::VectorXd squeeze;
  double scale = 0.0;
  Eigen::VectorXd thresholds;
  double mean_photon_target = 0.0;
  /// Wall-clock seconds spent in takagi_decompose; not serialized.
  double decompose_seconds = 0.0;

  std::size_t modes() const noexcept { return static_cast<std::size_t>(squeeze.size()); }
};

inline constexpr double kDefaultThreshold = 1.0;
inline constexpr double kDefaultMeanPhoton = 5.0;
inline constexpr double kDefaultWeightAlpha = 1.0;

EmbeddedProblem embed(const Eigen::MatrixXd& a, double mean_photon_target, double gamma = kDefaultThreshold);

nlohmann::json to_json(const EmbeddedProblem& p);
EmbeddedProblem embedded_problem_from_json(const nlohmann::json& j);

}  // namespace tgbs
