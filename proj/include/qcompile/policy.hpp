#pragma once

#include <vector>

#include "qcompile/random.hpp"

namespace qcompile {

/// Gaussian stochastic policy over the d circuit angles: mean vector mu and
/// diagonal covariance sigma (variances, not standard deviations).
struct GaussianPolicy {
  std::vector<double> mu;
  std::vector<double> sigma;

  GaussianPolicy() = default;
  GaussianPolicy(std::vector<double> mean, std::vector<double> variance);

  std::size_t dim() const { return mu.size(); }
};

/// Linear exploration-exploitation schedule for the (isotropic) diagonal
/// covariance: sigma(t) = (1 - t/T) sigma_i + (t/T) sigma_f.
struct CovarianceSchedule {
  double sigma_initial = 1e-2;
  double sigma_final = 1e-5;
  int total_iterations = 1;

  CovarianceSchedule() = default;
  CovarianceSchedule(double initial, double final_value, int total);
};

/// Diagonal value at iteration t; t > T clamps to sigma_final (the trainer
/// flags it). 0 <= t.
double schedule_sigma(int t, const CovarianceSchedule& schedule);

/// theta_j = mu_j + sqrt(sigma_j) z_j, z standard normal per coordinate.
std::vector<double> sample(const GaussianPolicy& policy, RandomStream& rng);

/// grad_mu log pi(x; mu, sigma) = (x - mu) / sigma, coordinatewise.
std::vector<double> log_grad_mu(const GaussianPolicy& policy, const std::vector<double>& x);

/// grad_sigma log pi(x; mu, sigma) = -(1/(2 sigma)) (1 - (x-mu)^2 / sigma).
std::vector<double> log_grad_sigma(const GaussianPolicy& policy, const std::vector<double>& x);

/// log pi(x; mu, sigma) (diagonal Gaussian); used by the finite-difference
/// checks.
double log_density(const GaussianPolicy& policy, const std::vector<double>& x);

/// One REINFORCE batch: sampled angle vectors, their rewards, the batch-mean
/// baseline and the resulting gradient estimates for mu and sigma (the
/// trainer chooses what to apply; sigma's is unused under the schedule).
struct RolloutBatch {
  std::vector<std::vector<double>> samples;
  std::vector<double> rewards;
  double baseline = 0.0;
  std::vector<double> grad_mu;
  std::vector<double> grad_sigma;
  bool degenerate = false;  // all rewards identical -> zero gradient
};

/// grad = (1/N) sum_g (r_g - b) grad log pi(theta_g), b = mean reward.
/// Requires N >= 2. The reduction is an ordered sum over rollout index.
void estimate_policy_gradient(RolloutBatch& batch, const GaussianPolicy& policy);

}  // namespace qcompile
