#include "qcompile/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile {

GaussianPolicy::GaussianPolicy(std::vector<double> mean, std::vector<double> variance)
    : mu(std::move(mean)), sigma(std::move(variance)) {
  if (mu.size() != sigma.size()) throw std::invalid_argument("mu/sigma dimension mismatch");
  for (double m : mu)
    if (!std::isfinite(m)) throw std::invalid_argument("policy mean must be finite");
  for (double s : sigma)
    if (!(s > 0.0)) throw std::invalid_argument("policy variances must be positive");
}

CovarianceSchedule::CovarianceSchedule(double initial, double final_value, int total)
    : sigma_initial(initial), sigma_final(final_value), total_iterations(total) {
  if (!(sigma_final > 0.0)) throw std::invalid_argument("sigma_final must be positive");
  if (sigma_initial < sigma_final)
    throw std::invalid_argument("schedule requires sigma_initial >= sigma_final");
  if (total < 1) throw std::invalid_argument("schedule length must be >= 1");
}

double schedule_sigma(int t, const CovarianceSchedule& schedule) {
  if (t < 0) throw std::invalid_argument("schedule iteration must be >= 0");
  if (t > schedule.total_iterations) return schedule.sigma_final;  // clamped
  const double f = static_cast<double>(t) / static_cast<double>(schedule.total_iterations);
  return (1.0 - f) * schedule.sigma_initial + f * schedule.sigma_final;
}

std::vector<double> sample(const GaussianPolicy& policy, RandomStream& rng) {
  std::vector<double> theta(policy.dim());
  for (std::size_t j = 0; j < theta.size(); ++j)
    theta[j] = policy.mu[j] + std::sqrt(policy.sigma[j]) * rng.normal();
  return theta;
}

std::vector<double> log_grad_mu(const GaussianPolicy& policy, const std::vector<double>& x) {
  if (x.size() != policy.dim()) throw std::invalid_argument("sample dimension mismatch");
  std::vector<double> g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) g[j] = (x[j] - policy.mu[j]) / policy.sigma[j];
  return g;
}

std::vector<double> log_grad_sigma(const GaussianPolicy& policy, const std::vector<double>& x) {
  if (x.size() != policy.dim()) throw std::invalid_argument("sample dimension mismatch");
  std::vector<double> g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - policy.mu[j];
    const double s = policy.sigma[j];
    g[j] = -(0.5 / s) * (1.0 - d * d / s);
  }
  return g;
}

double log_density(const GaussianPolicy& policy, const std::vector<double>& x) {
  if (x.size() != policy.dim()) throw std::invalid_argument("sample dimension mismatch");
  double lp = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - policy.mu[j];
    lp += -0.5 * std::log(2.0 * M_PI * policy.sigma[j]) - 0.5 * d * d / policy.sigma[j];
  }
  return lp;
}

void estimate_policy_gradient(RolloutBatch& batch, const GaussianPolicy& policy) {
  const std::size_t n = batch.samples.size();
  if (n < 2) throw std::invalid_argument("gradient estimate needs at least 2 rollouts");
  if (batch.rewards.size() != n) throw std::invalid_argument("rewards/samples size mismatch");
  const std::size_t d = policy.dim();

  double baseline = 0.0;
  for (double r : batch.rewards) baseline += r;
  baseline /= static_cast<double>(n);
  batch.baseline = baseline;

  batch.grad_mu.assign(d, 0.0);
  batch.grad_sigma.assign(d, 0.0);
  bool all_equal = true;
  for (std::size_t g = 0; g < n; ++g) {
    const double advantage = batch.rewards[g] - baseline;
    if (batch.rewards[g] != batch.rewards[0]) all_equal = false;
    const std::vector<double>& theta = batch.samples[g];
    if (theta.size() != d) throw std::invalid_argument("sample dimension mismatch");
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = theta[j] - policy.mu[j];
      const double s = policy.sigma[j];
      batch.grad_mu[j] += advantage * diff / s;
      batch.grad_sigma[j] += advantage * (-(0.5 / s) * (1.0 - diff * diff / s));
    }
  }
  if (all_equal) {
    // identical rewards: the advantage vanishes identically, so return an
    // exact zero instead of accumulated rounding residue
    batch.grad_mu.assign(d, 0.0);
    batch.grad_sigma.assign(d, 0.0);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < d; ++j) {
    batch.grad_mu[j] *= inv_n;
    batch.grad_sigma[j] *= inv_n;
    if (!std::isfinite(batch.grad_mu[j]) || !std::isfinite(batch.grad_sigma[j]))
      throw std::runtime_error("non-finite policy gradient");
  }
  batch.degenerate = all_equal;
}

}  // namespace qcompile
