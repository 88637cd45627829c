#pragma once

#include <vector>

namespace qcompile {

/// RMSprop state for gradient ascent: a per-parameter moving discounted
/// average of squared gradients, discount gamma, step size eta, regularizer
/// epsilon. Update:
///   sigma_g <- gamma sigma_g + (1 - gamma) g^2
///   theta   <- theta + eta g / sqrt(sigma_g + epsilon)
struct RmsPropState {
  std::vector<double> sigma_g;
  double gamma = 0.9;
  double eta = 2.5e-3;
  double epsilon_reg = 1e-8;

  RmsPropState() = default;
  RmsPropState(std::size_t dim, double gamma, double eta, double epsilon_reg);
};

void rmsprop_step(RmsPropState& state, std::vector<double>& params,
                  const std::vector<double>& grad);

}  // namespace qcompile
