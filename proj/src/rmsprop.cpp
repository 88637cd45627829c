#include "qcompile/rmsprop.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile {

RmsPropState::RmsPropState(std::size_t dim, double gamma_, double eta_, double epsilon_reg_)
    : sigma_g(dim, 0.0), gamma(gamma_), eta(eta_), epsilon_reg(epsilon_reg_) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0, 1)");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (!(epsilon_reg > 0.0)) throw std::invalid_argument("epsilon_reg must be positive");
}

void rmsprop_step(RmsPropState& state, std::vector<double>& params,
                  const std::vector<double>& grad) {
  if (params.size() != grad.size() || params.size() != state.sigma_g.size())
    throw std::invalid_argument("rmsprop dimension mismatch");
  for (std::size_t j = 0; j < params.size(); ++j) {
    if (!std::isfinite(grad[j])) throw std::invalid_argument("non-finite gradient entry");
    state.sigma_g[j] = state.gamma * state.sigma_g[j] + (1.0 - state.gamma) * grad[j] * grad[j];
    params[j] += state.eta * grad[j] / std::sqrt(state.sigma_g[j] + state.epsilon_reg);
  }
}

}  // namespace qcompile
