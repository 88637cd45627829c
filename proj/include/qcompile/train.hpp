#pragma once

#include "qcompile/ansatz.hpp"
#include "qcompile/config.hpp"
#include "qcompile/fidelity.hpp"
#include "qcompile/trace.hpp"

namespace qcompile {

/// The shared problem instance for one (config, master_seed): hidden target,
/// training states and the initial parameter point. Every method run under
/// the same master seed sees the same instance, so method comparisons are
/// paired. Derivation tokens: "target", "train-states", "init".
struct TrainingInstance {
  AnsatzSpec spec;
  TargetUnitary target;
  InitialStateSet train_states;
  std::vector<double> theta0;  // PG mu0 and DFO x0, uniform [0, 2pi)
};

TrainingInstance make_instance(const ExperimentConfig& config);

EvalMode eval_mode(const ExperimentConfig& config);

/// REINFORCE with the covariance schedule and RMSprop ascent on mu.
TrainingTrace train_pg(const ExperimentConfig& config);

/// Derivative-free training on the same objective; one trace row per
/// objective evaluation.
TrainingTrace train_dfo(const ExperimentConfig& config, Method method);

/// Dispatches on config.method.
TrainingTrace train(const ExperimentConfig& config);

}  // namespace qcompile
