#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcompile/ansatz.hpp"
#include "qcompile/batched_state.hpp"
#include "qcompile/circuit.hpp"
#include "qcompile/initial_states.hpp"
#include "qcompile/noise.hpp"
#include "qcompile/random.hpp"

namespace qcompile {

/// Reward evaluation mode. Exact mode reads the overlap off the simulator;
/// shot mode estimates the all-zeros probability after un-preparing |k> with
/// a finite number of measurement repetitions.
struct EvalMode {
  std::optional<std::int64_t> shots;  // nullopt = exact
  bool faults_per_shot = false;       // resample the noise trajectory per shot

  bool exact() const { return !shots.has_value(); }
  static EvalMode exact_mode() { return {}; }
  static EvalMode shot_mode(std::int64_t shots, bool per_shot_faults = false) {
    return {shots, per_shot_faults};
  }
};

struct FidelityEstimate {
  double value = 0.0;
  std::vector<double> per_state;
  EvalMode mode;
};

/// r_k = |<k| V_dagger U |k>|^2 for one initial state, in the given mode.
/// Noise faults are inserted in the target and V_dagger circuits only; the
/// preparation (and its inverse in shot mode) stays ideal.
double reward_for_state(const Circuit& target, const Circuit& v_dagger,
                        const StateSetMember& member, const EvalMode& mode,
                        const NoiseModel& noise, RandomStream& rng);

/// Mean of reward_for_state over the set (uniform weights 1/m). Per-state
/// RNG streams derive from `rng` by member label, so the per-state loop is
/// order-independent and safe to parallelize.
FidelityEstimate estimate_fidelity(const Circuit& target, const Circuit& v_dagger,
                                   const InitialStateSet& states, const EvalMode& mode,
                                   const NoiseModel& noise, RandomStream& rng);

/// Caching evaluator for repeated estimates against a fixed target and state
/// set, as in a training loop. Noiseless exact evaluation runs on a batched
/// kernel over all states at once; noiseless shot mode reuses cached U|k>
/// states; noisy evaluation falls back to fresh per-state trajectories.
/// Results match the free-function path (bit-equal in the cached-state
/// paths, same distribution in the batched one).
class FidelityEvaluator {
 public:
  FidelityEvaluator(Circuit target, InitialStateSet states, EvalMode mode, NoiseModel noise);

  FidelityEstimate evaluate(const Circuit& v_dagger, RandomStream& rollout_rng);
  double evaluate_mean(const Circuit& v_dagger, RandomStream& rollout_rng);

  const Circuit& target() const { return target_; }
  const InitialStateSet& states() const { return states_; }
  const EvalMode& mode() const { return mode_; }
  const NoiseModel& noise() const { return noise_; }
  std::size_t state_count() const { return states_.size(); }

 private:
  Circuit target_;
  InitialStateSet states_;
  EvalMode mode_;
  NoiseModel noise_;
  std::vector<std::string> labels_;
  std::vector<StateVector> prepared_;  // |k>
  std::vector<StateVector> evolved_;   // U|k>, noiseless
  bool batched_ = false;
  BatchedState k_batch_;
  BatchedState uk_batch_;
  BatchedState scratch_;
  StateVector work_;
};

}  // namespace qcompile
