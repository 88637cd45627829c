#include "qcompile/fidelity.hpp"

#include <stdexcept>

namespace qcompile {

namespace {

double clamp_reward(double r) { return r < 0.0 ? 0.0 : (r > 1.0 ? 1.0 : r); }

void apply_prep_adjoint(StateVector& state, const PrepCircuit& prep) {
  for (auto it = prep.gates.rbegin(); it != prep.gates.rend(); ++it) state.apply(it->adjoint());
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double shot_reward(StateVector& psi, const PrepCircuit& prep, std::int64_t shots,
                   RandomStream& rng) {
  apply_prep_adjoint(psi, prep);
  return sample_zero_outcome(psi, shots, rng);
}

}  // namespace

double reward_for_state(const Circuit& target, const Circuit& v_dagger,
                        const StateSetMember& member, const EvalMode& mode,
                        const NoiseModel& noise, RandomStream& rng) {
  if (target.n_qubits != v_dagger.n_qubits)
    throw std::invalid_argument("target/trainee qubit count mismatch");
  const StateVector k = prepare_state(member, target.n_qubits);

  if (mode.exact()) {
    StateVector psi = k;
    apply_circuit_inplace(psi, target, noise, rng);
    apply_circuit_inplace(psi, v_dagger, noise, rng);
    return clamp_reward(overlap_probability(k, psi));
  }

  const auto* prep = std::get_if<PrepCircuit>(&member);
  if (prep == nullptr)
    throw std::invalid_argument("shot mode requires a preparation circuit member");
  const std::int64_t shots = *mode.shots;
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");

  if (mode.faults_per_shot && noise.enabled()) {
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < shots; ++s) {
      StateVector psi = k;
      apply_circuit_inplace(psi, target, noise, rng);
      apply_circuit_inplace(psi, v_dagger, noise, rng);
      apply_prep_adjoint(psi, *prep);
      double p0 = std::norm(psi.amplitude(0));
      if (p0 > 1.0) p0 = 1.0;
      if (rng.uniform() < p0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
  }

  StateVector psi = k;
  apply_circuit_inplace(psi, target, noise, rng);
  apply_circuit_inplace(psi, v_dagger, noise, rng);
  return shot_reward(psi, *prep, shots, rng);
}

FidelityEstimate estimate_fidelity(const Circuit& target, const Circuit& v_dagger,
                                   const InitialStateSet& states, const EvalMode& mode,
                                   const NoiseModel& noise, RandomStream& rng) {
  if (states.members.empty()) throw std::invalid_argument("initial state set is empty");
  FidelityEstimate est;
  est.mode = mode;
  est.per_state.reserve(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    RandomStream state_rng = rng.derive(member_label(states.members[s], s));
    est.per_state.push_back(
        reward_for_state(target, v_dagger, states.members[s], mode, noise, state_rng));
  }
  est.value = mean_of(est.per_state);
  return est;
}

FidelityEvaluator::FidelityEvaluator(Circuit target, InitialStateSet states, EvalMode mode,
                                     NoiseModel noise)
    : target_(std::move(target)),
      states_(std::move(states)),
      mode_(mode),
      noise_(noise),
      work_(target_.n_qubits) {
  if (states_.members.empty()) throw std::invalid_argument("initial state set is empty");
  if (states_.n_qubits != target_.n_qubits)
    throw std::invalid_argument("state set qubit count mismatch");
  const std::size_t m = states_.size();
  labels_.reserve(m);
  prepared_.reserve(m);
  for (std::size_t s = 0; s < m; ++s) {
    labels_.push_back(member_label(states_.members[s], s));
    prepared_.push_back(prepare_state(states_.members[s], target_.n_qubits));
  }

  if (!mode_.exact()) {
    for (const auto& member : states_.members) {
      if (!std::holds_alternative<PrepCircuit>(member))
        throw std::invalid_argument("shot mode requires preparation circuit members");
    }
  }

  if (!noise_.enabled()) {
    if (mode_.exact()) {
      batched_ = true;
      k_batch_ = BatchedState(target_.n_qubits, m);
      for (std::size_t s = 0; s < m; ++s) k_batch_.set_column(s, prepared_[s]);
      uk_batch_ = BatchedState(target_.n_qubits, m);
      uk_batch_.assign_from(k_batch_);
      uk_batch_.apply(target_);
      scratch_ = BatchedState(target_.n_qubits, m);
    } else {
      evolved_.reserve(m);
      for (std::size_t s = 0; s < m; ++s)
        evolved_.push_back(apply_circuit(prepared_[s], target_));
    }
  }
}

FidelityEstimate FidelityEvaluator::evaluate(const Circuit& v_dagger, RandomStream& rollout_rng) {
  FidelityEstimate est;
  est.mode = mode_;
  const std::size_t m = states_.size();

  if (batched_) {
    scratch_.assign_from(uk_batch_);
    scratch_.apply(v_dagger);
    est.per_state = scratch_.overlap_probabilities(k_batch_);
    for (double& r : est.per_state) r = clamp_reward(r);
    est.value = mean_of(est.per_state);
    return est;
  }

  est.per_state.resize(m);
  for (std::size_t s = 0; s < m; ++s) {
    RandomStream state_rng = rollout_rng.derive(labels_[s]);
    if (!noise_.enabled()) {
      // noiseless shot mode: U|k> is cached
      work_ = evolved_[s];
      apply_circuit_inplace(work_, v_dagger);
      est.per_state[s] =
          shot_reward(work_, std::get<PrepCircuit>(states_.members[s]), *mode_.shots, state_rng);
    } else {
      est.per_state[s] = reward_for_state(target_, v_dagger, states_.members[s], mode_, noise_,
                                          state_rng);
    }
  }
  est.value = mean_of(est.per_state);
  return est;
}

double FidelityEvaluator::evaluate_mean(const Circuit& v_dagger, RandomStream& rollout_rng) {
  return evaluate(v_dagger, rollout_rng).value;
}

}  // namespace qcompile
