#include "qcompile/train.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qcompile/policy.hpp"
#include "qcompile/rmsprop.hpp"

namespace qcompile {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double rollout_std(const std::vector<double>& rewards, double mean) {
  if (rewards.size() < 2) return 0.0;
  double sq = 0.0;
  for (double r : rewards) sq += (r - mean) * (r - mean);
  return std::sqrt(sq / static_cast<double>(rewards.size() - 1));
}

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double exact_fidelity_at(const AnsatzSpec& spec, const Circuit& target,
                         const InitialStateSet& states, const std::vector<double>& theta) {
  FidelityEvaluator eval(target, states, EvalMode::exact_mode(), NoiseModel{});
  RandomStream rng(0);  // exact noiseless evaluation consumes no randomness
  return eval.evaluate_mean(adjoint(build_ansatz(spec, theta)), rng);
}

void check_finite_reward(double reward, int iteration) {
  if (!std::isfinite(reward))
    throw std::runtime_error("non-finite reward at iteration " + std::to_string(iteration) +
                             " (simulator fault)");
}

}  // namespace

TrainingInstance make_instance(const ExperimentConfig& config) {
  config.validate();
  const ExperimentConfig c = config.resolved();
  TrainingInstance inst;
  inst.spec = AnsatzSpec(c.n_qubits, *c.depth, *c.connectivity);

  RandomStream master(c.master_seed);
  RandomStream target_rng = master.derive("target");
  inst.target = random_target(inst.spec, target_rng);

  RandomStream states_rng = master.derive("train-states");
  inst.train_states = generate_training_states(c.n_qubits, *c.m_train, states_rng);

  RandomStream init_rng = master.derive("init");
  const int d = param_count(inst.spec);
  inst.theta0.resize(d);
  for (int j = 0; j < d; ++j) inst.theta0[j] = init_rng.uniform(0.0, 2.0 * M_PI);
  if (c.init_at_target) inst.theta0 = inst.target.hidden_params;
  return inst;
}

EvalMode eval_mode(const ExperimentConfig& config) {
  if (!config.shots) return EvalMode::exact_mode();
  return EvalMode::shot_mode(*config.shots, config.faults_per_shot);
}

TrainingTrace train_pg(const ExperimentConfig& config) {
  const auto t_start = Clock::now();
  const ExperimentConfig c = config.resolved();
  TrainingInstance inst = make_instance(c);
  const int d = param_count(inst.spec);
  const int total_iters = *c.iterations;
  const std::size_t m = inst.train_states.size();

  FidelityEvaluator evaluator(inst.target.circuit, inst.train_states, eval_mode(c),
                              NoiseModel(c.noise_p));
  RandomStream master(c.master_seed);

  std::vector<double> mu = inst.theta0;
  std::vector<double> sigma(d, c.sigma_initial);
  const CovarianceSchedule schedule(c.sigma_initial, c.sigma_final, total_iters);
  RmsPropState rms_mu(d, c.gamma, c.eta, c.epsilon_reg);
  RmsPropState rms_sigma(d, c.gamma, c.eta, c.epsilon_reg);

  TrainingTrace trace;
  trace.rows.reserve(total_iters);

  RolloutBatch batch;
  batch.samples.resize(c.n_rollouts);
  batch.rewards.resize(c.n_rollouts);

  for (int t = 0; t < total_iters; ++t) {
    const auto t_iter = Clock::now();
    const double sigma_t = schedule_sigma(t, schedule);
    if (!c.learn_sigma) sigma.assign(d, sigma_t);
    const GaussianPolicy policy(mu, sigma);

    for (int g = 0; g < c.n_rollouts; ++g) {
      const std::uint64_t rollout_index =
          static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(c.n_rollouts) +
          static_cast<std::uint64_t>(g);
      RandomStream rollout_rng = master.derive("rollout", rollout_index);
      batch.samples[g] = sample(policy, rollout_rng);
      const Circuit v_dagger = adjoint(build_ansatz(inst.spec, batch.samples[g]));
      double reward;
      if (c.sample_one_state) {
        const std::size_t s = rollout_rng.uniform_index(m);
        RandomStream state_rng =
            rollout_rng.derive(member_label(inst.train_states.members[s], s));
        reward = reward_for_state(inst.target.circuit, v_dagger, inst.train_states.members[s],
                                  eval_mode(c), NoiseModel(c.noise_p), state_rng);
      } else {
        reward = evaluator.evaluate_mean(v_dagger, rollout_rng);
      }
      check_finite_reward(reward, t + 1);
      batch.rewards[g] = reward;
    }

    estimate_policy_gradient(batch, policy);
    rmsprop_step(rms_mu, mu, batch.grad_mu);
    if (c.learn_sigma) {
      rmsprop_step(rms_sigma, sigma, batch.grad_sigma);
      for (double& s : sigma)
        if (s < 1e-10) s = 1e-10;
    }

    TraceRow row;
    row.iteration = t + 1;
    row.reward_mean = batch.baseline;  // batch-mean reward
    row.reward_std = rollout_std(batch.rewards, batch.baseline);
    row.sigma_t = c.learn_sigma ? sigma[0] : sigma_t;
    row.baseline = batch.baseline;
    row.grad_norm = l2_norm(batch.grad_mu);
    row.degenerate = batch.degenerate;
    row.wall_ms = ms_since(t_iter);
    trace.rows.push_back(row);
  }

  trace.theta_star = mu;
  trace.evals_run = static_cast<std::int64_t>(total_iters) * c.n_rollouts;
  trace.finalize_asymptotics();
  trace.final_exact_fidelity = exact_fidelity_at(inst.spec, inst.target.circuit,
                                                 inst.train_states, trace.theta_star);
  trace.wall_s_total = ms_since(t_start) / 1000.0;
  return trace;
}

TrainingTrace train_dfo(const ExperimentConfig& config, Method method) {
  if (method == Method::pg) throw std::invalid_argument("train_dfo expects a DFO method");
  const auto t_start = Clock::now();
  ExperimentConfig c = config;
  c.method = method;
  c = c.resolved();
  TrainingInstance inst = make_instance(c);

  FidelityEvaluator evaluator(inst.target.circuit, inst.train_states, eval_mode(c),
                              NoiseModel(c.noise_p));
  RandomStream master(c.master_seed);
  RandomStream restart_rng = master.derive("dfo-restart");

  std::int64_t eval_index = 0;
  std::vector<double> eval_ms;
  const Objective objective = [&](const std::vector<double>& theta) {
    const auto t_eval = Clock::now();
    RandomStream eval_rng = master.derive("dfo-eval", static_cast<std::uint64_t>(eval_index++));
    const Circuit v_dagger = adjoint(build_ansatz(inst.spec, theta));
    const double reward = evaluator.evaluate_mean(v_dagger, eval_rng);
    check_finite_reward(reward, static_cast<int>(eval_index));
    eval_ms.push_back(ms_since(t_eval));
    return reward;
  };

  const DfoOptions opts = c.dfo_options();
  const DfoResult result = (method == Method::nelder_mead)
                               ? nelder_mead(objective, inst.theta0, opts, restart_rng)
                               : powell(objective, inst.theta0, opts, restart_rng);

  TrainingTrace trace;
  trace.rows.reserve(result.trace.size());
  for (const DfoTraceRow& r : result.trace) {
    TraceRow row;
    row.iteration = static_cast<int>(r.eval);
    row.reward_mean = r.value;
    row.baseline = r.best;
    row.wall_ms = eval_ms[static_cast<std::size_t>(r.eval - 1)];
    trace.rows.push_back(row);
  }
  trace.theta_star = result.best_x;
  trace.evals_run = result.evals;
  trace.budget_exhausted = result.budget_exhausted;
  trace.finalize_asymptotics();
  trace.final_exact_fidelity =
      exact_fidelity_at(inst.spec, inst.target.circuit, inst.train_states, trace.theta_star);
  trace.wall_s_total = ms_since(t_start) / 1000.0;
  return trace;
}

TrainingTrace train(const ExperimentConfig& config) {
  if (config.method == Method::pg) return train_pg(config);
  return train_dfo(config, config.method);
}

}  // namespace qcompile
