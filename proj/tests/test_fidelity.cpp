#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcompile/fidelity.hpp"
#include "qcompile/hoeffding.hpp"

using namespace qcompile;

namespace {

// Tomographically complete product-state basis on n qubits: per qubit
// {|0>, |1>, |+>, |+i>}; F_full is the mean reward over all 4^n of them.
InitialStateSet tomographic_basis(int n) {
  InitialStateSet set;
  set.kind = StateSetKind::training;
  set.n_qubits = n;
  const int total = 1 << (2 * n);
  for (int idx = 0; idx < total; ++idx) {
    PrepCircuit prep;
    int code = idx;
    for (int q = 0; q < n; ++q) {
      const int local = code & 3;
      code >>= 2;
      if (q > 0) prep.label += ",";
      switch (local) {
        case 0: prep.label += "0"; break;
        case 1: prep.gates.push_back(Gate::x(q)); prep.label += "1"; break;
        case 2: prep.gates.push_back(Gate::h(q)); prep.label += "+"; break;
        default:
          prep.gates.push_back(Gate::rx(q, -M_PI / 4));
          prep.label += "+i";
          break;
      }
    }
    set.members.emplace_back(std::move(prep));
  }
  return set;
}

}  // namespace

TEST_CASE("training states: determinism, normalization, identity member") {
  RandomStream r1(5), r2(5);
  const InitialStateSet a = generate_training_states(4, 12, r1);
  const InitialStateSet b = generate_training_states(4, 12, r2);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(member_label(a.members[i], i) == member_label(b.members[i], i));
  for (const auto& member : a.members) {
    const StateVector k = prepare_state(member, 4);
    CHECK(std::abs(k.norm_squared() - 1.0) < 1e-12);
  }

  // all-identity prep gives back |0...0>
  PrepCircuit id_prep{{}, "I,I,I,I"};
  const StateVector k = prepare_state(StateSetMember{id_prep}, 4);
  CHECK(overlap_probability(k, StateVector(4)) == doctest::Approx(1.0));
}

TEST_CASE("training-state labels are distinct") {
  RandomStream rng(6);
  const InitialStateSet set = generate_training_states(1, 40, rng);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      CHECK(member_label(set.members[i], i) != member_label(set.members[j], j));
}

TEST_CASE("n=10, m=100 training states are nearly orthogonal on average") {
  RandomStream rng(7);
  const InitialStateSet set = generate_training_states(10, 100, rng);
  CHECK(mean_pairwise_overlap(set) < 0.05);
}

TEST_CASE("test_zero family is the single all-zeros state") {
  RandomStream rng(8);
  const InitialStateSet set = generate_test_states(3, StateSetKind::test_zero, 17, rng);
  REQUIRE(set.size() == 1);
  const StateVector k = prepare_state(set.members[0], 3);
  CHECK(overlap_probability(k, StateVector(3)) == doctest::Approx(1.0));
}

TEST_CASE("local-XZ family has all-real amplitudes") {
  RandomStream rng(9);
  const InitialStateSet set = generate_test_states(4, StateSetKind::test_local_xz, 20, rng);
  REQUIRE(set.size() == 20);
  for (const auto& member : set.members) {
    const StateVector k = prepare_state(member, 4);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(k.amplitude(i).imag() == 0.0);
  }
}

TEST_CASE("global-random family: mean pairwise overlap ~ 1/2^n") {
  RandomStream rng(10);
  const InitialStateSet set = generate_test_states(10, StateSetKind::test_global_random, 500, rng);
  REQUIRE(set.size() == 500);
  const double mean = mean_pairwise_overlap(set);
  const double dim = 1024.0;
  CHECK(std::fabs(mean * dim - 1.0) < 0.1);
}

TEST_CASE("global-random family respects the memory budget") {
  RandomStream rng(11);
  CHECK_THROWS_AS(
      generate_test_states(10, StateSetKind::test_global_random, 500, rng, /*budget=*/1024),
      std::invalid_argument);
}

TEST_CASE("perfect compilation gives reward 1 for every prep") {
  AnsatzSpec spec(3, 2);
  RandomStream trng(12);
  const TargetUnitary target = random_target(spec, trng);
  const Circuit v_dagger = adjoint(target.circuit);
  RandomStream srng(13);
  const InitialStateSet states = generate_training_states(3, 10, srng);
  RandomStream erng(14);
  const FidelityEstimate est = estimate_fidelity(target.circuit, v_dagger, states,
                                                 EvalMode::exact_mode(), NoiseModel{}, erng);
  for (double r : est.per_state) CHECK(r == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("identity-parameter trainee vs identity-parameter target") {
  AnsatzSpec spec(3, 1);
  const ParamVector zeros(param_count(spec), 0.0);
  const Circuit target = build_ansatz(spec, zeros);
  const Circuit v_dagger = adjoint(build_ansatz(spec, zeros));
  RandomStream srng(15), erng(16);
  const InitialStateSet states = generate_training_states(3, 6, srng);
  const FidelityEstimate est =
      estimate_fidelity(target, v_dagger, states, EvalMode::exact_mode(), NoiseModel{}, erng);
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("rewards {1, 0} average to 0.5") {
  Circuit target(1, {});  // identity
  Circuit v(1, {});
  v.add(Gate::x(0));
  InitialStateSet states;
  states.kind = StateSetKind::training;
  states.n_qubits = 1;
  states.members.emplace_back(PrepCircuit{{Gate::h(0)}, "H"});  // |+>: X|+> = |+> -> reward 1
  states.members.emplace_back(PrepCircuit{{}, "I"});            // |0>: X|0> = |1> -> reward 0
  RandomStream rng(17);
  const FidelityEstimate est =
      estimate_fidelity(target, v, states, EvalMode::exact_mode(), NoiseModel{}, rng);
  CHECK(est.per_state[0] == doctest::Approx(1.0));
  CHECK(est.per_state[1] == doctest::Approx(0.0));
  CHECK(est.value == doctest::Approx(0.5));
}

TEST_CASE("shot-mode estimate concentrates around the exact reward") {
  AnsatzSpec spec(2, 1);
  RandomStream trng(18);
  const TargetUnitary target = random_target(spec, trng);
  ParamVector theta(param_count(spec));
  RandomStream prng(19);
  for (auto& p : theta) p = prng.uniform(0.0, 2.0 * M_PI);
  const Circuit v_dagger = adjoint(build_ansatz(spec, theta));

  RandomStream srng(20);
  const InitialStateSet states = generate_training_states(2, 8, srng);

  RandomStream e1(21);
  const FidelityEstimate exact =
      estimate_fidelity(target.circuit, v_dagger, states, EvalMode::exact_mode(), NoiseModel{}, e1);
  const std::int64_t shots = 100000;
  RandomStream e2(22);
  const FidelityEstimate sampled = estimate_fidelity(target.circuit, v_dagger, states,
                                                     EvalMode::shot_mode(shots), NoiseModel{}, e2);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const double r = exact.per_state[s];
    const double band = 3.0 * std::sqrt(r * (1.0 - r) / shots) + 1e-4;
    CHECK(std::fabs(sampled.per_state[s] - r) <= band);
  }
}

TEST_CASE("shot-mode estimator is unbiased over repeated evaluations") {
  AnsatzSpec spec(2, 1);
  RandomStream trng(23);
  const TargetUnitary target = random_target(spec, trng);
  ParamVector theta(param_count(spec));
  RandomStream prng(24);
  for (auto& p : theta) p = prng.uniform(0.0, 2.0 * M_PI);
  const Circuit v_dagger = adjoint(build_ansatz(spec, theta));
  RandomStream srng(25);
  const InitialStateSet states = generate_training_states(2, 5, srng);

  RandomStream e0(26);
  const double exact = estimate_fidelity(target.circuit, v_dagger, states, EvalMode::exact_mode(),
                                         NoiseModel{}, e0)
                           .value;
  const int reps = 100;
  const std::int64_t shots = 2000;
  RandomStream master(27);
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < reps; ++i) {
    RandomStream rng = master.derive("rep", i);
    const double v = estimate_fidelity(target.circuit, v_dagger, states,
                                       EvalMode::shot_mode(shots), NoiseModel{}, rng)
                         .value;
    sum += v;
    sq += v * v;
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sq / reps - mean * mean) / (reps - 1));
  CHECK(std::fabs(mean - exact) <= 3.0 * se + 1e-6);
}

TEST_CASE("shot mode rejects raw statevector members") {
  RandomStream rng(28);
  const InitialStateSet set = generate_test_states(2, StateSetKind::test_global_random, 2, rng);
  Circuit target(2, chain_connectivity(2));
  RandomStream erng(29);
  CHECK_THROWS_AS(
      estimate_fidelity(target, target, set, EvalMode::shot_mode(100), NoiseModel{}, erng),
      std::invalid_argument);
}

TEST_CASE("m = n^2 local states track the tomographically complete fidelity") {
  const int n = 3;
  AnsatzSpec spec(n, 2);
  RandomStream trng(1030);
  const TargetUnitary target = random_target(spec, trng);
  const InitialStateSet full_basis = tomographic_basis(n);
  RandomStream srng(1031);
  const InitialStateSet local = generate_training_states(n, n * n, srng);

  RandomStream prng(1032);
  for (int rep = 0; rep < 20; ++rep) {
    ParamVector theta(param_count(spec));
    for (auto& p : theta) p = prng.uniform(0.0, 2.0 * M_PI);
    const Circuit v_dagger = adjoint(build_ansatz(spec, theta));
    RandomStream e1(33), e2(34);
    const double f_hat = estimate_fidelity(target.circuit, v_dagger, local,
                                           EvalMode::exact_mode(), NoiseModel{}, e1)
                             .value;
    const double f_full = estimate_fidelity(target.circuit, v_dagger, full_basis,
                                            EvalMode::exact_mode(), NoiseModel{}, e2)
                              .value;
    CHECK(std::fabs(f_hat - f_full) < 0.1);
  }
}

TEST_CASE("evaluator fast paths match the reference estimator") {
  AnsatzSpec spec(3, 2);
  RandomStream trng(35);
  const TargetUnitary target = random_target(spec, trng);
  RandomStream srng(36);
  const InitialStateSet states = generate_training_states(3, 9, srng);
  RandomStream prng(37);
  ParamVector theta(param_count(spec));
  for (auto& p : theta) p = prng.uniform(0.0, 2.0 * M_PI);
  const Circuit v_dagger = adjoint(build_ansatz(spec, theta));

  SUBCASE("exact noiseless (batched)") {
    FidelityEvaluator eval(target.circuit, states, EvalMode::exact_mode(), NoiseModel{});
    RandomStream r1(38), r2(38);
    const FidelityEstimate fast = eval.evaluate(v_dagger, r1);
    const FidelityEstimate ref = estimate_fidelity(target.circuit, v_dagger, states,
                                                   EvalMode::exact_mode(), NoiseModel{}, r2);
    for (std::size_t s = 0; s < states.size(); ++s)
      CHECK(std::fabs(fast.per_state[s] - ref.per_state[s]) < 1e-13);
  }

  SUBCASE("noiseless shot mode (cached target states) is bit-equal") {
    FidelityEvaluator eval(target.circuit, states, EvalMode::shot_mode(5000), NoiseModel{});
    RandomStream r1(39), r2(39);
    const FidelityEstimate fast = eval.evaluate(v_dagger, r1);
    const FidelityEstimate ref = estimate_fidelity(target.circuit, v_dagger, states,
                                                   EvalMode::shot_mode(5000), NoiseModel{}, r2);
    CHECK(fast.per_state == ref.per_state);
  }

  SUBCASE("noisy trajectories are bit-equal to the reference") {
    const NoiseModel noise(0.05);
    FidelityEvaluator eval(target.circuit, states, EvalMode::exact_mode(), noise);
    RandomStream r1(40), r2(40);
    const FidelityEstimate fast = eval.evaluate(v_dagger, r1);
    const FidelityEstimate ref =
        estimate_fidelity(target.circuit, v_dagger, states, EvalMode::exact_mode(), noise, r2);
    CHECK(fast.per_state == ref.per_state);
  }
}

TEST_CASE("faults_per_shot keeps rewards in range") {
  AnsatzSpec spec(2, 1);
  RandomStream trng(41);
  const TargetUnitary target = random_target(spec, trng);
  const Circuit v_dagger = adjoint(target.circuit);  // perfect compilation
  RandomStream srng(42);
  const InitialStateSet states = generate_training_states(2, 3, srng);
  const NoiseModel noise(0.02);

  RandomStream rng(43);
  const FidelityEstimate est = estimate_fidelity(target.circuit, v_dagger, states,
                                                 EvalMode::shot_mode(2000, true), noise, rng);
  for (double r : est.per_state) {
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
  }
  CHECK(est.value > 0.3);
  CHECK(est.value < 1.0);
}

TEST_CASE("initial-state set JSON round-trip") {
  RandomStream rng(44);
  const InitialStateSet training = generate_training_states(3, 7, rng);
  const InitialStateSet training_back = InitialStateSet::from_json(training.to_json());
  REQUIRE(training_back.size() == training.size());
  for (std::size_t i = 0; i < training.size(); ++i) {
    const StateVector a = prepare_state(training.members[i], 3);
    const StateVector b = prepare_state(training_back.members[i], 3);
    CHECK(overlap_probability(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  }

  const InitialStateSet global = generate_test_states(3, StateSetKind::test_global_random, 4, rng);
  const InitialStateSet global_back = InitialStateSet::from_json(global.to_json());
  for (std::size_t i = 0; i < global.size(); ++i)
    CHECK(prepare_state(global_back.members[i], 3) == prepare_state(global.members[i], 3));
}

TEST_CASE("hoeffding closed forms") {
  CHECK(hoeffding_bound(0.1, 500) == doctest::Approx(2.0 * std::exp(-10.0)).epsilon(1e-12));
  CHECK(hoeffding_required_m(0.05, 0.01) == 1060);
  CHECK(hoeffding_required_m(0.1, 1e-4) == 496);
  CHECK_THROWS_AS(hoeffding_required_m(0.1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(hoeffding_required_m(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(hoeffding_bound(1.5, 10), std::invalid_argument);
}
