#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcompile/ansatz.hpp"
#include "qcompile/dfo.hpp"
#include "qcompile/fidelity.hpp"
#include "qcompile/rmsprop.hpp"

using namespace qcompile;

TEST_CASE("rmsprop: zero gradient leaves parameters, decays the accumulator") {
  RmsPropState state(2, 0.9, 2.5e-3, 1e-8);
  state.sigma_g = {0.4, 0.8};
  std::vector<double> params{1.0, -1.0};
  rmsprop_step(state, params, {0.0, 0.0});
  CHECK(params == std::vector<double>{1.0, -1.0});
  CHECK(state.sigma_g[0] == doctest::Approx(0.36));
  CHECK(state.sigma_g[1] == doctest::Approx(0.72));
}

TEST_CASE("rmsprop: fresh-state step with the table constants") {
  RmsPropState state(1, 0.9, 2.5e-3, 1e-8);
  std::vector<double> params{0.0};
  rmsprop_step(state, params, {1.0});
  CHECK(state.sigma_g[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(params[0] == doctest::Approx(7.9057e-3).epsilon(1e-4));
}

TEST_CASE("rmsprop: constant gradient converges to unit-normalized steps") {
  RmsPropState state(1, 0.9, 2.5e-3, 1e-8);
  std::vector<double> params{0.0};
  double prev = 0.0;
  for (int i = 0; i < 500; ++i) {
    prev = params[0];
    rmsprop_step(state, params, {0.7});
  }
  CHECK(state.sigma_g[0] == doctest::Approx(0.49).epsilon(1e-9));
  CHECK(params[0] - prev == doctest::Approx(2.5e-3).epsilon(1e-6));
}

TEST_CASE("rmsprop: asymptotic step size is scale invariant") {
  auto last_step = [](double g) {
    RmsPropState state(1, 0.9, 2.5e-3, 1e-8);
    std::vector<double> params{0.0};
    double prev = 0.0;
    for (int i = 0; i < 500; ++i) {
      prev = params[0];
      rmsprop_step(state, params, {g});
    }
    return params[0] - prev;
  };
  CHECK(std::fabs(last_step(1.0) - last_step(100.0)) < 1e-6);
}

TEST_CASE("rmsprop rejects non-finite gradients") {
  RmsPropState state(1, 0.9, 2.5e-3, 1e-8);
  std::vector<double> params{0.0};
  CHECK_THROWS_AS(rmsprop_step(state, params, {std::nan("")}), std::invalid_argument);
}

TEST_CASE("nelder-mead solves the quadratic bowl") {
  const Objective f = [](const std::vector<double>& x) {
    return -(x[0] * x[0] + x[1] * x[1]);
  };
  DfoOptions opts;
  opts.max_iters = 200;
  opts.initial_step = 0.5;
  opts.tolerance = 1e-12;
  opts.restart_on_converge = false;
  RandomStream rng(1);
  const DfoResult result = nelder_mead(f, {1.0, 1.0}, opts, rng);
  CHECK(std::sqrt(-result.best_value) < 1e-3);
  CHECK(result.evals <= 200);
}

TEST_CASE("nelder-mead on a constant objective returns x0") {
  const Objective f = [](const std::vector<double>&) { return 3.0; };
  DfoOptions opts;
  opts.max_iters = 100;
  opts.restart_on_converge = false;
  RandomStream rng(2);
  const DfoResult result = nelder_mead(f, {0.4, -0.2}, opts, rng);
  CHECK(result.best_x == std::vector<double>{0.4, -0.2});
  CHECK(result.best_value == 3.0);
  CHECK_FALSE(result.budget_exhausted);
}

TEST_CASE("powell finds the minimizer of a separable quadratic exactly") {
  const std::vector<double> a{0.3, -1.2, 2.0};
  const std::vector<double> d{1.0, 4.0, 0.5};
  const Objective f = [&](const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < 3; ++j) s += d[j] * (x[j] - a[j]) * (x[j] - a[j]);
    return -s;
  };
  DfoOptions opts;
  opts.max_iters = 5000;
  opts.initial_step = 1.0;
  opts.restart_on_converge = false;
  RandomStream rng(3);
  const DfoResult result = powell(f, {0.0, 0.0, 0.0}, opts, rng);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::fabs(result.best_x[j] - a[j]) < 1e-6);
}

TEST_CASE("powell on a constant objective returns x0") {
  const Objective f = [](const std::vector<double>&) { return -1.0; };
  DfoOptions opts;
  opts.max_iters = 100;
  opts.restart_on_converge = false;
  RandomStream rng(4);
  const DfoResult result = powell(f, {0.7}, opts, rng);
  CHECK(result.best_x == std::vector<double>{0.7});
}

TEST_CASE("the trace never reports a best worse than an evaluated point") {
  const Objective f = [](const std::vector<double>& x) {
    return std::sin(3.0 * x[0]) + 0.5 * std::cos(7.0 * x[1]);
  };
  DfoOptions opts;
  opts.max_iters = 400;
  RandomStream rng(5);
  for (auto method : {nelder_mead, powell}) {
    const DfoResult result = method(f, {0.1, 0.2}, opts, rng);
    double running = -1e300;
    for (const DfoTraceRow& row : result.trace) {
      running = std::max(running, row.value);
      CHECK(row.best == running);
    }
    CHECK(result.best_value == running);
  }
}

TEST_CASE("optimizers are deterministic") {
  const Objective f = [](const std::vector<double>& x) {
    return -(std::pow(x[0] - 0.5, 2) + std::pow(x[1] + 0.25, 4));
  };
  DfoOptions opts;
  opts.max_iters = 300;
  for (auto method : {nelder_mead, powell}) {
    RandomStream r1(6), r2(6);
    const DfoResult a = method(f, {1.0, 1.0}, opts, r1);
    const DfoResult b = method(f, {1.0, 1.0}, opts, r2);
    CHECK(a.best_x == b.best_x);
    CHECK(a.best_value == b.best_value);
    CHECK(a.evals == b.evals);
  }
}

TEST_CASE("budget exhaustion returns best-so-far and is flagged") {
  const Objective f = [](const std::vector<double>& x) { return -x[0] * x[0]; };
  DfoOptions opts;
  opts.max_iters = 10;
  opts.restart_on_converge = true;  // will always hit the budget
  RandomStream rng(7);
  const DfoResult result = nelder_mead(f, {2.0}, opts, rng);
  CHECK(result.budget_exhausted);
  CHECK(result.evals == 10);
  CHECK(result.best_value <= 0.0);
}

TEST_CASE("both baselines compile a 2-qubit noiseless instance") {
  // d = 3, a perfect optimum exists by construction; F > 0.99 within 1e4
  // evaluations on at least 8 of 10 seeds.
  int nm_ok = 0, powell_ok = 0;
  for (int seed = 0; seed < 10; ++seed) {
    AnsatzSpec spec(2, 1);
    const std::uint64_t master = mix_token(mix_token(mix_token(1, hash_label("cell")), 2), seed);
    RandomStream trng = RandomStream(master).derive("target");
    const TargetUnitary target = random_target(spec, trng);
    RandomStream srng = RandomStream(master).derive("train-states");
    const InitialStateSet states = generate_training_states(2, 6, srng);
    FidelityEvaluator evaluator(target.circuit, states, EvalMode::exact_mode(), NoiseModel{});

    const Objective objective = [&](const std::vector<double>& theta) {
      RandomStream rng(0);
      return evaluator.evaluate_mean(adjoint(build_ansatz(spec, theta)), rng);
    };
    RandomStream init_rng = RandomStream(master).derive("init");
    std::vector<double> x0(param_count(spec));
    for (auto& v : x0) v = init_rng.uniform(0.0, 2.0 * M_PI);

    DfoOptions opts;
    opts.max_iters = 10000;
    RandomStream r1(8), r2(9);
    if (nelder_mead(objective, x0, opts, r1).best_value > 0.99) ++nm_ok;
    if (powell(objective, x0, opts, r2).best_value > 0.99) ++powell_ok;
  }
  CHECK(nm_ok >= 8);
  CHECK(powell_ok >= 8);
}
