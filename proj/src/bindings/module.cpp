#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <vector>

#include "qcompile/ansatz.hpp"
#include "qcompile/config.hpp"
#include "qcompile/fidelity.hpp"
#include "qcompile/hoeffding.hpp"
#include "qcompile/policy.hpp"
#include "qcompile/rmsprop.hpp"
#include "qcompile/sweeps.hpp"
#include "qcompile/train.hpp"
#include "qcompile/version.hpp"

namespace py = pybind11;
using namespace qcompile;

namespace {

ExperimentConfig config_from_json_str(const std::string& text) {
  ExperimentConfig cfg = ExperimentConfig::from_json_string(text);
  cfg.validate();
  return cfg;
}

py::dict trace_summary(const TrainingTrace& trace) {
  py::dict d;
  d["j_inf"] = trace.j_inf;
  d["j_inf_std"] = trace.j_inf_std;
  d["j_inf_best"] = trace.j_inf_best;
  d["iterations_run"] = trace.iterations_run;
  d["evals_run"] = trace.evals_run;
  d["final_exact_fidelity"] = trace.final_exact_fidelity;
  d["theta_star"] = trace.theta_star;
  std::vector<double> rewards;
  rewards.reserve(trace.rows.size());
  for (const TraceRow& row : trace.rows) rewards.push_back(row.reward_mean);
  d["rewards"] = std::move(rewards);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Statevector simulation and policy-gradient compilation of shallow circuits";
  m.attr("__version__") = kVersion;

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("derive",
           [](const RandomStream& s, const std::string& label) { return s.derive(label); })
      .def("derive",
           [](const RandomStream& s, const std::string& label, std::uint64_t token) {
             return s.derive(label, token);
           })
      .def("uniform", [](RandomStream& s) { return s.uniform(); })
      .def("normal", &RandomStream::normal)
      .def_property_readonly("seed", &RandomStream::seed);

  py::class_<Gate>(m, "Gate")
      .def_static("ry", &Gate::ry, py::arg("qubit"), py::arg("angle"))
      .def_static("rx", &Gate::rx, py::arg("qubit"), py::arg("angle"))
      .def_static("rzz", &Gate::rzz, py::arg("qubit_a"), py::arg("qubit_b"), py::arg("angle"))
      .def_static("x", &Gate::x, py::arg("qubit"))
      .def_static("y", &Gate::y, py::arg("qubit"))
      .def_static("z", &Gate::z, py::arg("qubit"))
      .def_static("h", &Gate::h, py::arg("qubit"))
      .def("adjoint", &Gate::adjoint)
      .def_property_readonly("kind", [](const Gate& g) { return gate_kind_name(g.kind); })
      .def_readonly("angle", &Gate::angle);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init([](int n_qubits, std::optional<std::vector<QubitPair>> connectivity) {
             return Circuit(n_qubits,
                            connectivity ? *connectivity : chain_connectivity(n_qubits));
           }),
           py::arg("n_qubits"), py::arg("connectivity") = py::none())
      .def("add", &Circuit::add)
      .def("adjoint", &Circuit::adjoint)
      .def("to_json", &Circuit::to_json)
      .def_static("from_json", &Circuit::from_json)
      .def_readonly("n_qubits", &Circuit::n_qubits)
      .def_property_readonly("num_gates", [](const Circuit& c) { return c.gates.size(); })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int>(), py::arg("n_qubits"))
      .def(py::init<int, std::vector<Amplitude>>(), py::arg("n_qubits"), py::arg("amplitudes"))
      .def("apply", &StateVector::apply)
      .def_property_readonly("n_qubits", &StateVector::n_qubits)
      .def_property_readonly("amplitudes", [](const StateVector& s) { return s.amplitudes(); })
      .def("norm_squared", &StateVector::norm_squared);

  m.def(
      "apply_circuit",
      [](const StateVector& state, const Circuit& circuit, double noise_p,
         std::optional<std::uint64_t> seed) {
        if (noise_p == 0.0 && !seed) return apply_circuit(state, circuit);
        RandomStream rng(seed.value_or(0));
        return apply_circuit(state, circuit, NoiseModel(noise_p), rng);
      },
      py::arg("state"), py::arg("circuit"), py::arg("noise_p") = 0.0,
      py::arg("seed") = py::none());
  m.def("overlap_probability", &overlap_probability);
  m.def(
      "sample_zero_outcome",
      [](const StateVector& state, std::int64_t shots, std::uint64_t seed) {
        RandomStream rng(seed);
        return sample_zero_outcome(state, shots, rng);
      },
      py::arg("state"), py::arg("shots"), py::arg("seed"));

  py::class_<AnsatzSpec>(m, "AnsatzSpec")
      .def(py::init<int, int>(), py::arg("n_qubits"), py::arg("depth"))
      .def(py::init<int, int, std::vector<QubitPair>>(), py::arg("n_qubits"), py::arg("depth"),
           py::arg("connectivity"))
      .def_readonly("n_qubits", &AnsatzSpec::n_qubits)
      .def_readonly("depth", &AnsatzSpec::depth);

  m.def("param_count", &param_count);
  m.def("build_ansatz", &build_ansatz);
  m.def("adjoint", &adjoint);
  m.def(
      "random_target",
      [](const AnsatzSpec& spec, std::uint64_t seed) {
        RandomStream rng(seed);
        const TargetUnitary t = random_target(spec, rng);
        return py::make_tuple(t.circuit, t.hidden_params);
      },
      py::arg("spec"), py::arg("seed"));

  m.def("hoeffding_bound", &hoeffding_bound, py::arg("epsilon"), py::arg("m"));
  m.def("hoeffding_required_m", &hoeffding_required_m, py::arg("epsilon"), py::arg("delta"));

  py::class_<GaussianPolicy>(m, "GaussianPolicy")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("mu"), py::arg("sigma"))
      .def_readonly("mu", &GaussianPolicy::mu)
      .def_readonly("sigma", &GaussianPolicy::sigma);
  m.def(
      "policy_sample",
      [](const GaussianPolicy& p, std::uint64_t seed) {
        RandomStream rng(seed);
        return sample(p, rng);
      },
      py::arg("policy"), py::arg("seed"));
  m.def("log_grad_mu", &log_grad_mu);
  m.def("log_grad_sigma", &log_grad_sigma);
  m.def("schedule_sigma", [](int t, double sigma_i, double sigma_f, int total) {
    return schedule_sigma(t, CovarianceSchedule(sigma_i, sigma_f, total));
  });

  m.def(
      "estimate_fidelity",
      [](const Circuit& target, const Circuit& v_dagger, int m_states, std::uint64_t seed,
         std::optional<std::int64_t> shots, double noise_p) {
        RandomStream master(seed);
        RandomStream srng = master.derive("train-states");
        const InitialStateSet states = generate_training_states(target.n_qubits, m_states, srng);
        RandomStream erng = master.derive("eval");
        const EvalMode mode = shots ? EvalMode::shot_mode(*shots) : EvalMode::exact_mode();
        return estimate_fidelity(target, v_dagger, states, mode, NoiseModel(noise_p), erng).value;
      },
      py::arg("target"), py::arg("v_dagger"), py::arg("m_states"), py::arg("seed"),
      py::arg("shots") = py::none(), py::arg("noise_p") = 0.0);

  m.def("train", [](const std::string& config_json) {
    const ExperimentConfig cfg = config_from_json_str(config_json);
    return trace_summary(train(cfg));
  });
  m.def("default_config_json", []() { return ExperimentConfig{}.resolved().to_json_string(); });
}
