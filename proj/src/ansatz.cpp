#include "qcompile/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcompile {

AnsatzSpec::AnsatzSpec(int n, int d) : AnsatzSpec(n, d, chain_connectivity(n)) {}

AnsatzSpec::AnsatzSpec(int n, int d, std::vector<QubitPair> pairs)
    : n_qubits(n), depth(d), connectivity(std::move(pairs)) {
  validate_and_order();
}

void AnsatzSpec::validate_and_order() {
  if (n_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  // Circuit's constructor validates/normalizes the pair set.
  connectivity = Circuit(n_qubits, connectivity).connectivity;
  layer_pairs_ = connectivity;
  std::stable_partition(layer_pairs_.begin(), layer_pairs_.end(),
                        [](const QubitPair& p) { return p.first % 2 == 0; });
}

int param_count(const AnsatzSpec& spec) {
  return spec.depth * (spec.n_qubits + static_cast<int>(spec.connectivity.size()));
}

Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params) {
  if (static_cast<int>(params.size()) != param_count(spec))
    throw std::invalid_argument("parameter count does not match the ansatz spec");
  Circuit c(spec.n_qubits, spec.connectivity);
  std::size_t p = 0;
  for (int layer = 0; layer < spec.depth; ++layer) {
    for (int q = 0; q < spec.n_qubits; ++q) c.add(Gate::ry(q, params[p++]));
    for (const auto& [a, b] : spec.layer_pairs()) c.add(Gate::rzz(a, b, params[p++]));
  }
  return c;
}

Circuit adjoint(const Circuit& circuit) { return circuit.adjoint(); }

TargetUnitary random_target(const AnsatzSpec& spec, RandomStream& rng) {
  const int d = param_count(spec);
  ParamVector params(d);
  for (int i = 0; i < d; ++i) params[i] = rng.uniform(0.0, 2.0 * M_PI);
  return TargetUnitary{build_ansatz(spec, params), std::move(params)};
}

}  // namespace qcompile
