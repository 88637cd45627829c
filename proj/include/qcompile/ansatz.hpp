#pragma once

#include <vector>

#include "qcompile/circuit.hpp"
#include "qcompile/random.hpp"

namespace qcompile {

/// Layered nearest-neighbor ansatz. One layer is an RY rotation on every
/// qubit followed by an RZZ rotation on every connectivity pair in brick
/// order (pairs whose lower qubit is even first, then the odd ones).
/// Parameters are consumed layer by layer in exactly that order; the layout
/// is stable across versions (serialized circuits re-load identically).
struct AnsatzSpec {
  int n_qubits = 0;
  int depth = 1;
  std::vector<QubitPair> connectivity;  // defaults to the linear chain

  AnsatzSpec() = default;
  AnsatzSpec(int n, int d);  // chain connectivity
  AnsatzSpec(int n, int d, std::vector<QubitPair> pairs);

  /// Connectivity pairs in the order a layer consumes them.
  const std::vector<QubitPair>& layer_pairs() const { return layer_pairs_; }

 private:
  std::vector<QubitPair> layer_pairs_;
  void validate_and_order();
};

/// Number of free angles: depth * (n_qubits + pairs per layer).
int param_count(const AnsatzSpec& spec);

using ParamVector = std::vector<double>;

Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params);

/// Reversed gate order, negated angles. (Also available as Circuit::adjoint.)
Circuit adjoint(const Circuit& circuit);

/// A random instance of the ansatz playing the role of the hidden target:
/// angles i.i.d. uniform on [0, 2pi). Keeping the target inside the ansatz
/// family guarantees a perfect compilation exists.
struct TargetUnitary {
  Circuit circuit;
  ParamVector hidden_params;  // diagnostics only
};

TargetUnitary random_target(const AnsatzSpec& spec, RandomStream& rng);

}  // namespace qcompile
