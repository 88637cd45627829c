#pragma once

// Test-only density-matrix oracle for small qubit counts. Gate matrices are
// built directly from the gate definitions (not from the production
// kernels), the depolarizing channel is applied exactly as
//   rho -> (1-p) rho + (p/3) (X rho X + Y rho Y + Z rho Z)
// per qubit per gate, and trace distance comes from an eigendecomposition.

#include <Eigen/Dense>

#include "qcompile/circuit.hpp"
#include "qcompile/state_vector.hpp"

namespace qcompile::oracles {

Eigen::MatrixXcd gate_matrix(const Gate& gate, int n_qubits);

class DensityMatrix {
 public:
  explicit DensityMatrix(const StateVector& psi);  // |psi><psi|

  int n_qubits() const { return n_qubits_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  void apply_gate(const Gate& gate);
  void apply_depolarizing(int qubit, double p);

  /// Gate then one depolarizing site per touched qubit, for every gate.
  void apply_noisy_circuit(const Circuit& circuit, double p);

 private:
  int n_qubits_;
  Eigen::MatrixXcd rho_;
};

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qcompile::oracles
