#include "oracles/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile::oracles {

namespace {

using Eigen::MatrixXcd;
using C = std::complex<double>;

MatrixXcd one_qubit_embedding(const Eigen::Matrix2cd& u, int qubit, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t mask = std::size_t{1} << qubit;
  MatrixXcd full = MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const int jb = (j & mask) ? 1 : 0;
    const std::size_t j0 = j & ~mask;
    const std::size_t j1 = j0 | mask;
    full(j0, j) += u(0, jb);
    full(j1, j) += u(1, jb);
  }
  return full;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
  return m;
}

}  // namespace

MatrixXcd gate_matrix(const Gate& gate, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  switch (gate.kind) {
    case GateKind::RY: {
      const double c = std::cos(gate.angle), s = std::sin(gate.angle);
      Eigen::Matrix2cd u;
      u << C(c, 0), C(-s, 0), C(s, 0), C(c, 0);
      return one_qubit_embedding(u, gate.targets[0], n_qubits);
    }
    case GateKind::RX: {
      const double c = std::cos(gate.angle), s = std::sin(gate.angle);
      Eigen::Matrix2cd u;
      u << C(c, 0), C(0, -s), C(0, -s), C(c, 0);
      return one_qubit_embedding(u, gate.targets[0], n_qubits);
    }
    case GateKind::X:
      return one_qubit_embedding(pauli_x(), gate.targets[0], n_qubits);
    case GateKind::Y:
      return one_qubit_embedding(pauli_y(), gate.targets[0], n_qubits);
    case GateKind::Z:
      return one_qubit_embedding(pauli_z(), gate.targets[0], n_qubits);
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      Eigen::Matrix2cd u;
      u << C(r, 0), C(r, 0), C(r, 0), C(-r, 0);
      return one_qubit_embedding(u, gate.targets[0], n_qubits);
    }
    case GateKind::RZZ: {
      const std::size_t m0 = std::size_t{1} << gate.targets[0];
      const std::size_t m1 = std::size_t{1} << gate.targets[1];
      const C eq{std::cos(gate.angle), -std::sin(gate.angle)};
      const C ne = std::conj(eq);
      MatrixXcd full = MatrixXcd::Zero(dim, dim);
      for (std::size_t j = 0; j < dim; ++j)
        full(j, j) = (((j & m0) != 0) == ((j & m1) != 0)) ? eq : ne;
      return full;
    }
  }
  throw std::logic_error("unreachable gate kind");
}

DensityMatrix::DensityMatrix(const StateVector& psi) : n_qubits_(psi.n_qubits()) {
  const std::size_t dim = psi.dim();
  Eigen::VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = psi.amplitude(i);
  rho_ = v * v.adjoint();
}

void DensityMatrix::apply_gate(const Gate& gate) {
  const MatrixXcd g = gate_matrix(gate, n_qubits_);
  rho_ = g * rho_ * g.adjoint();
}

void DensityMatrix::apply_depolarizing(int qubit, double p) {
  const MatrixXcd x = one_qubit_embedding(pauli_x(), qubit, n_qubits_);
  const MatrixXcd y = one_qubit_embedding(pauli_y(), qubit, n_qubits_);
  const MatrixXcd z = one_qubit_embedding(pauli_z(), qubit, n_qubits_);
  rho_ = (1.0 - p) * rho_ +
         (p / 3.0) * (x * rho_ * x.adjoint() + y * rho_ * y.adjoint() + z * rho_ * z.adjoint());
}

void DensityMatrix::apply_noisy_circuit(const Circuit& circuit, double p) {
  for (const Gate& gate : circuit.gates) {
    apply_gate(gate);
    if (p > 0.0)
      for (int i = 0; i < gate.arity(); ++i) apply_depolarizing(gate.targets[i], p);
  }
}

double trace_distance(const MatrixXcd& a, const MatrixXcd& b) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(a - b);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qcompile::oracles
