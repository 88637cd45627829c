#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qcompile/circuit.hpp"
#include "qcompile/gate.hpp"
#include "qcompile/noise.hpp"
#include "qcompile/random.hpp"

namespace qcompile {

using Amplitude = std::complex<double>;

/// Dense statevector over n qubits, little-endian: the amplitude index's
/// bit q is the computational-basis value of qubit q.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  std::vector<Amplitude>& amplitudes() { return amplitudes_; }
  Amplitude amplitude(std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;
  void normalize();

  void apply(const Gate& gate);

  bool operator==(const StateVector& other) const;

 private:
  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Unitary image of `state` under `gate`; norm is preserved to 1e-10.
StateVector apply_gate(const StateVector& state, const Gate& gate);

/// Applies the circuit's gates in order. With noise, after each gate and for
/// each qubit that gate acts on, a Pauli from {X, Y, Z} is inserted with
/// probability noise.p (one trajectory realization of the depolarizing
/// channel). The RNG is consumed only at fault-site decisions.
void apply_circuit_inplace(StateVector& state, const Circuit& circuit, const NoiseModel& noise,
                           RandomStream& rng);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit,
                          const NoiseModel& noise, RandomStream& rng);

/// Noiseless overloads.
void apply_circuit_inplace(StateVector& state, const Circuit& circuit);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// |<a|b>|^2.
double overlap_probability(const StateVector& a, const StateVector& b);
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Frequency of the all-zeros outcome over `shots` projective measurements
/// of `state` in the computational basis. The all-zeros count over shots
/// i.i.d. bitstring draws from |amplitudes|^2 is Binomial(shots, |amp_0|^2),
/// which is what gets sampled.
double sample_zero_outcome(const StateVector& state, std::int64_t shots, RandomStream& rng);

}  // namespace qcompile
