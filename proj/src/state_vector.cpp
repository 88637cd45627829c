#include "qcompile/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Visits the 2^(n-1) index pairs (i0, i1) that differ only in bit `target`.
template <typename PairFn>
void for_each_pair(std::size_t dim, int target, PairFn&& fn) {
  const std::size_t mask = std::size_t{1} << target;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::size_t half = dim >> 1;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
    fn(i0, i0 | mask);
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
  if (n_qubits > 30) throw std::invalid_argument("qubit count too large for dense simulation");
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
  if (amplitudes_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude count must be 2^n_qubits");
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Amplitude& a : amplitudes_) s += std::norm(a);
  return s;
}

void StateVector::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::runtime_error("cannot normalize the zero vector");
  for (Amplitude& a : amplitudes_) a /= n;
}

void StateVector::apply(const Gate& gate) {
  const int arity = gate.arity();
  for (int i = 0; i < arity; ++i) {
    if (gate.targets[i] < 0 || gate.targets[i] >= n_qubits_)
      throw std::invalid_argument("gate target out of range");
  }
  if (arity == 2 && gate.targets[0] == gate.targets[1])
    throw std::invalid_argument("two-qubit gate with duplicate targets");
  if (gate_kind_is_rotation(gate.kind) && !std::isfinite(gate.angle))
    throw std::invalid_argument("gate angle must be finite");

  Amplitude* amp = amplitudes_.data();
  const std::size_t n = amplitudes_.size();
  switch (gate.kind) {
    case GateKind::RY: {
      const double c = std::cos(gate.angle), s = std::sin(gate.angle);
      for_each_pair(n, gate.targets[0], [&](std::size_t i0, std::size_t i1) {
        const Amplitude a0 = amp[i0], a1 = amp[i1];
        amp[i0] = c * a0 - s * a1;
        amp[i1] = s * a0 + c * a1;
      });
      break;
    }
    case GateKind::RX: {
      const double c = std::cos(gate.angle), s = std::sin(gate.angle);
      for_each_pair(n, gate.targets[0], [&](std::size_t i0, std::size_t i1) {
        const Amplitude a0 = amp[i0], a1 = amp[i1];
        amp[i0] = Amplitude{c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amp[i1] = Amplitude{s * a0.imag() + c * a1.real(), -s * a0.real() + c * a1.imag()};
      });
      break;
    }
    case GateKind::RZZ: {
      // Diagonal: amplitude picks up exp(-i t) when the two target bits are
      // equal (ZZ eigenvalue +1) and exp(+i t) when they differ.
      const Amplitude phase_eq{std::cos(gate.angle), -std::sin(gate.angle)};
      const Amplitude phase_ne = std::conj(phase_eq);
      const std::size_t m0 = std::size_t{1} << gate.targets[0];
      const std::size_t m1 = std::size_t{1} << gate.targets[1];
      for (std::size_t i = 0; i < n; ++i) {
        const bool b0 = (i & m0) != 0, b1 = (i & m1) != 0;
        amp[i] *= (b0 == b1) ? phase_eq : phase_ne;
      }
      break;
    }
    case GateKind::X:
      for_each_pair(n, gate.targets[0], [&](std::size_t i0, std::size_t i1) {
        std::swap(amp[i0], amp[i1]);
      });
      break;
    case GateKind::Y:
      for_each_pair(n, gate.targets[0], [&](std::size_t i0, std::size_t i1) {
        const Amplitude a0 = amp[i0], a1 = amp[i1];
        amp[i0] = Amplitude{a1.imag(), -a1.real()};   // -i a1
        amp[i1] = Amplitude{-a0.imag(), a0.real()};   // +i a0
      });
      break;
    case GateKind::Z:
      for_each_pair(n, gate.targets[0], [&](std::size_t, std::size_t i1) { amp[i1] = -amp[i1]; });
      break;
    case GateKind::H:
      for_each_pair(n, gate.targets[0], [&](std::size_t i0, std::size_t i1) {
        const Amplitude a0 = amp[i0], a1 = amp[i1];
        amp[i0] = kInvSqrt2 * (a0 + a1);
        amp[i1] = kInvSqrt2 * (a0 - a1);
      });
      break;
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  StateVector out = state;
  out.apply(gate);
  return out;
}

namespace {

void maybe_fault(StateVector& state, int qubit, const NoiseModel& noise, RandomStream& rng) {
  if (rng.uniform() >= noise.p) return;
  switch (rng.uniform_index(3)) {
    case 0: state.apply(Gate::x(qubit)); break;
    case 1: state.apply(Gate::y(qubit)); break;
    default: state.apply(Gate::z(qubit)); break;
  }
}

}  // namespace

void apply_circuit_inplace(StateVector& state, const Circuit& circuit, const NoiseModel& noise,
                           RandomStream& rng) {
  if (state.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("state/circuit qubit count mismatch");
  for (const Gate& gate : circuit.gates) {
    state.apply(gate);
    if (noise.enabled()) {
      for (int i = 0; i < gate.arity(); ++i) maybe_fault(state, gate.targets[i], noise, rng);
    }
  }
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit,
                          const NoiseModel& noise, RandomStream& rng) {
  StateVector out = state;
  apply_circuit_inplace(out, circuit, noise, rng);
  return out;
}

void apply_circuit_inplace(StateVector& state, const Circuit& circuit) {
  if (state.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("state/circuit qubit count mismatch");
  for (const Gate& gate : circuit.gates) state.apply(gate);
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  StateVector out = state;
  apply_circuit_inplace(out, circuit);
  return out;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("state dimension mismatch");
  Amplitude s{0.0, 0.0};
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  for (std::size_t i = 0; i < va.size(); ++i) s += std::conj(va[i]) * vb[i];
  return s;
}

double overlap_probability(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

double sample_zero_outcome(const StateVector& state, std::int64_t shots, RandomStream& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  double p0 = std::norm(state.amplitude(0));
  if (p0 > 1.0) p0 = 1.0;  // guard fp excess
  const std::int64_t hits = rng.binomial(shots, p0);
  return static_cast<double>(hits) / static_cast<double>(shots);
}

bool StateVector::operator==(const StateVector& other) const {
  return n_qubits_ == other.n_qubits_ && amplitudes_ == other.amplitudes_;
}

}  // namespace qcompile
