#include "qcompile/batched_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

BatchedState::BatchedState(int n_qubits, std::size_t batch)
    : n_qubits_(n_qubits), batch_(batch), dim_(std::size_t{1} << n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("batch needs at least one qubit");
  if (batch < 1) throw std::invalid_argument("batch must be non-empty");
  re_.assign(dim_ * batch_, 0.0);
  im_.assign(dim_ * batch_, 0.0);
}

void BatchedState::set_column(std::size_t s, const StateVector& state) {
  if (state.n_qubits() != n_qubits_) throw std::invalid_argument("column qubit count mismatch");
  if (s >= batch_) throw std::invalid_argument("batch column out of range");
  for (std::size_t i = 0; i < dim_; ++i) {
    re_[i * batch_ + s] = state.amplitude(i).real();
    im_[i * batch_ + s] = state.amplitude(i).imag();
  }
}

StateVector BatchedState::column(std::size_t s) const {
  if (s >= batch_) throw std::invalid_argument("batch column out of range");
  std::vector<Amplitude> amps(dim_);
  for (std::size_t i = 0; i < dim_; ++i) amps[i] = {re_[i * batch_ + s], im_[i * batch_ + s]};
  return StateVector(n_qubits_, std::move(amps));
}

void BatchedState::apply(const Gate& gate) {
  const std::size_t m = batch_;
  double* re = re_.data();
  double* im = im_.data();

  if (gate.arity() == 1) {
    const std::size_t mask = std::size_t{1} << gate.targets[0];
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t half = dim_ >> 1;

    switch (gate.kind) {
      case GateKind::RY: {
        const double c = std::cos(gate.angle), s = std::sin(gate.angle);
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r0 = (((i & hi_mask) << 1) | (i & lo_mask)) * m;
          const std::size_t r1 = r0 + mask * m;
          for (std::size_t k = 0; k < m; ++k) {
            const double a0r = re[r0 + k], a0i = im[r0 + k];
            const double a1r = re[r1 + k], a1i = im[r1 + k];
            re[r0 + k] = c * a0r - s * a1r;
            im[r0 + k] = c * a0i - s * a1i;
            re[r1 + k] = s * a0r + c * a1r;
            im[r1 + k] = s * a0i + c * a1i;
          }
        }
        break;
      }
      case GateKind::RX: {
        const double c = std::cos(gate.angle), s = std::sin(gate.angle);
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r0 = (((i & hi_mask) << 1) | (i & lo_mask)) * m;
          const std::size_t r1 = r0 + mask * m;
          for (std::size_t k = 0; k < m; ++k) {
            const double a0r = re[r0 + k], a0i = im[r0 + k];
            const double a1r = re[r1 + k], a1i = im[r1 + k];
            re[r0 + k] = c * a0r + s * a1i;
            im[r0 + k] = c * a0i - s * a1r;
            re[r1 + k] = s * a0i + c * a1r;
            im[r1 + k] = -s * a0r + c * a1i;
          }
        }
        break;
      }
      case GateKind::X:
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r0 = (((i & hi_mask) << 1) | (i & lo_mask)) * m;
          const std::size_t r1 = r0 + mask * m;
          for (std::size_t k = 0; k < m; ++k) {
            std::swap(re[r0 + k], re[r1 + k]);
            std::swap(im[r0 + k], im[r1 + k]);
          }
        }
        break;
      case GateKind::Y:
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r0 = (((i & hi_mask) << 1) | (i & lo_mask)) * m;
          const std::size_t r1 = r0 + mask * m;
          for (std::size_t k = 0; k < m; ++k) {
            const double a0r = re[r0 + k], a0i = im[r0 + k];
            const double a1r = re[r1 + k], a1i = im[r1 + k];
            re[r0 + k] = a1i;
            im[r0 + k] = -a1r;
            re[r1 + k] = -a0i;
            im[r1 + k] = a0r;
          }
        }
        break;
      case GateKind::Z:
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r1 = ((((i & hi_mask) << 1) | (i & lo_mask)) | mask) * m;
          for (std::size_t k = 0; k < m; ++k) {
            re[r1 + k] = -re[r1 + k];
            im[r1 + k] = -im[r1 + k];
          }
        }
        break;
      case GateKind::H:
        for (std::size_t i = 0; i < half; ++i) {
          const std::size_t r0 = (((i & hi_mask) << 1) | (i & lo_mask)) * m;
          const std::size_t r1 = r0 + mask * m;
          for (std::size_t k = 0; k < m; ++k) {
            const double a0r = re[r0 + k], a0i = im[r0 + k];
            const double a1r = re[r1 + k], a1i = im[r1 + k];
            re[r0 + k] = kInvSqrt2 * (a0r + a1r);
            im[r0 + k] = kInvSqrt2 * (a0i + a1i);
            re[r1 + k] = kInvSqrt2 * (a0r - a1r);
            im[r1 + k] = kInvSqrt2 * (a0i - a1i);
          }
        }
        break;
      default:
        throw std::logic_error("unhandled one-qubit gate");
    }
    return;
  }

  if (gate.kind != GateKind::RZZ) throw std::logic_error("unhandled two-qubit gate");
  if (gate.targets[0] == gate.targets[1])
    throw std::invalid_argument("two-qubit gate with duplicate targets");
  const double pr = std::cos(gate.angle);
  const double pi = -std::sin(gate.angle);  // exp(-i t) on equal bits
  const std::size_t m0 = std::size_t{1} << gate.targets[0];
  const std::size_t m1 = std::size_t{1} << gate.targets[1];
  for (std::size_t i = 0; i < dim_; ++i) {
    const bool eq = ((i & m0) != 0) == ((i & m1) != 0);
    const double qi = eq ? pi : -pi;
    const std::size_t row = i * m;
    for (std::size_t k = 0; k < m; ++k) {
      const double ar = re[row + k], ai = im[row + k];
      re[row + k] = pr * ar - qi * ai;
      im[row + k] = pr * ai + qi * ar;
    }
  }
}

void BatchedState::apply(const Circuit& circuit) {
  if (circuit.n_qubits != n_qubits_)
    throw std::invalid_argument("batch/circuit qubit count mismatch");
  for (const Gate& g : circuit.gates) apply(g);
}

std::vector<double> BatchedState::overlap_probabilities(const BatchedState& other) const {
  if (other.n_qubits_ != n_qubits_ || other.batch_ != batch_)
    throw std::invalid_argument("batch shape mismatch");
  std::vector<double> acc_r(batch_, 0.0), acc_i(batch_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t row = i * batch_;
    for (std::size_t k = 0; k < batch_; ++k) {
      // conj(other) * this
      const double br = other.re_[row + k], bi = other.im_[row + k];
      const double ar = re_[row + k], ai = im_[row + k];
      acc_r[k] += br * ar + bi * ai;
      acc_i[k] += br * ai - bi * ar;
    }
  }
  std::vector<double> out(batch_);
  for (std::size_t k = 0; k < batch_; ++k) out[k] = acc_r[k] * acc_r[k] + acc_i[k] * acc_i[k];
  return out;
}

std::vector<double> BatchedState::zero_probabilities() const {
  std::vector<double> out(batch_);
  for (std::size_t k = 0; k < batch_; ++k) out[k] = re_[k] * re_[k] + im_[k] * im_[k];
  return out;
}

void BatchedState::assign_from(const BatchedState& other) {
  if (other.n_qubits_ != n_qubits_ || other.batch_ != batch_)
    throw std::invalid_argument("batch shape mismatch");
  re_ = other.re_;
  im_ = other.im_;
}

}  // namespace qcompile
