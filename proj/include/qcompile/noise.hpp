#pragma once

#include <stdexcept>

namespace qcompile {

/// Single-qubit depolarizing noise, realized per trajectory: after each gate,
/// each qubit the gate acts on suffers one Pauli fault with probability p,
/// the Pauli drawn uniformly from {X, Y, Z} (p/3 each). p = 0 reproduces the
/// noiseless evolution bit-exactly for a fixed RNG stream.
struct NoiseModel {
  double p = 0.0;

  NoiseModel() = default;
  explicit NoiseModel(double strength) : p(strength) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise strength must be in [0, 1]");
  }

  bool enabled() const { return p > 0.0; }
};

}  // namespace qcompile
