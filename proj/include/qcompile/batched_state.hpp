#pragma once

#include <cstddef>
#include <vector>

#include "qcompile/circuit.hpp"
#include "qcompile/state_vector.hpp"

namespace qcompile {

/// A batch of statevectors over the same qubit count, stored column-major
/// with the batch index contiguous (re/im split), so gate kernels vectorize
/// across the batch. Used as the fast path for noiseless exact fidelity
/// evaluation; it is bit-equivalent to evolving each column separately with
/// StateVector (the kernels perform the same operations in the same order).
class BatchedState {
 public:
  BatchedState() = default;
  BatchedState(int n_qubits, std::size_t batch);

  int n_qubits() const { return n_qubits_; }
  std::size_t batch() const { return batch_; }
  std::size_t dim() const { return dim_; }

  void set_column(std::size_t s, const StateVector& state);
  StateVector column(std::size_t s) const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  /// Per-column |<other_s|this_s>|^2.
  std::vector<double> overlap_probabilities(const BatchedState& other) const;

  /// Per-column |amplitude(0)|^2.
  std::vector<double> zero_probabilities() const;

  /// Bulk copy of another batch's contents (same shape).
  void assign_from(const BatchedState& other);

 private:
  int n_qubits_ = 0;
  std::size_t batch_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
};

}  // namespace qcompile
