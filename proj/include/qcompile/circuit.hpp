#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcompile/gate.hpp"

namespace qcompile {

/// Unordered qubit pair (stored with first < second).
using QubitPair = std::pair<int, int>;

QubitPair make_pair_sorted(int a, int b);

/// Linear nearest-neighbor chain: (0,1), (1,2), ..., (n-2, n-1).
std::vector<QubitPair> chain_connectivity(int n_qubits);

/// Ordered gate sequence over a known connectivity graph. Every two-qubit
/// gate must act on a pair from `connectivity`.
struct Circuit {
  int n_qubits = 0;
  std::vector<QubitPair> connectivity;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(int n, std::vector<QubitPair> pairs);

  void add(const Gate& gate);  // validates targets and connectivity

  /// Reversed gate order with per-gate inverses.
  Circuit adjoint() const;

  bool operator==(const Circuit& other) const;

  std::string to_json() const;
  static Circuit from_json(const std::string& text);
};

}  // namespace qcompile
