#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qcompile/gate.hpp"
#include "qcompile/random.hpp"
#include "qcompile/state_vector.hpp"

namespace qcompile {

/// Single-qubit gate sequence applied to |0...0> to produce an initial state
/// |k>, together with a stable label used for dedup and RNG stream keying.
struct PrepCircuit {
  std::vector<Gate> gates;  // one-qubit gates only
  std::string label;
};

enum class StateSetKind { training, test_zero, test_local_xz, test_global_random };

std::string state_set_kind_name(StateSetKind kind);

/// Product-state members are PrepCircuits; the global-random test family
/// stores explicit statevectors instead.
using StateSetMember = std::variant<PrepCircuit, StateVector>;

struct InitialStateSet {
  StateSetKind kind = StateSetKind::training;
  int n_qubits = 0;
  std::vector<StateSetMember> members;

  std::size_t size() const { return members.size(); }

  std::string to_json() const;
  static InitialStateSet from_json(const std::string& text);
};

std::string member_label(const StateSetMember& member, std::size_t index);

/// |k> for a member: prep gates applied to |0...0>, or the stored vector.
StateVector prepare_state(const StateSetMember& member, int n_qubits);

/// Training set: per member and per qubit, one local op drawn uniformly from
/// {I, X, Y, Z, H, RX(phi), RY(phi)} with phi ~ U[0, 2pi) — random local
/// deformations of |0>. Members are deduplicated by label (resampled on
/// collision); states themselves are not forced orthogonal.
InitialStateSet generate_training_states(int n_qubits, int m, RandomStream& rng);

/// Test families: test_zero is the single |0...0>; test_local_xz members are
/// per-qubit RY(phi)|0> products (random Bloch vectors in the XZ plane, all
/// real amplitudes); test_global_random members are normalized 2^n vectors
/// with i.i.d. standard-normal real entries.
InitialStateSet generate_test_states(int n_qubits, StateSetKind kind, int t_states,
                                     RandomStream& rng,
                                     std::size_t memory_budget_bytes = std::size_t{2} << 30);

/// Mean of |<k_i|k_j>|^2 over unordered member pairs; surfaced in run
/// metadata. Returns 0 for singleton sets.
double mean_pairwise_overlap(const InitialStateSet& set);

}  // namespace qcompile
