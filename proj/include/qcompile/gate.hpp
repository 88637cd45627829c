#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qcompile {

enum class GateKind : std::uint8_t { RY, RX, RZZ, X, Y, Z, H };

bool gate_kind_is_rotation(GateKind kind);
int gate_kind_arity(GateKind kind);  // number of target qubits
std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// One gate instance. Conventions (half-angle free):
///   RY(t) = exp(-i Y t),  RX(t) = exp(-i X t),  RZZ(t) = exp(-i Z@Z t).
struct Gate {
  GateKind kind;
  double angle = 0.0;  // meaningful iff kind is a rotation
  std::array<int, 2> targets{0, 0};

  static Gate ry(int q, double angle) { return {GateKind::RY, angle, {q, 0}}; }
  static Gate rx(int q, double angle) { return {GateKind::RX, angle, {q, 0}}; }
  static Gate rzz(int q0, int q1, double angle) { return {GateKind::RZZ, angle, {q0, q1}}; }
  static Gate x(int q) { return {GateKind::X, 0.0, {q, 0}}; }
  static Gate y(int q) { return {GateKind::Y, 0.0, {q, 0}}; }
  static Gate z(int q) { return {GateKind::Z, 0.0, {q, 0}}; }
  static Gate h(int q) { return {GateKind::H, 0.0, {q, 0}}; }

  int arity() const { return gate_kind_arity(kind); }

  /// Inverse gate: negated angle for rotations, self-inverse otherwise.
  Gate adjoint() const;

  bool operator==(const Gate& other) const;
};

}  // namespace qcompile
