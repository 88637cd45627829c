#include "qcompile/gate.hpp"

#include <stdexcept>

namespace qcompile {

bool gate_kind_is_rotation(GateKind kind) {
  return kind == GateKind::RY || kind == GateKind::RX || kind == GateKind::RZZ;
}

int gate_kind_arity(GateKind kind) {
  return kind == GateKind::RZZ ? 2 : 1;
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RY: return "RY";
    case GateKind::RX: return "RX";
    case GateKind::RZZ: return "RZZ";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
  }
  throw std::logic_error("unreachable gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "RY") return GateKind::RY;
  if (name == "RX") return GateKind::RX;
  if (name == "RZZ") return GateKind::RZZ;
  if (name == "X") return GateKind::X;
  if (name == "Y") return GateKind::Y;
  if (name == "Z") return GateKind::Z;
  if (name == "H") return GateKind::H;
  throw std::invalid_argument("unknown gate kind: " + name);
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (gate_kind_is_rotation(kind)) g.angle = -angle;
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || targets[0] != other.targets[0]) return false;
  if (arity() == 2 && targets[1] != other.targets[1]) return false;
  return !gate_kind_is_rotation(kind) || angle == other.angle;
}

}  // namespace qcompile
