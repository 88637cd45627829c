#include "qcompile/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace qcompile {

QubitPair make_pair_sorted(int a, int b) {
  return a < b ? QubitPair{a, b} : QubitPair{b, a};
}

std::vector<QubitPair> chain_connectivity(int n_qubits) {
  std::vector<QubitPair> pairs;
  pairs.reserve(n_qubits > 0 ? n_qubits - 1 : 0);
  for (int q = 0; q + 1 < n_qubits; ++q) pairs.emplace_back(q, q + 1);
  return pairs;
}

Circuit::Circuit(int n, std::vector<QubitPair> pairs) : n_qubits(n), connectivity(std::move(pairs)) {
  if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (auto& [a, b] : connectivity) {
    if (a == b) throw std::invalid_argument("connectivity pair with equal qubits");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("connectivity pair out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(connectivity.begin(), connectivity.end());
  if (std::adjacent_find(connectivity.begin(), connectivity.end()) != connectivity.end())
    throw std::invalid_argument("duplicate connectivity pair");
}

void Circuit::add(const Gate& gate) {
  const int arity = gate.arity();
  for (int i = 0; i < arity; ++i) {
    if (gate.targets[i] < 0 || gate.targets[i] >= n_qubits)
      throw std::invalid_argument("gate target out of range");
  }
  if (arity == 2) {
    if (gate.targets[0] == gate.targets[1])
      throw std::invalid_argument("two-qubit gate with duplicate targets");
    const QubitPair pair = make_pair_sorted(gate.targets[0], gate.targets[1]);
    if (!std::binary_search(connectivity.begin(), connectivity.end(), pair))
      throw std::invalid_argument("two-qubit gate outside connectivity graph");
  }
  gates.push_back(gate);
}

Circuit Circuit::adjoint() const {
  Circuit out(n_qubits, connectivity);
  out.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.gates.push_back(it->adjoint());
  return out;
}

bool Circuit::operator==(const Circuit& other) const {
  return n_qubits == other.n_qubits && connectivity == other.connectivity && gates == other.gates;
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["n_qubits"] = n_qubits;
  auto& conn = j["connectivity"] = nlohmann::json::array();
  for (const auto& [a, b] : connectivity) conn.push_back({a, b});
  auto& gs = j["gates"] = nlohmann::json::array();
  for (const Gate& g : gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    if (gate_kind_is_rotation(g.kind)) jg["angle"] = g.angle;
    auto& ts = jg["targets"] = nlohmann::json::array();
    for (int i = 0; i < g.arity(); ++i) ts.push_back(g.targets[i]);
    gs.push_back(std::move(jg));
  }
  return j.dump();
}

Circuit Circuit::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<QubitPair> pairs;
  for (const auto& p : j.at("connectivity")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  Circuit c(j.at("n_qubits").get<int>(), std::move(pairs));
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    if (gate_kind_is_rotation(g.kind)) g.angle = jg.at("angle").get<double>();
    const auto& ts = jg.at("targets");
    g.targets[0] = ts.at(0).get<int>();
    if (g.arity() == 2) g.targets[1] = ts.at(1).get<int>();
    c.add(g);
  }
  return c;
}

}  // namespace qcompile
