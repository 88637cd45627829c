#include "qcompile/initial_states.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace qcompile {

namespace {

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

// One local op for the training-state sampler. Index order is fixed; the
// label doubles as the dedup key.
void append_local_op(int op, int qubit, double phi, std::vector<Gate>& gates, std::string& label) {
  switch (op) {
    case 0: label += "I"; break;
    case 1: gates.push_back(Gate::x(qubit)); label += "X"; break;
    case 2: gates.push_back(Gate::y(qubit)); label += "Y"; break;
    case 3: gates.push_back(Gate::z(qubit)); label += "Z"; break;
    case 4: gates.push_back(Gate::h(qubit)); label += "H"; break;
    case 5: gates.push_back(Gate::rx(qubit, phi)); label += "RX(" + format_angle(phi) + ")"; break;
    case 6: gates.push_back(Gate::ry(qubit, phi)); label += "RY(" + format_angle(phi) + ")"; break;
    default: throw std::logic_error("bad local op index");
  }
}

}  // namespace

std::string state_set_kind_name(StateSetKind kind) {
  switch (kind) {
    case StateSetKind::training: return "training";
    case StateSetKind::test_zero: return "test_zero";
    case StateSetKind::test_local_xz: return "test_local_xz";
    case StateSetKind::test_global_random: return "test_global_random";
  }
  throw std::logic_error("unreachable state set kind");
}

std::string member_label(const StateSetMember& member, std::size_t index) {
  if (const auto* prep = std::get_if<PrepCircuit>(&member)) return prep->label;
  return "v" + std::to_string(index);
}

StateVector prepare_state(const StateSetMember& member, int n_qubits) {
  if (const auto* prep = std::get_if<PrepCircuit>(&member)) {
    StateVector state(n_qubits);
    for (const Gate& g : prep->gates) state.apply(g);
    return state;
  }
  const auto& state = std::get<StateVector>(member);
  if (state.n_qubits() != n_qubits) throw std::invalid_argument("member qubit count mismatch");
  return state;
}

InitialStateSet generate_training_states(int n_qubits, int m, RandomStream& rng) {
  if (m < 1) throw std::invalid_argument("training set size must be >= 1");
  InitialStateSet set;
  set.kind = StateSetKind::training;
  set.n_qubits = n_qubits;
  std::unordered_set<std::string> seen;
  const int max_attempts = 100 * m + 100;
  int attempts = 0;
  while (static_cast<int>(set.members.size()) < m) {
    if (++attempts > max_attempts)
      throw std::runtime_error("could not draw enough distinct training states");
    PrepCircuit prep;
    for (int q = 0; q < n_qubits; ++q) {
      if (q > 0) prep.label += ",";
      const int op = static_cast<int>(rng.uniform_index(7));
      const double phi = (op >= 5) ? rng.uniform(0.0, 2.0 * M_PI) : 0.0;
      append_local_op(op, q, phi, prep.gates, prep.label);
    }
    if (seen.insert(prep.label).second) set.members.emplace_back(std::move(prep));
  }
  return set;
}

InitialStateSet generate_test_states(int n_qubits, StateSetKind kind, int t_states,
                                     RandomStream& rng, std::size_t memory_budget_bytes) {
  if (t_states < 1) throw std::invalid_argument("test set size must be >= 1");
  InitialStateSet set;
  set.kind = kind;
  set.n_qubits = n_qubits;
  switch (kind) {
    case StateSetKind::test_zero: {
      set.members.emplace_back(PrepCircuit{{}, "zero"});
      break;
    }
    case StateSetKind::test_local_xz: {
      for (int i = 0; i < t_states; ++i) {
        PrepCircuit prep;
        for (int q = 0; q < n_qubits; ++q) {
          if (q > 0) prep.label += ",";
          const double phi = rng.uniform(0.0, 2.0 * M_PI);
          prep.gates.push_back(Gate::ry(q, phi));
          prep.label += "RY(" + format_angle(phi) + ")";
        }
        set.members.emplace_back(std::move(prep));
      }
      break;
    }
    case StateSetKind::test_global_random: {
      const std::size_t dim = std::size_t{1} << n_qubits;
      const std::size_t bytes = static_cast<std::size_t>(t_states) * dim * sizeof(Amplitude);
      if (bytes > memory_budget_bytes)
        throw std::invalid_argument("global-random test family exceeds the memory budget");
      for (int i = 0; i < t_states; ++i) {
        std::vector<Amplitude> amps(dim);
        for (auto& a : amps) a = Amplitude{rng.normal(), 0.0};
        StateVector state(n_qubits, std::move(amps));
        state.normalize();
        set.members.emplace_back(std::move(state));
      }
      break;
    }
    case StateSetKind::training:
      throw std::invalid_argument("use generate_training_states for the training family");
  }
  return set;
}

double mean_pairwise_overlap(const InitialStateSet& set) {
  const std::size_t m = set.size();
  if (m < 2) return 0.0;
  std::vector<StateVector> states;
  states.reserve(m);
  for (const auto& member : set.members) states.push_back(prepare_state(member, set.n_qubits));
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      sum += overlap_probability(states[i], states[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

std::string InitialStateSet::to_json() const {
  nlohmann::json j;
  j["kind"] = state_set_kind_name(kind);
  j["n_qubits"] = n_qubits;
  auto& ms = j["members"] = nlohmann::json::array();
  for (const auto& member : members) {
    nlohmann::json jm;
    if (const auto* prep = std::get_if<PrepCircuit>(&member)) {
      jm["label"] = prep->label;
      auto& gs = jm["gates"] = nlohmann::json::array();
      for (const Gate& g : prep->gates) {
        nlohmann::json jg;
        jg["kind"] = gate_kind_name(g.kind);
        if (gate_kind_is_rotation(g.kind)) jg["angle"] = g.angle;
        jg["targets"] = {g.targets[0]};
        gs.push_back(std::move(jg));
      }
    } else {
      const auto& state = std::get<StateVector>(member);
      auto& re = jm["amplitudes_re"] = nlohmann::json::array();
      auto& im = jm["amplitudes_im"] = nlohmann::json::array();
      for (const Amplitude& a : state.amplitudes()) {
        re.push_back(a.real());
        im.push_back(a.imag());
      }
    }
    ms.push_back(std::move(jm));
  }
  return j.dump();
}

InitialStateSet InitialStateSet::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  InitialStateSet set;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "training") set.kind = StateSetKind::training;
  else if (kind == "test_zero") set.kind = StateSetKind::test_zero;
  else if (kind == "test_local_xz") set.kind = StateSetKind::test_local_xz;
  else if (kind == "test_global_random") set.kind = StateSetKind::test_global_random;
  else throw std::invalid_argument("unknown state set kind: " + kind);
  set.n_qubits = j.at("n_qubits").get<int>();
  for (const auto& jm : j.at("members")) {
    if (jm.contains("gates")) {
      PrepCircuit prep;
      prep.label = jm.at("label").get<std::string>();
      for (const auto& jg : jm.at("gates")) {
        Gate g;
        g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
        if (gate_kind_is_rotation(g.kind)) g.angle = jg.at("angle").get<double>();
        g.targets[0] = jg.at("targets").at(0).get<int>();
        prep.gates.push_back(g);
      }
      set.members.emplace_back(std::move(prep));
    } else {
      const auto& re = jm.at("amplitudes_re");
      const auto& im = jm.at("amplitudes_im");
      std::vector<Amplitude> amps(re.size());
      for (std::size_t i = 0; i < amps.size(); ++i)
        amps[i] = Amplitude{re.at(i).get<double>(), im.at(i).get<double>()};
      set.members.emplace_back(StateVector(set.n_qubits, std::move(amps)));
    }
  }
  return set;
}

}  // namespace qcompile
