#pragma once

#include <span>
#include <string>
#include <vector>

#include "gqe/pauli.hpp"

namespace gqe {

enum class GateKind { RY, RZ, H, Sdg, S, X, CNOT, SWAP };

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;       // second qubit for CNOT (target) and SWAP
  double angle = 0.0;  // radians, RY/RZ only

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::SWAP;
  }
};

struct Circuit {
  int qubit_count = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int qubits) : qubit_count(qubits) {}

  void ry(int q, double angle);
  void rz(int q, double angle);
  void h(int q);
  void sdg(int q);
  void s(int q);
  void x(int q);
  void cnot(int control, int target);
  void swap(int a, int b);
  void append(const Circuit& other);
};

struct ResourceReport {
  int single_qubit_gates = 0;
  int two_qubit_gates = 0;
  int depth = 0;
  int basis_rotations = 0;  // H, S and S-dagger gates
};

// Hardware-efficient ansatz on eta qubits: a layer of RY(2 theta) on every
// qubit, then repeated blocks of a cyclic CNOT chain followed by RY(2 theta)
// on the chain targets, until 2^eta - 1 rotations are placed. Gate counts
// and ASAP depth follow the closed forms tested in test_circuit.cpp.
Circuit gray_ansatz(int eta, std::span<const double> theta);

// Cascade preparing the one-hot spherical-coordinate state on N qubits with
// N-1 parameters; controlled rotations are shipped decomposed (2 RY + 2
// CNOT). The first rotation has a deterministic control and is emitted bare.
Circuit onehot_ansatz(int n_states, std::span<const double> theta);

// Copy of c with H appended on X-tagged qubits and S-dagger then H on
// Y-tagged qubits.
Circuit append_measurement_rotations(const Circuit& c,
                                     const CommutingGroup& group);

// Gate tallies plus greedy as-soon-as-possible depth on qubit availability.
ResourceReport count_resources(const Circuit& c);

// Every CNOT replaced by 2n+1 consecutive copies (zero-noise extrapolation
// fold); other gates untouched.
Circuit fold_cnots(const Circuit& c, int n);

struct CouplingGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int a, int b) const;
  // BFS shortest path between physical nodes; empty when disconnected.
  std::vector<int> shortest_path(int from, int to) const;
};

struct RoutedCircuit {
  Circuit circuit;                // on physical qubits
  std::vector<int> final_layout;  // logical -> physical after routing
};

// Greedy SWAP insertion along shortest paths; each SWAP is emitted as three
// CNOTs. layout maps logical qubits to physical nodes and must be injective.
RoutedCircuit route(const Circuit& c, const CouplingGraph& coupling,
                    std::span<const int> layout);

// One gate per line: "RY q0 1.5707963", "CNOT q0 q1".
std::string to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text);

}  // namespace gqe
