#include "gqe/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gqe {

void Circuit::ry(int q, double angle) { gates.push_back({GateKind::RY, q, -1, angle}); }
void Circuit::rz(int q, double angle) { gates.push_back({GateKind::RZ, q, -1, angle}); }
void Circuit::h(int q) { gates.push_back({GateKind::H, q, -1, 0.0}); }
void Circuit::sdg(int q) { gates.push_back({GateKind::Sdg, q, -1, 0.0}); }
void Circuit::s(int q) { gates.push_back({GateKind::S, q, -1, 0.0}); }
void Circuit::x(int q) { gates.push_back({GateKind::X, q, -1, 0.0}); }

void Circuit::cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("cnot: control equals target");
  }
  gates.push_back({GateKind::CNOT, control, target, 0.0});
}

void Circuit::swap(int a, int b) {
  if (a == b) throw std::invalid_argument("swap: identical qubits");
  gates.push_back({GateKind::SWAP, a, b, 0.0});
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit gray_ansatz(int eta, std::span<const double> theta) {
  const int n_ry = (1 << eta) - 1;
  if (static_cast<int>(theta.size()) != n_ry) {
    throw std::invalid_argument("gray_ansatz: expected 2^eta - 1 parameters");
  }
  Circuit c(eta);
  int next = 0;
  for (int q = 0; q < eta; ++q) c.ry(q, 2.0 * theta[next++]);
  while (next < n_ry) {
    const int block = std::min(eta, n_ry - next);
    for (int k = 0; k < block; ++k) c.cnot(k, (k + 1) % eta);
    for (int k = 0; k < block; ++k) c.ry((k + 1) % eta, 2.0 * theta[next++]);
  }
  return c;
}

Circuit onehot_ansatz(int n_states, std::span<const double> theta) {
  if (n_states < 2) {
    throw std::invalid_argument("onehot_ansatz: N must be >= 2");
  }
  if (static_cast<int>(theta.size()) != n_states - 1) {
    throw std::invalid_argument("onehot_ansatz: expected N - 1 parameters");
  }
  // Amplitudes follow the spherical-coordinate cascade: the occupied qubit
  // walks from the last position toward qubit 0 as successive sines win.
  Circuit c(n_states);
  c.x(n_states - 1);
  for (int i = 1; i < n_states; ++i) {
    const int control = n_states - i;
    const int target = control - 1;
    const double angle = 2.0 * theta[i - 1];
    if (i == 1) {
      // Control is deterministically |1> here.
      c.ry(target, angle);
    } else {
      c.ry(target, angle / 2);
      c.cnot(control, target);
      c.ry(target, -angle / 2);
      c.cnot(control, target);
    }
    c.cnot(target, control);
  }
  return c;
}

Circuit append_measurement_rotations(const Circuit& c,
                                     const CommutingGroup& group) {
  Circuit out = c;
  for (std::size_t q = 0; q < group.basis.size(); ++q) {
    if (group.basis[q] == 'X') {
      out.h(static_cast<int>(q));
    } else if (group.basis[q] == 'Y') {
      out.sdg(static_cast<int>(q));
      out.h(static_cast<int>(q));
    }
  }
  return out;
}

ResourceReport count_resources(const Circuit& c) {
  ResourceReport r;
  std::vector<int> ready(c.qubit_count, 0);
  for (const auto& g : c.gates) {
    if (g.is_two_qubit()) {
      ++r.two_qubit_gates;
      const int start = std::max(ready[g.q0], ready[g.q1]);
      ready[g.q0] = ready[g.q1] = start + 1;
      r.depth = std::max(r.depth, start + 1);
    } else {
      ++r.single_qubit_gates;
      if (g.kind == GateKind::H || g.kind == GateKind::S ||
          g.kind == GateKind::Sdg) {
        ++r.basis_rotations;
      }
      const int start = ready[g.q0];
      ready[g.q0] = start + 1;
      r.depth = std::max(r.depth, start + 1);
    }
  }
  return r;
}

Circuit fold_cnots(const Circuit& c, int n) {
  if (n < 0) throw std::invalid_argument("fold_cnots: n must be >= 0");
  Circuit out(c.qubit_count);
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::CNOT) {
      for (int k = 0; k < 2 * n + 1; ++k) out.gates.push_back(g);
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

bool CouplingGraph::has_edge(int a, int b) const {
  for (const auto& [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

std::vector<int> CouplingGraph::shortest_path(int from, int to) const {
  std::vector<int> prev(node_count, -1);
  std::vector<bool> seen(node_count, false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (const auto& [a, b] : edges) {
      const int v = (a == u) ? b : (b == u ? a : -1);
      if (v >= 0 && !seen[v]) {
        seen[v] = true;
        prev[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[to]) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

RoutedCircuit route(const Circuit& c, const CouplingGraph& coupling,
                    std::span<const int> layout) {
  if (static_cast<int>(layout.size()) != c.qubit_count) {
    throw std::invalid_argument("route: layout size mismatch");
  }
  std::vector<int> phys(layout.begin(), layout.end());
  {
    std::vector<bool> used(coupling.node_count, false);
    for (int p : phys) {
      if (p < 0 || p >= coupling.node_count || used[p]) {
        throw std::invalid_argument("route: layout must be injective");
      }
      used[p] = true;
    }
  }
  RoutedCircuit out;
  out.circuit.qubit_count = coupling.node_count;
  auto emit_swap = [&](int a, int b) {
    out.circuit.cnot(a, b);
    out.circuit.cnot(b, a);
    out.circuit.cnot(a, b);
  };
  for (const auto& g : c.gates) {
    if (!g.is_two_qubit()) {
      Gate mapped = g;
      mapped.q0 = phys[g.q0];
      out.circuit.gates.push_back(mapped);
      continue;
    }
    if (!coupling.has_edge(phys[g.q0], phys[g.q1])) {
      const auto path = coupling.shortest_path(phys[g.q0], phys[g.q1]);
      if (path.empty()) {
        throw std::runtime_error("route: qubits not connected in coupling graph");
      }
      // Walk the first operand down the path until adjacent to the second.
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        emit_swap(path[i], path[i + 1]);
        // Update the logical map: whoever sat on path[i] or path[i+1] swaps.
        for (auto& p : phys) {
          if (p == path[i]) {
            p = path[i + 1];
          } else if (p == path[i + 1]) {
            p = path[i];
          }
        }
      }
    }
    Gate mapped = g;
    mapped.q0 = phys[g.q0];
    mapped.q1 = phys[g.q1];
    if (mapped.kind == GateKind::SWAP) {
      emit_swap(mapped.q0, mapped.q1);
    } else {
      out.circuit.gates.push_back(mapped);
    }
  }
  out.final_layout = phys;
  return out;
}

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::Sdg: return "SDG";
    case GateKind::S: return "S";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "qubits " << c.qubit_count << "\n";
  for (const auto& g : c.gates) {
    os << kind_name(g.kind) << " q" << g.q0;
    if (g.is_two_qubit()) os << " q" << g.q1;
    if (g.kind == GateKind::RY || g.kind == GateKind::RZ) os << " " << g.angle;
    os << "\n";
  }
  return os.str();
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Circuit c;
  auto parse_qubit = [](const std::string& tok) {
    if (tok.empty() || tok[0] != 'q') {
      throw std::invalid_argument("circuit_from_text: bad qubit token " + tok);
    }
    return std::stoi(tok.substr(1));
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    if (op == "qubits") {
      ls >> c.qubit_count;
    } else if (op == "RY" || op == "RZ") {
      std::string q;
      double angle;
      ls >> q >> angle;
      if (op == "RY") {
        c.ry(parse_qubit(q), angle);
      } else {
        c.rz(parse_qubit(q), angle);
      }
    } else if (op == "CNOT" || op == "SWAP") {
      std::string a, b;
      ls >> a >> b;
      if (op == "CNOT") {
        c.cnot(parse_qubit(a), parse_qubit(b));
      } else {
        c.swap(parse_qubit(a), parse_qubit(b));
      }
    } else if (op == "H" || op == "SDG" || op == "S" || op == "X") {
      std::string q;
      ls >> q;
      const int qi = parse_qubit(q);
      if (op == "H") c.h(qi);
      else if (op == "SDG") c.sdg(qi);
      else if (op == "S") c.s(qi);
      else c.x(qi);
    } else {
      throw std::invalid_argument("circuit_from_text: unknown gate " + op);
    }
  }
  return c;
}

}  // namespace gqe
