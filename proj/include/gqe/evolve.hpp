#pragma once

#include <cstdint>
#include <vector>

#include "gqe/circuit.hpp"
#include "gqe/encoder.hpp"
#include "gqe/sim.hpp"

namespace gqe {

// Trotterized evolution of a Pauli-sum Hamiltonian: T repetitions of the
// per-term exponentials exp(-i q_j Q_j t/T) in term_order. The identity
// coefficient only contributes a global phase and is dropped from the
// synthesized circuit (recorded here so oracles can restore it).
struct TrotterPlan {
  PauliSum hamiltonian;
  double time = 0.0;  // MeV^-1 with hbar = 1
  int steps = 1;
  std::vector<PauliTerm> term_order;

  // Default ordering: commuting group after commuting group, in the order
  // partition_commuting emits them.
  static TrotterPlan group_major(const PauliSum& h, double time, int steps);

  // Group-major, then X-string/Y-string partners on the same support made
  // adjacent. Under this ordering one-hot evolution conserves the particle
  // number exactly at any step count; under plain group-major it only does
  // so in the large-step limit.
  static TrotterPlan pair_adjacent(const PauliSum& h, double time, int steps);
};

// Eigendecomposition-based exp(-iHt)|psi0>; dense, capped at 12 qubits.
Statevector exact_evolution(const Eigen::MatrixXcd& hamiltonian, double time,
                            const Statevector& psi0);
Statevector exact_evolution(const PauliSum& h, double time,
                            const Statevector& psi0);

// Per term: basis changes (H for X, S-dagger then H for Y), a CNOT chain
// over the support onto its highest qubit, RZ(2 q_j t/T), then uncompute.
Circuit trotter_circuit(const TrotterPlan& plan);

// Uniform superposition over the encoding's relevant basis states:
// Hadamards on every qubit for gray/binary, a W-state-style cascade over
// the N one-hot states for onehot.
Circuit prepare_uniform(Encoding encoding, int n_states);

struct SweepRecord {
  int steps = 0;
  std::vector<double> sampled_probabilities;  // from shot counts
  std::vector<double> exact_probabilities;    // from the evolution oracle
  double trace_distance = 0.0;  // tomographic rho vs exact rho
};

struct SweepConfig {
  Encoding encoding = Encoding::Gray;
  int n_states = 4;
  double time = 1.0;
  std::vector<int> step_list;  // ascending
  bool noisy = false;
  NoiseModel noise;
  bool mitigate = false;  // measurement-error mitigation on tomography counts
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
  int jobs = 1;
};

// {1,2,3,4,5,6,8,10,12,15,20,30,50,75,100}
std::vector<int> default_step_grid();

std::vector<SweepRecord> trotter_sweep(const SweepConfig& config);

// Trace distance between the exact evolved state and the maximally mixed
// state (the plateau reference for decohered noisy sweeps).
double decoherence_plateau(const SweepConfig& config);

}  // namespace gqe
