#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gqe/circuit.hpp"
#include "gqe/pauli.hpp"
#include "json.hpp"

namespace gqe {

using cplx = std::complex<double>;

struct Statevector {
  int qubits = 0;
  std::vector<cplx> amps;

  static Statevector zero(int qubits);
  double norm() const;
  std::vector<double> probabilities() const;
};

// Column-major 2^q x 2^q density matrix, stored flat so single-qubit gates
// can reuse the statevector kernels on row bits (qubit k) and column bits
// (qubit k + q).
struct DensityMatrix {
  int qubits = 0;
  std::vector<cplx> data;

  static DensityMatrix zero_state(int qubits);
  static DensityMatrix maximally_mixed(int qubits);
  static DensityMatrix pure(const Statevector& psi);

  std::size_t dim() const { return std::size_t{1} << qubits; }
  cplx& at(std::size_t row, std::size_t col) { return data[row + (col << qubits)]; }
  const cplx& at(std::size_t row, std::size_t col) const {
    return data[row + (col << qubits)];
  }
  Eigen::MatrixXcd matrix() const;
  static DensityMatrix from_matrix(const Eigen::MatrixXcd& m);
  double trace_real() const;
  std::vector<double> probabilities() const;  // diagonal, clipped at 0
};

struct QuantumState {
  QuantumState() = default;
  QuantumState(Statevector sv) : statevector(std::move(sv)) {}
  QuantumState(DensityMatrix dm) : density(std::move(dm)) {}

  std::optional<Statevector> statevector;
  std::optional<DensityMatrix> density;

  int qubits() const;
  bool is_density() const { return density.has_value(); }
  std::vector<double> probabilities() const;
  DensityMatrix to_density() const;
};

struct ReadoutConfusion {
  // Row-stochastic, indexed [true][measured].
  double p[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
};

// Per-qubit single-gate depolarizing rates, per-pair two-qubit rates,
// per-qubit readout confusion, plus an optional coupling graph.
struct NoiseModel {
  double default_single = 0.0;
  double default_two = 0.0;
  double default_readout = 0.0;
  std::vector<std::pair<int, double>> single_overrides;
  std::vector<std::tuple<int, int, double>> two_overrides;
  std::vector<std::pair<int, ReadoutConfusion>> readout_overrides;
  CouplingGraph coupling;
  bool enforce_coupling = false;

  double single_rate(int q) const;
  double two_rate(int a, int b) const;
  ReadoutConfusion readout(int q) const;
  bool has_readout_error() const;
  bool is_zero() const;

  static NoiseModel from_json(const nlohmann::json& j);
  static NoiseModel from_file(const std::string& path);
};

struct ShotCounts {
  int qubits = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;  // indexed by outcome, bit b = qubit b

  std::string bitstring(std::size_t outcome) const;  // qubit 0 leftmost
  nlohmann::json to_json() const;
};

Statevector run_statevector(const Circuit& c);
Statevector run_statevector(const Circuit& c, const Statevector& initial);

// Applies the matching depolarizing channel after every gate; readout error
// is applied at sampling time, not here. With enforce_coupling set, every
// two-qubit gate must act on a coupled pair.
DensityMatrix run_density(const Circuit& c, const NoiseModel& noise);
DensityMatrix run_density(const Circuit& c, const NoiseModel& noise,
                          const DensityMatrix& initial);

// Multinomial draw from the Born probabilities (per-shot inverse-CDF with
// integer-exact bookkeeping); optional readout confusion applied to the
// outcome probabilities first. Deterministic for a given seed.
ShotCounts sample_counts(const QuantumState& state, std::uint64_t shots,
                         const NoiseModel* noise, std::uint64_t seed);

double expectation_exact(const PauliSum& h, const QuantumState& state);

// Turns raw counts into a quasi-probability vector (measurement-error
// mitigation hook); must return 2^q entries.
using CountsFilter = std::function<std::vector<double>(const ShotCounts&)>;

struct SampledBackend {
  std::uint64_t shots = 10000;
  const NoiseModel* noise = nullptr;       // null = shot noise only
  const CountsFilter* mitigator = nullptr;  // optional
};

// Partitions h into qubit-wise commuting groups, runs prep plus the group's
// basis rotations per group, and combines count-estimated term expectations
// with the identity offset. Consumes shots_per_group shots per group.
double expectation_sampled(const PauliSum& h, const Circuit& prep,
                           const SampledBackend& backend, std::uint64_t seed);

// Linear-inversion state tomography from all 4^q - 1 Pauli expectations,
// each measured through prep_runner (which receives the basis-rotation
// circuit to append and execute). The estimate is projected to the nearest
// PSD trace-one matrix by eigenvalue clipping and renormalization.
DensityMatrix tomography(
    const std::function<ShotCounts(const Circuit& rotations)>& prep_runner,
    int qubits);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace gqe
