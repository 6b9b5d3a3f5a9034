#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gqe/circuit.hpp"
#include "gqe/encoder.hpp"
#include "gqe/sim.hpp"

namespace gqe {

struct SpsaConfig {
  double a = 0.628;      // step scale
  double c = 0.1;        // perturbation scale
  double alpha = 0.602;  // step decay exponent
  double gamma = 0.101;  // perturbation decay exponent
  // Spall's stability offset A in a_k = a / (k + 1 + A)^alpha; negative
  // means the usual 1% of the iteration budget. Without it the first steps
  // are a/1^alpha times gradients of tens of MeV/rad and the larger
  // problems never recover from the initial thrashing.
  double stability = -1.0;
  int iterations = 5000;
  std::uint64_t seed = 0;

  double stability_offset() const {
    return stability >= 0.0 ? stability : 0.01 * iterations;
  }
};

struct VqeResult {
  double best_energy = 0.0;      // minimum of the energy history
  double reported_energy = 0.0;  // mean of the last 5% of the history
  std::vector<double> best_parameters;
  std::vector<double> final_parameters;
  std::vector<double> energy_history;  // one entry per iteration
  long evaluations = 0;
  std::uint64_t seed = 0;
};

// theta_{k+1} = theta_k - a_k g_k with g_k estimated from two evaluations at
// theta_k +- c_k Delta_k, Delta components +-1, a_k = a/(k+1)^alpha,
// c_k = c/(k+1)^gamma. Deterministic given cfg.seed.
VqeResult spsa_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> theta0, const SpsaConfig& cfg);

// Readout confusion estimated from preparing every computational basis
// state under the noise model: confusion(j, i) = P(measure j | prepared i),
// columns summing to one up to sampling error.
struct MitigationCalibration {
  int qubits = 0;
  Eigen::MatrixXd confusion;
};

MitigationCalibration build_calibration(int qubits, const NoiseModel& noise,
                                        std::uint64_t shots,
                                        std::uint64_t seed);

// Least-squares solve of confusion * p = frequencies, negatives clipped and
// the result renormalized. Falls back to the raw frequencies if the
// calibration matrix is numerically singular.
std::vector<double> mitigate_counts(const ShotCounts& counts,
                                    const MitigationCalibration& cal);

CountsFilter make_mitigator(const MitigationCalibration& cal);

struct ZnePoint {
  int fold_level = 1;  // 2n+1
  double energy = 0.0;
  double sigma = 1.0;
};

struct ZneFit {
  double intercept = 0.0;  // E(0)
  double slope = 0.0;
  double intercept_sigma = 0.0;  // rms of statistical and fit errors
  double fit_rms = 0.0;          // rms residual of the weighted fit
  std::vector<ZnePoint> points;
};

// Weighted linear least squares of energy against fold level.
ZneFit zne_extrapolate(std::span<const ZnePoint> points);

struct Ansatz {
  int parameter_count = 0;
  int qubit_count = 0;
  std::function<Circuit(std::span<const double>)> build;
};

Ansatz make_ansatz(Encoding encoding, int n_states);

enum class BackendKind { Statevector, Sampled, Noisy };

struct VqeBackend {
  BackendKind kind = BackendKind::Statevector;
  std::uint64_t shots = 10000;
  NoiseModel noise;  // Noisy only
};

struct VqeOptions {
  VqeBackend backend;
  SpsaConfig spsa;
  bool mitigate = false;              // Noisy only
  std::vector<int> zne_fold_levels;   // e.g. {1,3,5,7}; empty disables ZNE
  std::uint64_t calibration_shots = 10000;
};

// Full driver: draws theta0 uniformly from (-pi/2, pi/2), builds the
// objective for the requested backend (optionally with measurement-error
// mitigation and per-step zero-noise extrapolation) and runs SPSA.
VqeResult vqe_run(const PauliSum& h, const Ansatz& ansatz,
                  const VqeOptions& options);

}  // namespace gqe
