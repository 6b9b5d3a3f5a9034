#include "gqe/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gqe/rng.hpp"
#include "gqe/vqe.hpp"

namespace gqe {

TrotterPlan TrotterPlan::group_major(const PauliSum& h, double time,
                                     int steps) {
  if (steps < 1) throw std::invalid_argument("trotter: steps must be >= 1");
  TrotterPlan plan;
  plan.hamiltonian = h;
  plan.time = time;
  plan.steps = steps;
  for (const auto& group : partition_commuting(h)) {
    for (const auto& term : group.terms) plan.term_order.push_back(term);
  }
  return plan;
}

TrotterPlan TrotterPlan::pair_adjacent(const PauliSum& h, double time,
                                       int steps) {
  TrotterPlan plan = group_major(h, time, steps);
  // Bring X-string/Y-string partners on the same support together (e.g.
  // X_nX_{n+1} with Y_nY_{n+1}): the partners commute and their combined
  // exponential is exactly the number-conserving pair hop, so one-hot
  // evolution stays inside the one-hot subspace at every step count.
  auto& order = plan.term_order;
  auto is_partner_pair = [](const PauliTerm& a, const PauliTerm& b) {
    if (a.x != b.x || a.weight() < 2) return false;
    return (a.z == 0 && b.z == b.x) || (a.z == a.x && b.z == 0);
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (is_partner_pair(order[i], order[j])) {
        const PauliTerm partner = order[j];
        order.erase(order.begin() + j);
        order.insert(order.begin() + i + 1, partner);
        break;
      }
    }
  }
  return plan;
}

Statevector exact_evolution(const Eigen::MatrixXcd& hamiltonian, double time,
                            const Statevector& psi0) {
  const Eigen::Index dim = hamiltonian.rows();
  if (dim > (1 << 12)) {
    throw std::invalid_argument("exact_evolution: dense oracle capped at 2^12");
  }
  if (static_cast<Eigen::Index>(psi0.amps.size()) != dim) {
    throw std::invalid_argument("exact_evolution: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  const Eigen::Map<const Eigen::VectorXcd> v(psi0.amps.data(), dim);
  Eigen::VectorXcd coeffs = solver.eigenvectors().adjoint() * v;
  for (Eigen::Index i = 0; i < dim; ++i) {
    coeffs(i) *= std::polar(1.0, -solver.eigenvalues()(i) * time);
  }
  const Eigen::VectorXcd evolved = solver.eigenvectors() * coeffs;
  Statevector out;
  out.qubits = psi0.qubits;
  out.amps.assign(evolved.data(), evolved.data() + dim);
  return out;
}

Statevector exact_evolution(const PauliSum& h, double time,
                            const Statevector& psi0) {
  return exact_evolution(to_matrix(h), time, psi0);
}

Circuit trotter_circuit(const TrotterPlan& plan) {
  const int qubits = plan.hamiltonian.qubit_count();
  Circuit c(qubits);
  const double dt = plan.time / plan.steps;
  for (int step = 0; step < plan.steps; ++step) {
    for (const auto& term : plan.term_order) {
      std::vector<int> support;
      for (int q = 0; q < qubits; ++q) {
        if (((term.x | term.z) >> q) & 1) support.push_back(q);
      }
      if (support.empty()) continue;  // identity: global phase, dropped
      for (int q : support) {
        const char f = term.factor(q);
        if (f == 'X') {
          c.h(q);
        } else if (f == 'Y') {
          c.sdg(q);
          c.h(q);
        }
      }
      for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        c.cnot(support[i], support[i + 1]);
      }
      c.rz(support.back(), 2.0 * term.coefficient * dt);
      for (std::size_t i = support.size() - 1; i-- > 0;) {
        c.cnot(support[i], support[i + 1]);
      }
      for (int q : support) {
        const char f = term.factor(q);
        if (f == 'X') {
          c.h(q);
        } else if (f == 'Y') {
          c.h(q);
          c.s(q);
        }
      }
    }
  }
  return c;
}

Circuit prepare_uniform(Encoding encoding, int n_states) {
  if (encoding == Encoding::Gray || encoding == Encoding::Binary) {
    const int eta = encoded_qubit_count(encoding, n_states);
    if ((1 << eta) != n_states) {
      throw std::invalid_argument(
          "prepare_uniform: exact uniform superposition needs N a power of 2");
    }
    Circuit c(eta);
    for (int q = 0; q < eta; ++q) c.h(q);
    return c;
  }
  // W-state cascade: the amplitude left on the occupied qubit k is fixed to
  // 1/sqrt(N) at each split.
  const int n = n_states;
  Circuit c(n);
  c.x(0);
  double remaining = 1.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double keep = (1.0 / std::sqrt(static_cast<double>(n))) /
                        std::sqrt(remaining);
    const double phi = std::acos(std::min(1.0, keep));
    if (k == 0) {
      c.ry(1, 2.0 * phi);
      c.cnot(1, 0);
    } else {
      c.ry(k + 1, phi);
      c.cnot(k, k + 1);
      c.ry(k + 1, -phi);
      c.cnot(k, k + 1);
      c.cnot(k + 1, k);
    }
    remaining *= (1.0 - keep * keep);
  }
  return c;
}

std::vector<int> default_step_grid() {
  return {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 30, 50, 75, 100};
}

namespace {

struct SweepContext {
  PauliSum hamiltonian;
  Circuit prep;
  DensityMatrix rho_exact;
  std::vector<double> exact_probabilities;
  MitigationCalibration calibration;
  bool mitigate = false;
};

SweepRecord run_point(const SweepConfig& config, const SweepContext& ctx,
                      int steps) {
  SweepRecord record;
  record.steps = steps;
  Circuit circuit = ctx.prep;
  circuit.append(
      trotter_circuit(TrotterPlan::group_major(ctx.hamiltonian, config.time, steps)));

  QuantumState state;
  if (config.noisy) {
    state = QuantumState(run_density(circuit, config.noise));
  } else {
    state = QuantumState(run_statevector(circuit));
  }

  const std::uint64_t point_seed = Rng::derive(config.seed, 0x73776565, steps);
  const NoiseModel* sample_noise = config.noisy ? &config.noise : nullptr;
  const ShotCounts basis_counts =
      sample_counts(state, config.shots, sample_noise, point_seed);
  record.sampled_probabilities.resize(basis_counts.counts.size());
  std::vector<double> freq;
  if (ctx.mitigate) {
    freq = mitigate_counts(basis_counts, ctx.calibration);
  } else {
    freq.resize(basis_counts.counts.size());
    for (std::size_t i = 0; i < freq.size(); ++i) {
      freq[i] = static_cast<double>(basis_counts.counts[i]) /
                static_cast<double>(basis_counts.shots);
    }
  }
  record.sampled_probabilities = freq;
  record.exact_probabilities = ctx.exact_probabilities;

  // Tomography re-samples the evolved state through every Pauli basis; each
  // setting only appends rotation gates to the already-simulated state.
  int setting = 0;
  auto runner = [&](const Circuit& rotations) {
    Circuit rot = rotations;
    QuantumState rotated;
    if (config.noisy) {
      rotated = QuantumState(run_density(rot, config.noise, *state.density));
    } else {
      rotated = QuantumState(run_statevector(rot, *state.statevector));
    }
    ShotCounts counts =
        sample_counts(rotated, config.shots, sample_noise,
                      Rng::derive(point_seed, 0x746f6d6f, setting));
    ++setting;
    if (ctx.mitigate) {
      const std::vector<double> p = mitigate_counts(counts, ctx.calibration);
      for (std::size_t i = 0; i < p.size(); ++i) {
        counts.counts[i] = static_cast<std::uint64_t>(
            std::llround(p[i] * static_cast<double>(counts.shots)));
      }
    }
    return counts;
  };
  const DensityMatrix rho = tomography(runner, ctx.hamiltonian.qubit_count());
  record.trace_distance = trace_distance(rho, ctx.rho_exact);
  return record;
}

}  // namespace

std::vector<SweepRecord> trotter_sweep(const SweepConfig& config) {
  if (!std::is_sorted(config.step_list.begin(), config.step_list.end())) {
    throw std::invalid_argument("trotter_sweep: step list must be ascending");
  }
  SweepContext ctx;
  const TridiagonalHamiltonian tri = deuteron_hamiltonian(config.n_states);
  ctx.hamiltonian = encode(config.encoding, tri);
  ctx.prep = prepare_uniform(config.encoding, config.n_states);
  const Statevector psi0 = run_statevector(ctx.prep);
  const Statevector evolved = exact_evolution(ctx.hamiltonian, config.time, psi0);
  ctx.rho_exact = DensityMatrix::pure(evolved);
  ctx.exact_probabilities = evolved.probabilities();
  ctx.mitigate = config.mitigate && config.noisy;
  if (ctx.mitigate) {
    ctx.calibration = build_calibration(
        ctx.hamiltonian.qubit_count(), config.noise, config.shots,
        Rng::derive(config.seed, 0x63616c6962));
  }

  std::vector<SweepRecord> records(config.step_list.size());
  const int jobs = std::max(1, config.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.step_list.size()) break;
      records[i] = run_point(config, ctx, config.step_list[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

double decoherence_plateau(const SweepConfig& config) {
  const TridiagonalHamiltonian tri = deuteron_hamiltonian(config.n_states);
  const PauliSum h = encode(config.encoding, tri);
  const Circuit prep = prepare_uniform(config.encoding, config.n_states);
  const Statevector evolved =
      exact_evolution(h, config.time, run_statevector(prep));
  return trace_distance(DensityMatrix::pure(evolved),
                        DensityMatrix::maximally_mixed(evolved.qubits));
}

}  // namespace gqe
