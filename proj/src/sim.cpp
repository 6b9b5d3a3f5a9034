#include "gqe/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "gqe/kernels.hpp"
#include "gqe/rng.hpp"

namespace gqe {

namespace {

using kernels::ops;

void gate_matrix(const Gate& g, cplx m[4]) {
  switch (g.kind) {
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      m[0] = c; m[1] = -s; m[2] = s; m[3] = c;
      return;
    }
    case GateKind::RZ: {
      m[0] = std::polar(1.0, -g.angle / 2);
      m[1] = 0; m[2] = 0;
      m[3] = std::polar(1.0, g.angle / 2);
      return;
    }
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m[0] = r; m[1] = r; m[2] = r; m[3] = -r;
      return;
    }
    case GateKind::Sdg:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = cplx{0, -1};
      return;
    case GateKind::S:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = cplx{0, 1};
      return;
    case GateKind::X:
      m[0] = 0; m[1] = 1; m[2] = 1; m[3] = 0;
      return;
    default:
      throw std::logic_error("gate_matrix: two-qubit gate");
  }
}

void check_indices(const Circuit& c) {
  for (const auto& g : c.gates) {
    const bool ok = g.q0 >= 0 && g.q0 < c.qubit_count &&
                    (!g.is_two_qubit() ||
                     (g.q1 >= 0 && g.q1 < c.qubit_count && g.q1 != g.q0));
    if (!ok) throw std::invalid_argument("circuit gate index out of range");
  }
}

}  // namespace

Statevector Statevector::zero(int qubits) {
  Statevector sv;
  sv.qubits = qubits;
  sv.amps.assign(std::size_t{1} << qubits, 0.0);
  sv.amps[0] = 1.0;
  return sv;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps.size());
  ops().probabilities(amps.data(), p.data(), amps.size());
  return p;
}

DensityMatrix DensityMatrix::zero_state(int qubits) {
  DensityMatrix dm;
  dm.qubits = qubits;
  dm.data.assign(std::size_t{1} << (2 * qubits), 0.0);
  dm.data[0] = 1.0;
  return dm;
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  DensityMatrix dm;
  dm.qubits = qubits;
  const std::size_t d = std::size_t{1} << qubits;
  dm.data.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) dm.at(i, i) = 1.0 / static_cast<double>(d);
  return dm;
}

DensityMatrix DensityMatrix::pure(const Statevector& psi) {
  DensityMatrix dm;
  dm.qubits = psi.qubits;
  const std::size_t d = psi.amps.size();
  dm.data.resize(d * d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) {
      dm.at(r, c) = psi.amps[r] * std::conj(psi.amps[c]);
    }
  }
  return dm;
}

Eigen::MatrixXcd DensityMatrix::matrix() const {
  const std::size_t d = dim();
  return Eigen::Map<const Eigen::MatrixXcd>(data.data(), d, d);
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd& m) {
  DensityMatrix dm;
  dm.qubits = std::countr_zero(static_cast<std::size_t>(m.rows()));
  dm.data.assign(m.data(), m.data() + m.size());
  return dm;
}

double DensityMatrix::trace_real() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += at(i, i).real();
  return acc;
}

std::vector<double> DensityMatrix::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = std::max(0.0, at(i, i).real());
  return p;
}

int QuantumState::qubits() const {
  if (statevector) return statevector->qubits;
  if (density) return density->qubits;
  return 0;
}

std::vector<double> QuantumState::probabilities() const {
  if (statevector) return statevector->probabilities();
  if (density) return density->probabilities();
  return {};
}

DensityMatrix QuantumState::to_density() const {
  if (density) return *density;
  if (statevector) return DensityMatrix::pure(*statevector);
  throw std::logic_error("QuantumState: empty");
}

double NoiseModel::single_rate(int q) const {
  for (const auto& [qubit, rate] : single_overrides) {
    if (qubit == q) return rate;
  }
  return default_single;
}

double NoiseModel::two_rate(int a, int b) const {
  for (const auto& [u, v, rate] : two_overrides) {
    if ((u == a && v == b) || (u == b && v == a)) return rate;
  }
  return default_two;
}

ReadoutConfusion NoiseModel::readout(int q) const {
  for (const auto& [qubit, conf] : readout_overrides) {
    if (qubit == q) return conf;
  }
  ReadoutConfusion c;
  c.p[0][0] = 1.0 - default_readout;
  c.p[0][1] = default_readout;
  c.p[1][0] = default_readout;
  c.p[1][1] = 1.0 - default_readout;
  return c;
}

bool NoiseModel::has_readout_error() const {
  return default_readout != 0.0 || !readout_overrides.empty();
}

bool NoiseModel::is_zero() const {
  return default_single == 0.0 && default_two == 0.0 &&
         default_readout == 0.0 && single_overrides.empty() &&
         two_overrides.empty() && readout_overrides.empty();
}

NoiseModel NoiseModel::from_json(const nlohmann::json& j) {
  NoiseModel model;
  if (j.contains("default")) {
    const auto& d = j.at("default");
    model.default_single = d.value("single_qubit_error", 0.0);
    model.default_two = d.value("two_qubit_error", 0.0);
    model.default_readout = d.value("readout_error", 0.0);
  }
  int max_node = -1;
  if (j.contains("qubits")) {
    for (const auto& node : j.at("qubits")) {
      const int id = node.at("id").get<int>();
      max_node = std::max(max_node, id);
      if (node.contains("single_qubit_error")) {
        model.single_overrides.emplace_back(
            id, node.at("single_qubit_error").get<double>());
      }
      if (node.contains("readout_error")) {
        const double r = node.at("readout_error").get<double>();
        ReadoutConfusion c;
        c.p[0][0] = 1 - r; c.p[0][1] = r; c.p[1][0] = r; c.p[1][1] = 1 - r;
        model.readout_overrides.emplace_back(id, c);
      }
      if (node.contains("readout_confusion")) {
        const auto& rc = node.at("readout_confusion");
        ReadoutConfusion c;
        for (int t = 0; t < 2; ++t) {
          for (int m = 0; m < 2; ++m) c.p[t][m] = rc.at(t).at(m).get<double>();
        }
        model.readout_overrides.emplace_back(id, c);
      }
    }
  }
  if (j.contains("edges")) {
    for (const auto& edge : j.at("edges")) {
      const int a = edge.at("a").get<int>();
      const int b = edge.at("b").get<int>();
      max_node = std::max({max_node, a, b});
      model.coupling.edges.emplace_back(a, b);
      if (edge.contains("two_qubit_error")) {
        model.two_overrides.emplace_back(a, b,
                                         edge.at("two_qubit_error").get<double>());
      }
    }
  }
  model.coupling.node_count = max_node + 1;
  model.enforce_coupling = j.value("enforce_coupling", false);
  if (model.enforce_coupling && model.coupling.edges.empty()) {
    throw std::invalid_argument("noise config enforces an empty coupling graph");
  }
  for (double r : {model.default_single, model.default_two, model.default_readout}) {
    if (r < 0.0 || r > 1.0) {
      throw std::invalid_argument("noise config: rate outside [0, 1]");
    }
  }
  return model;
}

NoiseModel NoiseModel::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open noise config: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

std::string ShotCounts::bitstring(std::size_t outcome) const {
  std::string s(qubits, '0');
  for (int b = 0; b < qubits; ++b) {
    if ((outcome >> b) & 1) s[b] = '1';
  }
  return s;
}

nlohmann::json ShotCounts::to_json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) obj[bitstring(i)] = counts[i];
  }
  return {{"qubits", qubits}, {"shots", shots}, {"counts", obj}};
}

Statevector run_statevector(const Circuit& c) {
  return run_statevector(c, Statevector::zero(c.qubit_count));
}

Statevector run_statevector(const Circuit& c, const Statevector& initial) {
  check_indices(c);
  if (initial.qubits != c.qubit_count) {
    throw std::invalid_argument("run_statevector: dimension mismatch");
  }
  Statevector sv = initial;
  const std::size_t n = sv.amps.size();
  cplx m[4];
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
        kernels::apply_cnot(sv.amps.data(), n, g.q0, g.q1);
        break;
      case GateKind::SWAP:
        kernels::apply_swap(sv.amps.data(), n, g.q0, g.q1);
        break;
      case GateKind::X:
        kernels::apply_x(sv.amps.data(), n, g.q0);
        break;
      default:
        gate_matrix(g, m);
        ops().apply_matrix2(sv.amps.data(), n, g.q0, m);
    }
  }
  return sv;
}

namespace {

// P rho P for the Hermitian Pauli with masks (x, z); phase of the sandwich
// is lambda(r) * conj(lambda(c)) with lambda(b) = i^{|x&z|} (-1)^{z.b},
// so the i^{|x&z|} factors cancel and only the Z signs survive.
void pauli_sandwich_accumulate(const DensityMatrix& rho, mask_t x, mask_t z,
                               double weight, DensityMatrix& acc) {
  const std::size_t d = rho.dim();
  for (std::size_t c = 0; c < d; ++c) {
    const double sc = (std::popcount(c & z) & 1) ? -1.0 : 1.0;
    for (std::size_t r = 0; r < d; ++r) {
      const double sr = (std::popcount(r & z) & 1) ? -1.0 : 1.0;
      acc.at(r, c) += weight * sr * sc * rho.at(r ^ x, c ^ x);
    }
  }
}

void depolarize_single(DensityMatrix& rho, int q, double p) {
  if (p <= 0.0) return;
  DensityMatrix acc = rho;
  for (auto& v : acc.data) v *= (1.0 - p);
  const mask_t bit = mask_t{1} << q;
  pauli_sandwich_accumulate(rho, bit, 0, p / 3.0, acc);    // X
  pauli_sandwich_accumulate(rho, bit, bit, p / 3.0, acc);  // Y
  pauli_sandwich_accumulate(rho, 0, bit, p / 3.0, acc);    // Z
  rho = std::move(acc);
}

void depolarize_two(DensityMatrix& rho, int qa, int qb, double p) {
  if (p <= 0.0) return;
  DensityMatrix acc = rho;
  for (auto& v : acc.data) v *= (1.0 - p);
  const mask_t ba = mask_t{1} << qa;
  const mask_t bb = mask_t{1} << qb;
  for (int wa = 0; wa < 4; ++wa) {
    for (int wb = 0; wb < 4; ++wb) {
      if (wa == 0 && wb == 0) continue;
      const mask_t x = ((wa & 1) ? ba : 0) | ((wb & 1) ? bb : 0);
      const mask_t z = ((wa & 2) ? ba : 0) | ((wb & 2) ? bb : 0);
      pauli_sandwich_accumulate(rho, x, z, p / 15.0, acc);
    }
  }
  rho = std::move(acc);
}

// U rho U^dagger via the vectorized trick: U acts on row bits (qubit k) and
// conj(U) on column bits (qubit k + q) of the flattened storage.
void density_apply_1q(DensityMatrix& rho, int q, const cplx m[4]) {
  const std::size_t n = rho.data.size();
  ops().apply_matrix2(rho.data.data(), n, q, m);
  const cplx mc[4] = {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]),
                      std::conj(m[3])};
  ops().apply_matrix2(rho.data.data(), n, q + rho.qubits, mc);
}

void density_apply_cnot(DensityMatrix& rho, int control, int target) {
  const std::size_t n = rho.data.size();
  kernels::apply_cnot(rho.data.data(), n, control, target);
  kernels::apply_cnot(rho.data.data(), n, control + rho.qubits,
                      target + rho.qubits);
}

void density_apply_swap(DensityMatrix& rho, int a, int b) {
  const std::size_t n = rho.data.size();
  kernels::apply_swap(rho.data.data(), n, a, b);
  kernels::apply_swap(rho.data.data(), n, a + rho.qubits, b + rho.qubits);
}

}  // namespace

DensityMatrix run_density(const Circuit& c, const NoiseModel& noise) {
  return run_density(c, noise, DensityMatrix::zero_state(c.qubit_count));
}

DensityMatrix run_density(const Circuit& c, const NoiseModel& noise,
                          const DensityMatrix& initial) {
  check_indices(c);
  if (initial.qubits != c.qubit_count) {
    throw std::invalid_argument("run_density: dimension mismatch");
  }
  DensityMatrix rho = initial;
  cplx m[4];
  for (const auto& g : c.gates) {
    if (g.is_two_qubit()) {
      if (noise.enforce_coupling && !noise.coupling.has_edge(g.q0, g.q1)) {
        throw std::invalid_argument(
            "run_density: two-qubit gate violates the coupling graph");
      }
      if (g.kind == GateKind::CNOT) {
        density_apply_cnot(rho, g.q0, g.q1);
      } else {
        density_apply_swap(rho, g.q0, g.q1);
      }
      depolarize_two(rho, g.q0, g.q1, noise.two_rate(g.q0, g.q1));
    } else {
      gate_matrix(g, m);
      density_apply_1q(rho, g.q0, m);
      depolarize_single(rho, g.q0, noise.single_rate(g.q0));
    }
  }
  return rho;
}

namespace {

std::vector<double> apply_readout_confusion(std::vector<double> probs,
                                            int qubits,
                                            const NoiseModel& noise) {
  for (int q = 0; q < qubits; ++q) {
    const ReadoutConfusion c = noise.readout(q);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < probs.size(); ++base) {
      if (base & bit) continue;
      const double p0 = probs[base];
      const double p1 = probs[base | bit];
      probs[base] = c.p[0][0] * p0 + c.p[1][0] * p1;
      probs[base | bit] = c.p[0][1] * p0 + c.p[1][1] * p1;
    }
  }
  return probs;
}

}  // namespace

ShotCounts sample_counts(const QuantumState& state, std::uint64_t shots,
                         const NoiseModel* noise, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  std::vector<double> probs = state.probabilities();
  if (noise != nullptr && noise->has_readout_error()) {
    probs = apply_readout_confusion(std::move(probs), state.qubits(), *noise);
  }
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  ShotCounts out;
  out.qubits = state.qubits();
  out.shots = shots;
  out.counts.assign(probs.size(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx =
        std::min<std::size_t>(it - cdf.begin(), probs.size() - 1);
    ++out.counts[idx];
  }
  return out;
}

double expectation_exact(const PauliSum& h, const QuantumState& state) {
  const std::size_t dim = std::size_t{1} << h.qubit_count();
  if (state.qubits() != h.qubit_count()) {
    throw std::invalid_argument("expectation_exact: dimension mismatch");
  }
  double energy = h.identity();
  if (state.statevector) {
    const auto& amps = state.statevector->amps;
    for (const auto& t : h.terms()) {
      energy += t.coefficient *
                kernels::pauli_expectation(amps.data(), dim, t.x, t.z);
    }
    return energy;
  }
  const DensityMatrix& rho = *state.density;
  static const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : h.terms()) {
    // tr(rho P) = sum_i rho[i][i^x] mu(i), mu(i) = i^{|x&z|} (-1)^{z.i}
    cplx acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & t.z) & 1) ? -1.0 : 1.0;
      acc += rho.at(i, i ^ t.x) * sign;
    }
    energy += t.coefficient * (kPhase[std::popcount(t.x & t.z) & 3] * acc).real();
  }
  return energy;
}

double expectation_sampled(const PauliSum& h, const Circuit& prep,
                           const SampledBackend& backend, std::uint64_t seed) {
  const auto groups = partition_commuting(h);
  double energy = h.identity();
  int group_index = 0;
  for (const auto& group : groups) {
    const Circuit circuit = append_measurement_rotations(prep, group);
    QuantumState state;
    if (backend.noise != nullptr && !backend.noise->is_zero()) {
      state = QuantumState(run_density(circuit, *backend.noise));
    } else {
      state = QuantumState(run_statevector(circuit));
    }
    const ShotCounts counts =
        sample_counts(state, backend.shots, backend.noise,
                      Rng::derive(seed, 0x67726f75, group_index));
    std::vector<double> freq;
    if (backend.mitigator != nullptr && *backend.mitigator) {
      freq = (*backend.mitigator)(counts);
    } else {
      freq.resize(counts.counts.size());
      for (std::size_t i = 0; i < freq.size(); ++i) {
        freq[i] = static_cast<double>(counts.counts[i]) /
                  static_cast<double>(counts.shots);
      }
    }
    for (const auto& t : group.terms) {
      const mask_t support = t.x | t.z;
      double est = 0.0;
      for (std::size_t outcome = 0; outcome < freq.size(); ++outcome) {
        est += (std::popcount(outcome & support) & 1) ? -freq[outcome]
                                                      : freq[outcome];
      }
      energy += t.coefficient * est;
    }
    ++group_index;
  }
  return energy;
}

DensityMatrix tomography(
    const std::function<ShotCounts(const Circuit& rotations)>& prep_runner,
    int qubits) {
  if (qubits > 4) throw std::invalid_argument("tomography: capped at 4 qubits");
  const std::size_t dim = std::size_t{1} << qubits;
  PauliSum estimate(qubits);
  estimate.add_identity(1.0 / static_cast<double>(dim));
  // Enumerate non-identity Paulis by base-4 digits: 0=I, 1=X, 2=Z, 3=Y.
  const std::size_t total = std::size_t{1} << (2 * qubits);
  for (std::size_t code = 1; code < total; ++code) {
    mask_t x = 0, z = 0;
    Circuit rotations(qubits);
    for (int q = 0; q < qubits; ++q) {
      const int digit = (code >> (2 * q)) & 3;
      if (digit == 1) {
        x |= mask_t{1} << q;
        rotations.h(q);
      } else if (digit == 2) {
        z |= mask_t{1} << q;
      } else if (digit == 3) {
        x |= mask_t{1} << q;
        z |= mask_t{1} << q;
        rotations.sdg(q);
        rotations.h(q);
      }
    }
    const ShotCounts counts = prep_runner(rotations);
    const mask_t support = x | z;
    double est = 0.0;
    for (std::size_t outcome = 0; outcome < counts.counts.size(); ++outcome) {
      const double f = static_cast<double>(counts.counts[outcome]) /
                       static_cast<double>(counts.shots);
      est += (std::popcount(outcome & support) & 1) ? -f : f;
    }
    estimate.add(x, z, est / static_cast<double>(dim));
  }
  estimate.simplify();
  Eigen::MatrixXcd raw = to_matrix(estimate);
  // Clip negative eigenvalues, renormalize the trace.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(raw);
  Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0);
  const double total_weight = vals.sum();
  if (total_weight <= 0.0) return DensityMatrix::maximally_mixed(qubits);
  vals /= total_weight;
  const Eigen::MatrixXcd projected = solver.eigenvectors() *
                                     vals.asDiagonal() *
                                     solver.eigenvectors().adjoint();
  return DensityMatrix::from_matrix(projected);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.qubits != sigma.qubits) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const Eigen::MatrixXcd diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace gqe
