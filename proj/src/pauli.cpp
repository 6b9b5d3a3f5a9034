#include "gqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "gqe/kernels.hpp"

namespace gqe {

namespace {

constexpr double kCoefficientEpsilon = 1e-12;

// Single-qubit products W1*W2 -> (result, power of i), W in {I,X,Z,Y}
// indexed by (x bit, z bit) as w = x + 2z: I=0, X=1, Z=2, Y=3.
struct QubitProduct {
  int w;
  int phase;
};
constexpr QubitProduct kQubitTable[4][4] = {
    // rhs:   I       X       Z       Y
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},  // I
    {{1, 0}, {0, 0}, {3, 3}, {2, 1}},  // X  (XZ=-iY, XY=iZ)
    {{2, 0}, {3, 1}, {0, 0}, {1, 3}},  // Z  (ZX=iY,  ZY=-iX)
    {{3, 0}, {2, 3}, {1, 1}, {0, 0}},  // Y  (YX=-iZ, YZ=iX)
};

}  // namespace

int PauliTerm::weight() const {
  return std::popcount(x | z);
}

char PauliTerm::factor(int qubit) const {
  const bool xb = (x >> qubit) & 1;
  const bool zb = (z >> qubit) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliProduct pauli_product(const PauliTerm& a, const PauliTerm& b) {
  PauliProduct out;
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  int phase = 0;
  mask_t support = (a.x | a.z | b.x | b.z);
  while (support) {
    const int q = std::countr_zero(support);
    support &= support - 1;
    const int wa = static_cast<int>((a.x >> q) & 1) +
                   2 * static_cast<int>((a.z >> q) & 1);
    const int wb = static_cast<int>((b.x >> q) & 1) +
                   2 * static_cast<int>((b.z >> q) & 1);
    phase += kQubitTable[wa][wb].phase;
  }
  out.phase_quarter = phase & 3;
  return out;
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  const int anti = std::popcount(a.x & b.z) + std::popcount(a.z & b.x);
  return (anti & 1) == 0;
}

bool qubitwise_commutes(const PauliTerm& a, const PauliTerm& b) {
  const mask_t shared = (a.x | a.z) & (b.x | b.z);
  return ((a.x ^ b.x) & shared) == 0 && ((a.z ^ b.z) & shared) == 0;
}

void PauliSum::add(mask_t x, mask_t z, double coefficient) {
  if (x == 0 && z == 0) {
    identity_ += coefficient;
    return;
  }
  terms_.push_back({x, z, coefficient});
  dirty_ = true;
}

void PauliSum::simplify() {
  std::map<std::pair<mask_t, mask_t>, double> merged;
  for (const auto& t : terms_) {
    merged[{t.x, t.z}] += t.coefficient;
  }
  terms_.clear();
  for (const auto& [masks, c] : merged) {
    if (std::abs(c) >= kCoefficientEpsilon) {
      terms_.push_back({masks.first, masks.second, c});
    }
  }
  if (std::abs(identity_) < kCoefficientEpsilon) identity_ = 0.0;
  dirty_ = false;
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.weight());
  return w;
}

double PauliSum::coefficient_of(mask_t x, mask_t z) const {
  if (x == 0 && z == 0) return identity_;
  for (const auto& t : terms_) {
    if (t.x == x && t.z == z) return t.coefficient;
  }
  return 0.0;
}

std::string PauliSum::label_of(const PauliTerm& term) const {
  std::string s(qubit_count_, 'I');
  for (int q = 0; q < qubit_count_; ++q) s[q] = term.factor(q);
  return s;
}

nlohmann::json PauliSum::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  if (identity_ != 0.0) {
    terms.push_back({std::string(qubit_count_, 'I'), identity_});
  }
  for (const auto& t : terms_) {
    terms.push_back({label_of(t), t.coefficient});
  }
  return {{"qubits", qubit_count_}, {"terms", terms}};
}

PauliSum PauliSum::from_json(const nlohmann::json& j) {
  PauliSum sum(j.at("qubits").get<int>());
  for (const auto& entry : j.at("terms")) {
    const auto label = entry.at(0).get<std::string>();
    const double c = entry.at(1).get<double>();
    if (label.size() != static_cast<std::size_t>(sum.qubit_count())) {
      throw std::invalid_argument("pauli label length mismatch: " + label);
    }
    const PauliTerm t = term_from_label(label, c);
    if (t.is_identity()) {
      sum.add_identity(c);
    } else {
      sum.add(t.x, t.z, c);
    }
  }
  sum.simplify();
  return sum;
}

PauliTerm term_from_label(const std::string& label, double coefficient) {
  PauliTerm t;
  t.coefficient = coefficient;
  for (std::size_t q = 0; q < label.size(); ++q) {
    switch (label[q]) {
      case 'I':
        break;
      case 'X':
        t.x |= mask_t{1} << q;
        break;
      case 'Y':
        t.x |= mask_t{1} << q;
        t.z |= mask_t{1} << q;
        break;
      case 'Z':
        t.z |= mask_t{1} << q;
        break;
      default:
        throw std::invalid_argument("bad pauli label: " + label);
    }
  }
  return t;
}

PauliSum projector_expand(std::span<const ProjectorFactor> pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("projector_expand: empty pattern");
  }
  PauliSum sum(static_cast<int>(pattern.size()));
  const std::size_t n = pattern.size();
  // Enumerate the identity/Z choice for every projector factor.
  std::vector<std::size_t> proj_positions;
  mask_t x = 0;
  for (std::size_t q = 0; q < n; ++q) {
    switch (pattern[q]) {
      case ProjectorFactor::X:
        x |= mask_t{1} << q;
        break;
      case ProjectorFactor::P0:
      case ProjectorFactor::P1:
        proj_positions.push_back(q);
        break;
      case ProjectorFactor::I:
        break;
    }
  }
  const std::size_t k = proj_positions.size();
  const double scale = std::pow(0.5, static_cast<double>(k));
  for (mask_t choice = 0; choice < (mask_t{1} << k); ++choice) {
    mask_t z = 0;
    double sign = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((choice >> j) & 1) {
        const std::size_t q = proj_positions[j];
        z |= mask_t{1} << q;
        if (pattern[q] == ProjectorFactor::P1) sign = -sign;
      }
    }
    sum.add(x, z, sign * scale);
  }
  sum.simplify();
  return sum;
}

Eigen::MatrixXcd to_matrix(const PauliSum& sum) {
  if (sum.qubit_count() > 12) {
    throw std::invalid_argument("to_matrix: dense oracle capped at 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << sum.qubit_count();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m.diagonal().setConstant(sum.identity());
  static const std::complex<double> kPhase[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : sum.terms()) {
    const std::complex<double> front =
        kPhase[std::popcount(t.x & t.z) & 3] * t.coefficient;
    for (std::size_t col = 0; col < dim; ++col) {
      const double sign = (std::popcount(col & t.z) & 1) ? -1.0 : 1.0;
      m(col ^ t.x, col) += front * sign;
    }
  }
  return m;
}

std::vector<CommutingGroup> partition_commuting(const PauliSum& sum) {
  std::vector<PauliTerm> terms = sum.terms();
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PauliTerm& a, const PauliTerm& b) {
                     if (a.weight() != b.weight()) {
                       return a.weight() > b.weight();
                     }
                     return std::tie(a.x, a.z) < std::tie(b.x, b.z);
                   });
  std::vector<CommutingGroup> groups;
  for (const auto& term : terms) {
    bool placed = false;
    for (auto& g : groups) {
      const bool fits = std::all_of(
          g.terms.begin(), g.terms.end(),
          [&](const PauliTerm& other) { return qubitwise_commutes(term, other); });
      if (fits) {
        g.terms.push_back(term);
        placed = true;
        break;
      }
    }
    if (!placed) {
      groups.push_back({{term}, {}});
    }
  }
  for (auto& g : groups) {
    g.basis.assign(sum.qubit_count(), 'Z');
    for (const auto& t : g.terms) {
      for (int q = 0; q < sum.qubit_count(); ++q) {
        const char f = t.factor(q);
        if (f != 'I') g.basis[q] = f;
      }
    }
  }
  // Canonical group order: the all-Z set first, then by rotated qubits
  // (ascending), Y sets before X sets on the same qubits. This is the
  // enumeration the set tables use (S_Z, S_X0, S_X1, ... and Z / YY / XX).
  auto group_key = [](const CommutingGroup& g) {
    std::vector<int> tagged;
    int y_rank = 0;
    for (std::size_t q = 0; q < g.basis.size(); ++q) {
      if (g.basis[q] != 'Z') {
        tagged.push_back(static_cast<int>(q));
        if (g.basis[q] == 'X') y_rank = 1;
      }
    }
    return std::tuple(tagged.empty() ? 0 : 1, tagged, y_rank);
  };
  std::stable_sort(groups.begin(), groups.end(),
                   [&](const CommutingGroup& a, const CommutingGroup& b) {
                     return group_key(a) < group_key(b);
                   });
  return groups;
}

int measurement_rotation_count(std::span<const CommutingGroup> groups) {
  int count = 0;
  for (const auto& g : groups) {
    for (char b : g.basis) {
      if (b == 'X') count += 1;
      if (b == 'Y') count += 2;
    }
  }
  return count;
}

std::vector<double> pauli_covariance_spectrum(
    const PauliSum& sum, std::span<const std::complex<double>> amplitudes) {
  const std::size_t dim = std::size_t{1} << sum.qubit_count();
  if (amplitudes.size() != dim) {
    throw std::invalid_argument("pauli_covariance_spectrum: dimension mismatch");
  }
  const auto& terms = sum.terms();
  const int n = static_cast<int>(terms.size());
  std::vector<double> means(n);
  for (int i = 0; i < n; ++i) {
    means[i] = kernels::pauli_expectation(amplitudes.data(), dim, terms[i].x,
                                          terms[i].z);
  }
  Eigen::MatrixXd cov(n, n);
  static const std::complex<double> kPhase[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double sym = 0.0;
      if (commutes(terms[i], terms[j])) {
        // QiQj = QjQi is Hermitian with phase +-1 here.
        const PauliProduct p = pauli_product(terms[i], terms[j]);
        const double phase = kPhase[p.phase_quarter].real();
        sym = phase * kernels::pauli_expectation(amplitudes.data(), dim, p.x,
                                                 p.z);
      }
      const double c = sym - means[i] * means[j];
      cov(i, j) = c;
      cov(j, i) = c;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  std::vector<double> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + n);
  std::sort(eigs.rbegin(), eigs.rend());
  return eigs;
}

}  // namespace gqe
