#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace gqe {

using mask_t = std::uint64_t;

// A Hermitian Pauli string stored as X/Z bit masks with a real coefficient.
// Bit b of a mask refers to qubit b; a qubit with both bits set carries Y.
// The operator for masks (x, z) is i^{|x&z|} X^x Z^z, which is exactly the
// tensor product of I/X/Y/Z factors, so coefficients stay real throughout.
struct PauliTerm {
  mask_t x = 0;
  mask_t z = 0;
  double coefficient = 0.0;

  int weight() const;
  bool is_identity() const { return x == 0 && z == 0; }
  char factor(int qubit) const;  // 'I', 'X', 'Y' or 'Z'
};

// Product of two Hermitian Paulis: i^phase_quarter * (x1^x2, z1^z2).
struct PauliProduct {
  mask_t x = 0;
  mask_t z = 0;
  int phase_quarter = 0;  // power of i, mod 4
};
PauliProduct pauli_product(const PauliTerm& a, const PauliTerm& b);
bool commutes(const PauliTerm& a, const PauliTerm& b);
bool qubitwise_commutes(const PauliTerm& a, const PauliTerm& b);

// Real-weighted sum of distinct Pauli strings plus an identity offset.
// Coefficients are in MeV when the sum houses a Hamiltonian.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int qubit_count) : qubit_count_(qubit_count) {}

  int qubit_count() const { return qubit_count_; }
  double identity() const { return identity_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  void add_identity(double coefficient) { identity_ += coefficient; }
  void add(mask_t x, mask_t z, double coefficient);

  // Merges duplicate masks and drops |coefficient| < 1e-12.
  void simplify();

  int max_weight() const;
  double coefficient_of(mask_t x, mask_t z) const;  // 0 when absent

  std::string label_of(const PauliTerm& term) const;  // qubit 0 leftmost
  nlohmann::json to_json() const;
  static PauliSum from_json(const nlohmann::json& j);

 private:
  int qubit_count_ = 0;
  double identity_ = 0.0;
  std::vector<PauliTerm> terms_;
  bool dirty_ = false;
};

PauliTerm term_from_label(const std::string& label, double coefficient);

// Simultaneously measurable (qubit-wise commuting) subset of a PauliSum.
// basis[q] is 'Z', 'X' or 'Y'; 'Z' means no pre-measurement rotation.
struct CommutingGroup {
  std::vector<PauliTerm> terms;
  std::vector<char> basis;
};

enum class ProjectorFactor { P0, P1, X, I };

// Exact Pauli expansion of a tensor product of projectors and X factors,
// with P0 = (1+Z)/2 and P1 = (1-Z)/2.
PauliSum projector_expand(std::span<const ProjectorFactor> pattern);

// Dense Hermitian matrix of the sum; basis index bit b = qubit b.
// Oracle-sized only: throws std::invalid_argument beyond 12 qubits.
Eigen::MatrixXcd to_matrix(const PauliSum& sum);

// Greedy first-fit qubit-wise-commuting grouping over terms sorted by
// weight descending. Reproduces the group structure of the one-hot, Gray
// and standard-binary deuteron Hamiltonians; no optimality claim beyond.
std::vector<CommutingGroup> partition_commuting(const PauliSum& sum);

// Single-qubit basis-change cost across all groups: 1 per X-tagged qubit,
// 2 per Y-tagged qubit (H followed by S-dagger).
int measurement_rotation_count(std::span<const CommutingGroup> groups);

// Eigenvalues (descending) of C_ij = Re<QiQj>_sym - <Qi><Qj> over the
// non-identity terms, evaluated on a pure state given as amplitudes.
std::vector<double> pauli_covariance_spectrum(
    const PauliSum& sum, std::span<const std::complex<double>> amplitudes);

}  // namespace gqe
