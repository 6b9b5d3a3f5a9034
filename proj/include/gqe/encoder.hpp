#pragma once

#include <string>
#include <vector>

#include "gqe/pauli.hpp"

namespace gqe {

enum class Encoding { Gray, OneHot, Binary };
Encoding encoding_from_string(const std::string& name);
std::string to_string(Encoding encoding);

// Real symmetric tridiagonal Hamiltonian in MeV. offdiagonal[n] couples
// states n and n+1. hbar_omega/v0 carry the model constants when built
// from the deuteron pionless-EFT matrix elements.
struct TridiagonalHamiltonian {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
  double hbar_omega = 0.0;
  double v0 = 0.0;

  int size() const { return static_cast<int>(diagonal.size()); }
  Eigen::MatrixXd to_matrix() const;
  double ground_energy() const;  // smallest eigenvalue
};

constexpr double kDeuteronHbarOmega = 7.0;
constexpr double kDeuteronV0 = -5.68658111;

// d_n = (hw/2)(2n + 3/2) + V0 [n=0],  o_n = -(hw/2) sqrt((n+1)(n+3/2)).
TridiagonalHamiltonian deuteron_hamiltonian(int n_states,
                                            double hbar_omega = kDeuteronHbarOmega,
                                            double v0 = kDeuteronV0);

// N qubits; state n maps to the basis state with qubit n set.
PauliSum encode_one_hot(const TridiagonalHamiltonian& h);

// ceil(log2 N) qubits, basis states ordered along the binary-reflected
// Gray code (truncated when N is not a power of two).
PauliSum encode_gray(const TridiagonalHamiltonian& h);

// Same construction with codewords in increasing binary value. Ladder
// terms between states differing in several bits become multi-X products;
// see the README for the consequences for spectra.
PauliSum encode_binary(const TridiagonalHamiltonian& h);

PauliSum encode(Encoding encoding, const TridiagonalHamiltonian& h);

// Qubit count used by an encoding for an N-state problem.
int encoded_qubit_count(Encoding encoding, int n_states);

}  // namespace gqe
