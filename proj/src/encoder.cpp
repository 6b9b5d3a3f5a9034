#include "gqe/encoder.hpp"

#include <cmath>
#include <stdexcept>

#include "gqe/graycode.hpp"

namespace gqe {

Encoding encoding_from_string(const std::string& name) {
  if (name == "gray") return Encoding::Gray;
  if (name == "onehot") return Encoding::OneHot;
  if (name == "binary") return Encoding::Binary;
  throw std::invalid_argument("unknown encoding: " + name);
}

std::string to_string(Encoding encoding) {
  switch (encoding) {
    case Encoding::Gray:
      return "gray";
    case Encoding::OneHot:
      return "onehot";
    case Encoding::Binary:
      return "binary";
  }
  return "?";
}

Eigen::MatrixXd TridiagonalHamiltonian::to_matrix() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diagonal[i];
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = offdiagonal[i];
    m(i + 1, i) = offdiagonal[i];
  }
  return m;
}

double TridiagonalHamiltonian::ground_energy() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_matrix());
  return solver.eigenvalues()(0);
}

TridiagonalHamiltonian deuteron_hamiltonian(int n_states, double hbar_omega,
                                            double v0) {
  if (n_states < 1) {
    throw std::invalid_argument("deuteron_hamiltonian: N must be >= 1");
  }
  TridiagonalHamiltonian h;
  h.hbar_omega = hbar_omega;
  h.v0 = v0;
  h.diagonal.resize(n_states);
  h.offdiagonal.resize(n_states - 1);
  for (int n = 0; n < n_states; ++n) {
    h.diagonal[n] = 0.5 * hbar_omega * (2 * n + 1.5) + (n == 0 ? v0 : 0.0);
  }
  for (int n = 0; n + 1 < n_states; ++n) {
    h.offdiagonal[n] = -0.5 * hbar_omega * std::sqrt((n + 1) * (n + 1.5));
  }
  return h;
}

PauliSum encode_one_hot(const TridiagonalHamiltonian& h) {
  const int n = h.size();
  PauliSum sum(n);
  for (int i = 0; i < n; ++i) {
    // d_i/2 (1 - Z_i)
    sum.add_identity(0.5 * h.diagonal[i]);
    sum.add(0, mask_t{1} << i, -0.5 * h.diagonal[i]);
  }
  for (int i = 0; i + 1 < n; ++i) {
    const mask_t pair = (mask_t{1} << i) | (mask_t{1} << (i + 1));
    // o_i/2 (X_i X_{i+1} + Y_i Y_{i+1})
    sum.add(pair, 0, 0.5 * h.offdiagonal[i]);
    sum.add(pair, pair, 0.5 * h.offdiagonal[i]);
  }
  sum.simplify();
  return sum;
}

namespace {

int qubits_for(int n_states) {
  int eta = 1;
  while ((1 << eta) < n_states) ++eta;
  return eta;
}

std::vector<ProjectorFactor> projector_pattern(mask_t codeword, int eta) {
  std::vector<ProjectorFactor> pattern(eta);
  for (int b = 0; b < eta; ++b) {
    pattern[b] = ((codeword >> b) & 1) ? ProjectorFactor::P1
                                       : ProjectorFactor::P0;
  }
  return pattern;
}

// Number operators |g_a><g_a| and Hermitian ladder pairs built from a
// codeword ordering: X on every bit that flips between g_a and g_{a+1},
// projectors pinning the agreeing bits.
PauliSum encode_ordered(const TridiagonalHamiltonian& h,
                        const std::vector<mask_t>& codewords, int eta) {
  const int n = h.size();
  PauliSum sum(eta);
  for (int a = 0; a < n; ++a) {
    const PauliSum number = projector_expand(projector_pattern(codewords[a], eta));
    sum.add_identity(h.diagonal[a] * number.identity());
    for (const auto& t : number.terms()) {
      sum.add(t.x, t.z, h.diagonal[a] * t.coefficient);
    }
  }
  for (int a = 0; a + 1 < n; ++a) {
    auto pattern = projector_pattern(codewords[a], eta);
    const mask_t flipped = codewords[a] ^ codewords[a + 1];
    for (int b = 0; b < eta; ++b) {
      if ((flipped >> b) & 1) pattern[b] = ProjectorFactor::X;
    }
    const PauliSum ladder = projector_expand(pattern);
    sum.add_identity(h.offdiagonal[a] * ladder.identity());
    for (const auto& t : ladder.terms()) {
      sum.add(t.x, t.z, h.offdiagonal[a] * t.coefficient);
    }
  }
  sum.simplify();
  return sum;
}

}  // namespace

PauliSum encode_gray(const TridiagonalHamiltonian& h) {
  if (h.size() < 2) {
    throw std::invalid_argument("encode_gray: N must be >= 2");
  }
  const int eta = qubits_for(h.size());
  return encode_ordered(h, brgc(eta).codewords, eta);
}

PauliSum encode_binary(const TridiagonalHamiltonian& h) {
  if (h.size() < 2) {
    throw std::invalid_argument("encode_binary: N must be >= 2");
  }
  const int eta = qubits_for(h.size());
  std::vector<mask_t> codewords(std::size_t{1} << eta);
  for (std::size_t i = 0; i < codewords.size(); ++i) codewords[i] = i;
  return encode_ordered(h, codewords, eta);
}

PauliSum encode(Encoding encoding, const TridiagonalHamiltonian& h) {
  switch (encoding) {
    case Encoding::Gray:
      return encode_gray(h);
    case Encoding::OneHot:
      return encode_one_hot(h);
    case Encoding::Binary:
      return encode_binary(h);
  }
  throw std::logic_error("encode: bad encoding");
}

int encoded_qubit_count(Encoding encoding, int n_states) {
  return encoding == Encoding::OneHot ? n_states : qubits_for(n_states);
}

}  // namespace gqe
