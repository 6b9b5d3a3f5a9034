#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace gqe::kernels {

using cplx = std::complex<double>;

// Hot statevector loops, dispatched at runtime between a scalar reference
// implementation and an AVX2 variant. Both paths perform the same sequence
// of rounded operations per element (no FMA contraction), so amplitudes and
// probabilities are bit-identical whichever variant runs. Reductions
// (expectation sums) may differ in the last ulp between variants because the
// accumulation order differs; sampled counts only ever consume the
// element-wise outputs.
struct Ops {
  // amps has n = 2^q entries; applies the 2x2 matrix m (row-major) to the
  // amplitude pairs split by `target`.
  void (*apply_matrix2)(cplx* amps, std::size_t n, int target,
                        const cplx* m);
  // out[i] = |amps[i]|^2
  void (*probabilities)(const cplx* amps, double* out, std::size_t n);
  // sum_i probs[i] * (-1)^popcount(i & zmask)
  double (*zmask_expectation)(const double* probs, std::size_t n,
                              std::uint64_t zmask);
  const char* name;
};

const Ops& ops();         // best variant for this machine
const Ops& scalar_ops();  // reference, used by the equivalence tests
bool using_avx2();

// Permutation-style gates stay scalar: they move data without arithmetic.
void apply_cnot(cplx* amps, std::size_t n, int control, int target);
void apply_swap(cplx* amps, std::size_t n, int a, int b);
void apply_x(cplx* amps, std::size_t n, int target);

// <psi| O |psi> for the Hermitian Pauli with the given masks, where
// O|i> = i^{|x&z|} (-1)^{popcount(z&i)} |i^x>.  Returns the real part
// (exact expectations of Hermitian operators are real).
double pauli_expectation(const cplx* amps, std::size_t n, std::uint64_t x,
                         std::uint64_t z);

#if defined(GQE_HAVE_AVX2_TU)
const Ops& avx2_ops();
#endif

}  // namespace gqe::kernels
