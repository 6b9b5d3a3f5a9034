#include "gqe/kernels.hpp"

#include <bit>
#include <utility>

namespace gqe::kernels {

namespace {

void scalar_apply_matrix2(cplx* amps, std::size_t n, int target,
                          const cplx* m) {
  const std::size_t step = std::size_t{1} << target;
  const double m0r = m[0].real(), m0i = m[0].imag();
  const double m1r = m[1].real(), m1i = m[1].imag();
  const double m2r = m[2].real(), m2i = m[2].imag();
  const double m3r = m[3].real(), m3i = m[3].imag();
  for (std::size_t base = 0; base < n; base += 2 * step) {
    for (std::size_t off = 0; off < step; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + step;
      const double a0r = amps[i0].real(), a0i = amps[i0].imag();
      const double a1r = amps[i1].real(), a1i = amps[i1].imag();
      amps[i0] = {(a0r * m0r - a0i * m0i) + (a1r * m1r - a1i * m1i),
                  (a0i * m0r + a0r * m0i) + (a1i * m1r + a1r * m1i)};
      amps[i1] = {(a0r * m2r - a0i * m2i) + (a1r * m3r - a1i * m3i),
                  (a0i * m2r + a0r * m2i) + (a1i * m3r + a1r * m3i)};
    }
  }
}

void scalar_probabilities(const cplx* amps, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = amps[i].real();
    const double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

double scalar_zmask_expectation(const double* probs, std::size_t n,
                                std::uint64_t zmask) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += (std::popcount(i & zmask) & 1) ? -probs[i] : probs[i];
  }
  return acc;
}

const Ops kScalarOps{scalar_apply_matrix2, scalar_probabilities,
                     scalar_zmask_expectation, "scalar"};

const Ops& select_ops() {
#if defined(GQE_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return avx2_ops();
#endif
  return kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
  static const Ops& selected = select_ops();
  return selected;
}

bool using_avx2() { return &ops() != &kScalarOps; }

void apply_cnot(cplx* amps, std::size_t n, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps[i], amps[i | tbit]);
    }
  }
}

void apply_swap(cplx* amps, std::size_t n, int a, int b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & abit) && !(i & bbit)) {
      std::swap(amps[i], amps[(i ^ abit) | bbit]);
    }
  }
}

void apply_x(cplx* amps, std::size_t n, int target) {
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

double pauli_expectation(const cplx* amps, std::size_t n, std::uint64_t x,
                         std::uint64_t z) {
  // i^{|x&z|} contributes a fixed global factor; fold it in at the end.
  const int ypow = std::popcount(x & z) & 3;
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[i ^ x]) * amps[i] * sign;
  }
  static const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return (kPhase[ypow] * acc).real();
}

}  // namespace gqe::kernels
