#include <immintrin.h>

#include <bit>

#include "gqe/kernels.hpp"

// AVX2 variants of the dispatched kernels. Each arithmetic step mirrors the
// scalar reference exactly (multiply, then add, no FMA), so element-wise
// outputs are bit-identical to the scalar path.

namespace gqe::kernels {

namespace {

// (mr + i*mi) * v for a register holding two complex doubles.
inline __m256d cmul_scalar(__m256d v, __m256d mr, __m256d mi,
                           __m256d neg_even) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  const __m256d cross = _mm256_mul_pd(_mm256_mul_pd(swapped, mi), neg_even);
  return _mm256_add_pd(_mm256_mul_pd(v, mr), cross);
}

void avx2_apply_matrix2(cplx* amps, std::size_t n, int target,
                        const cplx* m) {
  double* p = reinterpret_cast<double*>(amps);
  const __m256d neg_even = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  __m256d mr[4], mi[4];
  for (int k = 0; k < 4; ++k) {
    mr[k] = _mm256_set1_pd(m[k].real());
    mi[k] = _mm256_set1_pd(m[k].imag());
  }

  const std::size_t step = std::size_t{1} << target;
  if (n < 4) {  // single pair, scalar arithmetic in the same order
    const cplx a0 = amps[0], a1 = amps[1];
    double r0 = m[0].real() * a0.real() - m[0].imag() * a0.imag();
    double i0 = m[0].real() * a0.imag() + m[0].imag() * a0.real();
    double r1 = m[1].real() * a1.real() - m[1].imag() * a1.imag();
    double i1 = m[1].real() * a1.imag() + m[1].imag() * a1.real();
    amps[0] = {r0 + r1, i0 + i1};
    r0 = m[2].real() * a0.real() - m[2].imag() * a0.imag();
    i0 = m[2].real() * a0.imag() + m[2].imag() * a0.real();
    r1 = m[3].real() * a1.real() - m[3].imag() * a1.imag();
    i1 = m[3].real() * a1.imag() + m[3].imag() * a1.real();
    amps[1] = {r0 + r1, i0 + i1};
    return;
  }

  if (target == 0) {
    // Pairs are adjacent; deinterleave two pairs per iteration.
    for (std::size_t i = 0; i < n; i += 4) {
      const __m256d u = _mm256_loadu_pd(p + 2 * i);      // pair 0
      const __m256d w = _mm256_loadu_pd(p + 2 * i + 4);  // pair 1
      const __m256d lo = _mm256_permute2f128_pd(u, w, 0x20);  // amps[i,i+2]
      const __m256d hi = _mm256_permute2f128_pd(u, w, 0x31);  // amps[i+1,i+3]
      const __m256d n0 = _mm256_add_pd(cmul_scalar(lo, mr[0], mi[0], neg_even),
                                       cmul_scalar(hi, mr[1], mi[1], neg_even));
      const __m256d n1 = _mm256_add_pd(cmul_scalar(lo, mr[2], mi[2], neg_even),
                                       cmul_scalar(hi, mr[3], mi[3], neg_even));
      _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(n0, n1, 0x20));
      _mm256_storeu_pd(p + 2 * i + 4, _mm256_permute2f128_pd(n0, n1, 0x31));
    }
    return;
  }

  for (std::size_t base = 0; base < n; base += 2 * step) {
    for (std::size_t off = 0; off < step; off += 2) {
      double* q0 = p + 2 * (base + off);
      double* q1 = q0 + 2 * step;
      const __m256d a0 = _mm256_loadu_pd(q0);
      const __m256d a1 = _mm256_loadu_pd(q1);
      const __m256d n0 = _mm256_add_pd(cmul_scalar(a0, mr[0], mi[0], neg_even),
                                       cmul_scalar(a1, mr[1], mi[1], neg_even));
      const __m256d n1 = _mm256_add_pd(cmul_scalar(a0, mr[2], mi[2], neg_even),
                                       cmul_scalar(a1, mr[3], mi[3], neg_even));
      _mm256_storeu_pd(q0, n0);
      _mm256_storeu_pd(q1, n1);
    }
  }
}

void avx2_probabilities(const cplx* amps, double* out, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(amps);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_loadu_pd(p + 2 * i);
    const __m256d w = _mm256_loadu_pd(p + 2 * i + 4);
    const __m256d s = _mm256_hadd_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(w, w));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(s, 0xD8));
  }
  for (; i < n; ++i) {
    const double re = amps[i].real();
    const double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

double avx2_zmask_expectation(const double* probs, std::size_t n,
                              std::uint64_t zmask) {
  if (n < 4) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += (std::popcount(i & zmask) & 1) ? -probs[i] : probs[i];
    }
    return acc;
  }
  // Signs of the two low index bits repeat every 4 entries.
  static const double kPattern[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  const __m256d low = _mm256_loadu_pd(kPattern[zmask & 3]);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; i += 4) {
    const double hi = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
    const __m256d sign = _mm256_mul_pd(low, _mm256_set1_pd(hi));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(probs + i), sign));
  }
  const __m128d lo2 = _mm256_castpd256_pd128(acc);
  const __m128d hi2 = _mm256_extractf128_pd(acc, 1);
  const __m128d sum2 = _mm_add_pd(lo2, hi2);
  return _mm_cvtsd_f64(sum2) + _mm_cvtsd_f64(_mm_unpackhi_pd(sum2, sum2));
}

const Ops kAvx2Ops{avx2_apply_matrix2, avx2_probabilities,
                   avx2_zmask_expectation, "avx2"};

}  // namespace

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace gqe::kernels
