#include "hesscalc/kernels.hpp"

// AVX2 backend. Compiled with -mavx2 on x86-64; the dispatcher only hands out
// these pointers after a cpuid check. Accumulation order matches the scalar
// reference lane-for-lane, so results are bitwise identical (no FMA).

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace hesscalc::kernels {
namespace {

inline double hsum_pairs(__m256d acc) {
  // (s0+s1) + (s2+s3)
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d pair = _mm_hadd_pd(lo, hi);  // [s0+s1, s2+s3]
  return _mm_cvtsd_f64(_mm_add_pd(pair, _mm_unpackhi_pd(pair, pair)));
}

void axpy_avx2(double a, const double* x, double* y, std::size_t m) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < m; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t m) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < m; ++i) x[i] *= a;
}

void add_avx2(const double* a, const double* b, double* out, std::size_t m) {
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < m; ++i) out[i] = a[i] + b[i];
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t m) {
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < m; ++i) out[i] = a[i] - b[i];
}

double dot_avx2(const double* a, const double* b, std::size_t m) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t m4 = m - m % 4;
  for (std::size_t i = 0; i < m4; i += 4) {
    __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, prod);
  }
  double r = hsum_pairs(acc);
  for (std::size_t i = m4; i < m; ++i) r += a[i] * b[i];
  return r;
}

void conv_avx2(const double* a, const double* b, double* out,
               const ConvTable& t) {
  const std::size_t nout = t.out_size();
  for (std::size_t k = 0; k < nout; ++k) {
    const std::size_t lo = t.seg[k], hi = t.seg[k + 1];
    const std::size_t len = hi - lo;
    const std::size_t full = len - len % 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < full; i += 4) {
      const int* li = reinterpret_cast<const int*>(t.lhs.data() + lo + i);
      const int* ri = reinterpret_cast<const int*>(t.rhs.data() + lo + i);
      __m256d va = _mm256_i32gather_pd(a, _mm_loadu_si128((const __m128i*)li), 8);
      __m256d vb = _mm256_i32gather_pd(b, _mm_loadu_si128((const __m128i*)ri), 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    double r = hsum_pairs(acc);
    for (std::size_t i = lo + full; i < hi; ++i) r += a[t.lhs[i]] * b[t.rhs[i]];
    out[k] = r;
  }
}

double pairwise_avx2(double* x, std::size_t m) {
  if (m == 0) return 0.0;
  while (m > 1) {
    const std::size_t half = m / 2;
    std::size_t i = 0;
    for (; i + 4 <= half; i += 4) {
      __m256d lo = _mm256_loadu_pd(x + 2 * i);      // x0 x1 x2 x3
      __m256d hi = _mm256_loadu_pd(x + 2 * i + 4);  // x4 x5 x6 x7
      __m256d sums = _mm256_hadd_pd(lo, hi);        // x0+x1 x4+x5 x2+x3 x6+x7
      sums = _mm256_permute4x64_pd(sums, 0b11011000);
      _mm256_storeu_pd(x + i, sums);
    }
    for (; i < half; ++i) x[i] = x[2 * i] + x[2 * i + 1];
    if (m % 2) {
      x[half] = x[m - 1];
      m = half + 1;
    } else {
      m = half;
    }
  }
  return x[0];
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Ops k = {axpy_avx2, scale_avx2, add_avx2,      sub_avx2,
                        dot_avx2,  conv_avx2,  pairwise_avx2, "avx2"};
  return &k;
}

}  // namespace hesscalc::kernels

#else

namespace hesscalc::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace hesscalc::kernels

#endif
