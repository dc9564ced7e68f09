// AVX2 lane. Element-wise kernels mirror the scalar rounding exactly (plain
// mul/add, no FMA); reductions keep four partial accumulators and fold them
// at the end, so they can differ from the scalar lane by summation order.

#include "decontext/kernels.hpp"

#if defined(DECONTEXT_HAVE_AVX2)

#include <immintrin.h>

namespace decontext::kernels {
namespace {

void hadamard_avx2(const double* a, const double* b, double* out,
                   std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double fold4(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d sum2 = _mm_add_pd(lo, hi);
  const __m128d sum1 = _mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2));
  return _mm_cvtsd_f64(sum1);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double out = fold4(acc);
  for (; i < n; ++i) out += a[i] * b[i];
  return out;
}

void matvec_avx2(const double* w, const double* x, const double* b, double* y,
                 std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = dot_avx2(w + i * cols, x, cols);
    if (b) acc += b[i];
    y[i] = acc;
  }
}

void matvec_t_avx2(const double* w, const double* g, double* out,
                   std::size_t rows, std::size_t cols) {
  std::size_t j = 0;
  for (; j + 4 <= cols; j += 4) _mm256_storeu_pd(out + j, _mm256_setzero_pd());
  for (; j < cols; ++j) out[j] = 0.0;

  for (std::size_t i = 0; i < rows; ++i) {
    const __m256d vg = _mm256_set1_pd(g[i]);
    const double* row = w + i * cols;
    std::size_t k = 0;
    for (; k + 4 <= cols; k += 4) {
      const __m256d vo = _mm256_loadu_pd(out + k);
      const __m256d vr = _mm256_loadu_pd(row + k);
      _mm256_storeu_pd(out + k, _mm256_add_pd(vo, _mm256_mul_pd(vg, vr)));
    }
    for (; k < cols; ++k) out[k] += g[i] * row[k];
  }
}

void ger_acc_avx2(double alpha, const double* u, const double* v, double* w,
                  std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = alpha * u[i];
    const __m256d vt = _mm256_set1_pd(t);
    double* row = w + i * cols;
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      const __m256d vr = _mm256_loadu_pd(row + j);
      const __m256d vv = _mm256_loadu_pd(v + j);
      _mm256_storeu_pd(row + j, _mm256_add_pd(vr, _mm256_mul_pd(vt, vv)));
    }
    for (; j < cols; ++j) row[j] += t * v[j];
  }
}

}  // namespace

const Backend* avx2_impl() {
  static const Backend backend{
      "avx2",      hadamard_avx2, axpy_avx2,
      dot_avx2,    matvec_avx2,   matvec_t_avx2,
      ger_acc_avx2,
  };
  return &backend;
}

}  // namespace decontext::kernels

#endif  // DECONTEXT_HAVE_AVX2
