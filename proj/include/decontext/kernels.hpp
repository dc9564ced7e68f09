#pragma once

#include <cstddef>
#include <string>

namespace decontext::kernels {

// Double-precision vector primitives behind the ranker math. Every entry
// point has a scalar reference implementation and, on x86-64, an AVX2
// variant selected once at runtime. Element-wise ops (hadamard, axpy,
// ger_acc) round identically in both lanes; reductions (dot, matvec,
// matvec_t) may differ by summation order within a few ulp.
//
// Matrices are row-major. Selection honors DECONTEXT_KERNELS=scalar|avx2
// when set; otherwise the best lane the CPU supports wins.
struct Backend {
  const char* name;

  // out[i] = a[i] * b[i]
  void (*hadamard)(const double* a, const double* b, double* out, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y = W x + b ; W is rows x cols, b may be null
  void (*matvec)(const double* w, const double* x, const double* b, double* y,
                 std::size_t rows, std::size_t cols);
  // out = W^T g ; W is rows x cols, g has rows entries, out has cols
  void (*matvec_t)(const double* w, const double* g, double* out,
                   std::size_t rows, std::size_t cols);
  // W[i][j] += alpha * u[i] * v[j]
  void (*ger_acc)(double alpha, const double* u, const double* v, double* w,
                  std::size_t rows, std::size_t cols);
};

const Backend& scalar();

/// AVX2 lane, or nullptr when this build/CPU cannot run it.
const Backend* avx2();

/// The lane in effect for this process (picked on first call).
const Backend& active();
std::string active_name();

}  // namespace decontext::kernels
