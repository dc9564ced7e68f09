#include "decontext/kernels.hpp"

namespace decontext::kernels {
namespace {

void hadamard_scalar(const double* a, const double* b, double* out,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void matvec_scalar(const double* w, const double* x, const double* b,
                   double* y, std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = b ? b[i] : 0.0;
    const double* row = w + i * cols;
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_t_scalar(const double* w, const double* g, double* out,
                     std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) out[j] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double gi = g[i];
    const double* row = w + i * cols;
    for (std::size_t j = 0; j < cols; ++j) out[j] += gi * row[j];
  }
}

void ger_acc_scalar(double alpha, const double* u, const double* v, double* w,
                    std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = alpha * u[i];
    double* row = w + i * cols;
    for (std::size_t j = 0; j < cols; ++j) row[j] += t * v[j];
  }
}

}  // namespace

const Backend& scalar() {
  static const Backend backend{
      "scalar",      hadamard_scalar, axpy_scalar,
      dot_scalar,    matvec_scalar,   matvec_t_scalar,
      ger_acc_scalar,
  };
  return backend;
}

}  // namespace decontext::kernels
