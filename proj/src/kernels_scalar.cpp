#include "hesscalc/kernels.hpp"

// Reference kernels. The strided 4-lane accumulation mirrors the vector
// backends exactly; see the contract note in kernels.hpp.

namespace hesscalc::kernels {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) x[i] *= a;
}

void add_scalar(const double* a, const double* b, double* out, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i] - b[i];
}

double dot_scalar(const double* a, const double* b, std::size_t m) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t m4 = m - m % 4;
  for (std::size_t i = 0; i < m4; i += 4) {
    lane[0] += a[i] * b[i];
    lane[1] += a[i + 1] * b[i + 1];
    lane[2] += a[i + 2] * b[i + 2];
    lane[3] += a[i + 3] * b[i + 3];
  }
  double r = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = m4; i < m; ++i) r += a[i] * b[i];
  return r;
}

void conv_scalar(const double* a, const double* b, double* out,
                 const ConvTable& t) {
  const std::size_t nout = t.out_size();
  for (std::size_t k = 0; k < nout; ++k) {
    const std::size_t lo = t.seg[k], hi = t.seg[k + 1];
    const std::size_t len = hi - lo;
    const std::size_t full = len - len % 4;
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < full; i += 4) {
      const std::size_t j = lo + i;
      lane[0] += a[t.lhs[j]] * b[t.rhs[j]];
      lane[1] += a[t.lhs[j + 1]] * b[t.rhs[j + 1]];
      lane[2] += a[t.lhs[j + 2]] * b[t.rhs[j + 2]];
      lane[3] += a[t.lhs[j + 3]] * b[t.rhs[j + 3]];
    }
    double r = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (std::size_t i = lo + full; i < hi; ++i) r += a[t.lhs[i]] * b[t.rhs[i]];
    out[k] = r;
  }
}

double pairwise_scalar(double* x, std::size_t m) {
  if (m == 0) return 0.0;
  while (m > 1) {
    const std::size_t half = m / 2;
    for (std::size_t i = 0; i < half; ++i) x[i] = x[2 * i] + x[2 * i + 1];
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

const Ops& scalar_ops() {
  static const Ops k = {axpy_scalar, scale_scalar, add_scalar,   sub_scalar,
                        dot_scalar,  conv_scalar,  pairwise_scalar, "scalar"};
  return k;
}

}  // namespace hesscalc::kernels
