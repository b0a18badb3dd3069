#include "kernel_impl.hpp"

namespace edss::kernels::detail {

void axpy_scalar(std::size_t n, double ar, double ai, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    y[2 * i] += ar * xr - ai * xi;
    y[2 * i + 1] += ar * xi + ai * xr;
  }
}

void dotu_scalar(std::size_t n, const double* x, const double* y, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void dotc_scalar(std::size_t n, const double* x, const double* y, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void rotate_scalar(std::size_t n, const double* k, double* x, double* y) {
  const double ar = k[0], ai = k[1], br = k[2], bi = k[3];
  const double cr = k[4], ci = k[5], dr = k[6], di = k[7];
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    x[2 * i] = ar * xr - ai * xi + br * yr - bi * yi;
    x[2 * i + 1] = ar * xi + ai * xr + br * yi + bi * yr;
    y[2 * i] = cr * xr - ci * xi + dr * yr - di * yi;
    y[2 * i + 1] = cr * xi + ci * xr + dr * yi + di * yr;
  }
}

}  // namespace edss::kernels::detail
