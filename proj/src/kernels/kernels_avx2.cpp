// Built with -mavx2 -mfma. One __m256d holds two interleaved complex values.

#include <immintrin.h>

#include "kernel_impl.hpp"

namespace edss::kernels::detail {
namespace {

// alpha * v for alpha broadcast as (re, re, re, re) and (im, im, im, im).
inline __m256d cmul(__m256d re, __m256d im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(re, v, _mm256_mul_pd(im, swapped));
}

inline double hsum_even(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return lanes[0] + lanes[2];
}

inline double hsum_odd(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return lanes[1] + lanes[3];
}

}  // namespace

void axpy_avx2(std::size_t n, double ar, double ai, const double* x, double* y) {
  const __m256d re = _mm256_set1_pd(ar);
  const __m256d im = _mm256_set1_pd(ai);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, cmul(re, im, xv)));
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    y[2 * i] += ar * xr - ai * xi;
    y[2 * i + 1] += ar * xi + ai * xr;
  }
}

// a accumulates (xr*yr, xi*yr), b accumulates (xr*yi, xi*yi) per complex lane.
static void dot_accumulate(std::size_t n, const double* x, const double* y, double sums[4]) {
  __m256d a = _mm256_setzero_pd();
  __m256d b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    a = _mm256_fmadd_pd(xv, _mm256_movedup_pd(yv), a);
    b = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b1111), b);
  }
  double xryr = hsum_even(a), xiyr = hsum_odd(a);
  double xryi = hsum_even(b), xiyi = hsum_odd(b);
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    xryr += xr * yr;
    xiyr += xi * yr;
    xryi += xr * yi;
    xiyi += xi * yi;
  }
  sums[0] = xryr;
  sums[1] = xiyr;
  sums[2] = xryi;
  sums[3] = xiyi;
}

void dotu_avx2(std::size_t n, const double* x, const double* y, double* out) {
  double s[4];
  dot_accumulate(n, x, y, s);
  out[0] = s[0] - s[3];
  out[1] = s[1] + s[2];
}

void dotc_avx2(std::size_t n, const double* x, const double* y, double* out) {
  double s[4];
  dot_accumulate(n, x, y, s);
  out[0] = s[0] + s[3];
  out[1] = s[2] - s[1];
}

void rotate_avx2(std::size_t n, const double* k, double* x, double* y) {
  const __m256d ar = _mm256_set1_pd(k[0]), ai = _mm256_set1_pd(k[1]);
  const __m256d br = _mm256_set1_pd(k[2]), bi = _mm256_set1_pd(k[3]);
  const __m256d cr = _mm256_set1_pd(k[4]), ci = _mm256_set1_pd(k[5]);
  const __m256d dr = _mm256_set1_pd(k[6]), di = _mm256_set1_pd(k[7]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(x + 2 * i, _mm256_add_pd(cmul(ar, ai, xv), cmul(br, bi, yv)));
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(cmul(cr, ci, xv), cmul(dr, di, yv)));
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    x[2 * i] = k[0] * xr - k[1] * xi + k[2] * yr - k[3] * yi;
    x[2 * i + 1] = k[0] * xi + k[1] * xr + k[2] * yi + k[3] * yr;
    y[2 * i] = k[4] * xr - k[5] * xi + k[6] * yr - k[7] * yi;
    y[2 * i + 1] = k[4] * xi + k[5] * xr + k[6] * yi + k[7] * yr;
  }
}

}  // namespace edss::kernels::detail
