// AArch64 Advanced SIMD. One float64x2_t holds a single complex value.

#include <arm_neon.h>

#include "kernel_impl.hpp"

namespace edss::kernels::detail {
namespace {

const float64x2_t kNegRe = {-1.0, 1.0};

// alpha * v = re * (vr, vi) + im * (-vi, vr)
inline float64x2_t cmul(float64x2_t re, float64x2_t im, float64x2_t v) {
  const float64x2_t rotated = vmulq_f64(vextq_f64(v, v, 1), kNegRe);
  return vfmaq_f64(vmulq_f64(re, v), im, rotated);
}

}  // namespace

void axpy_neon(std::size_t n, double ar, double ai, const double* x, double* y) {
  const float64x2_t re = vdupq_n_f64(ar);
  const float64x2_t im = vdupq_n_f64(ai);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(x + 2 * i);
    vst1q_f64(y + 2 * i, vaddq_f64(vld1q_f64(y + 2 * i), cmul(re, im, xv)));
  }
}

// a accumulates (xr*yr, xi*yr), b accumulates (xr*yi, xi*yi).
static void dot_accumulate(std::size_t n, const double* x, const double* y, double sums[4]) {
  float64x2_t a = vdupq_n_f64(0.0);
  float64x2_t b = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(x + 2 * i);
    a = vfmaq_n_f64(a, xv, y[2 * i]);
    b = vfmaq_n_f64(b, xv, y[2 * i + 1]);
  }
  sums[0] = vgetq_lane_f64(a, 0);
  sums[1] = vgetq_lane_f64(a, 1);
  sums[2] = vgetq_lane_f64(b, 0);
  sums[3] = vgetq_lane_f64(b, 1);
}

void dotu_neon(std::size_t n, const double* x, const double* y, double* out) {
  double s[4];
  dot_accumulate(n, x, y, s);
  out[0] = s[0] - s[3];
  out[1] = s[1] + s[2];
}

void dotc_neon(std::size_t n, const double* x, const double* y, double* out) {
  double s[4];
  dot_accumulate(n, x, y, s);
  out[0] = s[0] + s[3];
  out[1] = s[2] - s[1];
}

void rotate_neon(std::size_t n, const double* k, double* x, double* y) {
  const float64x2_t ar = vdupq_n_f64(k[0]), ai = vdupq_n_f64(k[1]);
  const float64x2_t br = vdupq_n_f64(k[2]), bi = vdupq_n_f64(k[3]);
  const float64x2_t cr = vdupq_n_f64(k[4]), ci = vdupq_n_f64(k[5]);
  const float64x2_t dr = vdupq_n_f64(k[6]), di = vdupq_n_f64(k[7]);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(x + 2 * i);
    const float64x2_t yv = vld1q_f64(y + 2 * i);
    vst1q_f64(x + 2 * i, vaddq_f64(cmul(ar, ai, xv), cmul(br, bi, yv)));
    vst1q_f64(y + 2 * i, vaddq_f64(cmul(cr, ci, xv), cmul(dr, di, yv)));
  }
}

}  // namespace edss::kernels::detail
