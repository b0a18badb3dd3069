#pragma once

// Complex double inner-loop kernels with a scalar reference implementation and
// SIMD variants picked at runtime. Buffers are interleaved (re, im) pairs, the
// layout std::complex<double> guarantees.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "edss/complex_matrix.hpp"

namespace edss::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  const char* name;
  // y += alpha * x
  void (*axpy)(std::size_t n, double alpha_re, double alpha_im, const double* x, double* y);
  // out = sum x_i * y_i
  void (*dotu)(std::size_t n, const double* x, const double* y, double* out);
  // out = sum conj(x_i) * y_i
  void (*dotc)(std::size_t n, const double* x, const double* y, double* out);
  // (x, y) <- (a x + b y, c x + d y); coeffs = {a_re, a_im, b_re, b_im, c_re, c_im, d_re, d_im}
  void (*rotate)(std::size_t n, const double* coeffs, double* x, double* y);
};

const KernelTable& scalar_table();
#if defined(EDSS_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif
#if defined(EDSS_HAVE_NEON_KERNELS)
const KernelTable& neon_table();
#endif

/// Variants compiled into this build and supported by the running CPU.
std::vector<Isa> available();
bool is_available(Isa isa);
const KernelTable& table(Isa isa);

/// The table used by all library routines. Chosen once from the CPU features;
/// the EDSS_KERNELS environment variable (scalar|avx2|neon) overrides it.
const KernelTable& active();
void select(Isa isa);

std::string_view name(Isa isa);

inline void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active().axpy(x.size(), alpha.real(), alpha.imag(), reinterpret_cast<const double*>(x.data()),
                reinterpret_cast<double*>(y.data()));
}

inline Complex dotu(std::span<const Complex> x, std::span<const Complex> y) {
  double out[2];
  active().dotu(x.size(), reinterpret_cast<const double*>(x.data()),
                reinterpret_cast<const double*>(y.data()), out);
  return {out[0], out[1]};
}

inline Complex dotc(std::span<const Complex> x, std::span<const Complex> y) {
  double out[2];
  active().dotc(x.size(), reinterpret_cast<const double*>(x.data()),
                reinterpret_cast<const double*>(y.data()), out);
  return {out[0], out[1]};
}

inline void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
                   std::span<Complex> y) {
  const double coeffs[8] = {a.real(), a.imag(), b.real(), b.imag(),
                            c.real(), c.imag(), d.real(), d.imag()};
  active().rotate(x.size(), coeffs, reinterpret_cast<double*>(x.data()),
                  reinterpret_cast<double*>(y.data()));
}

}  // namespace edss::kernels
