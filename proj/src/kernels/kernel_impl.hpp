#pragma once

// Raw kernel entry points. Kept free of standard-library templates so the
// ISA-specific translation units do not emit inline code that the linker could
// share with baseline callers.

#include <cstddef>

namespace edss::kernels::detail {

void axpy_scalar(std::size_t n, double ar, double ai, const double* x, double* y);
void dotu_scalar(std::size_t n, const double* x, const double* y, double* out);
void dotc_scalar(std::size_t n, const double* x, const double* y, double* out);
void rotate_scalar(std::size_t n, const double* k, double* x, double* y);

#if defined(EDSS_HAVE_AVX2_KERNELS)
void axpy_avx2(std::size_t n, double ar, double ai, const double* x, double* y);
void dotu_avx2(std::size_t n, const double* x, const double* y, double* out);
void dotc_avx2(std::size_t n, const double* x, const double* y, double* out);
void rotate_avx2(std::size_t n, const double* k, double* x, double* y);
#endif

#if defined(EDSS_HAVE_NEON_KERNELS)
void axpy_neon(std::size_t n, double ar, double ai, const double* x, double* y);
void dotu_neon(std::size_t n, const double* x, const double* y, double* out);
void dotc_neon(std::size_t n, const double* x, const double* y, double* out);
void rotate_neon(std::size_t n, const double* k, double* x, double* y);
#endif

}  // namespace edss::kernels::detail
