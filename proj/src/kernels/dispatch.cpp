#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "edss/kernels.hpp"
#include "kernel_impl.hpp"

namespace edss::kernels {

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, "scalar", detail::axpy_scalar, detail::dotu_scalar,
                                 detail::dotc_scalar, detail::rotate_scalar};
  return table;
}

#if defined(EDSS_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, "avx2", detail::axpy_avx2, detail::dotu_avx2,
                                 detail::dotc_avx2, detail::rotate_avx2};
  return table;
}
#endif

#if defined(EDSS_HAVE_NEON_KERNELS)
const KernelTable& neon_table() {
  static const KernelTable table{Isa::neon, "neon", detail::axpy_neon, detail::dotu_neon,
                                 detail::dotc_neon, detail::rotate_neon};
  return table;
}
#endif

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(EDSS_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(EDSS_HAVE_NEON_KERNELS)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* best_available() {
  if (const char* forced = std::getenv("EDSS_KERNELS")) {
    const std::string want(forced);
    for (Isa isa : available()) {
      if (name(isa) == want) return &table(isa);
    }
  }
  if (is_available(Isa::avx2)) return &table(Isa::avx2);
  if (is_available(Isa::neon)) return &table(Isa::neon);
  return &scalar_table();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{best_available()};
  return slot;
}

}  // namespace

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

bool is_available(Isa isa) { return cpu_supports(isa); }

const KernelTable& table(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(name(isa)));
  }
  switch (isa) {
#if defined(EDSS_HAVE_AVX2_KERNELS)
    case Isa::avx2:
      return avx2_table();
#endif
#if defined(EDSS_HAVE_NEON_KERNELS)
    case Isa::neon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void select(Isa isa) { active_slot().store(&table(isa), std::memory_order_release); }

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace edss::kernels
