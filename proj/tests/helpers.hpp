#pragma once

#include <cstdint>
#include <random>

#include "edss/complex_matrix.hpp"
#include "edss/tensor.hpp"

namespace testing {

inline edss::ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  edss::ComplexMatrix m(r, c);
  for (auto& z : m.data()) z = {n(rng), n(rng)};
  return m;
}

inline edss::ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const auto a = random_matrix(n, n, seed);
  return 0.5 * (a + a.adjoint());
}

/// G G^dagger / tr, a full-rank random state.
inline edss::DensityOperator random_state(const edss::Dims& dims, std::uint64_t seed) {
  const std::size_t n = edss::total_dim(dims);
  const auto g = random_matrix(n, n, seed);
  auto m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  return edss::DensityOperator(m, dims);
}

}  // namespace testing
