#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edss/states.hpp"
#include "edss/tensor.hpp"

namespace edss {

/// Eigenvalues of the partial transpose above -kNegativeCutoff are treated as zero.
inline constexpr double kNegativeCutoff = 1e-10;

struct NegativityResult {
  double value = 0.0;
  double trace_norm = 0.0;
  std::size_t min_dim = 0;
  std::vector<double> negative_eigenvalues;
};

/// (||rho^{T_A}||_1 - 1)/(d - 1) with d the smaller of the two sides' full
/// Hilbert-space dimensions.
NegativityResult negativity(const DensityOperator& rho, const Bipartition& part);

/// Convenience: negativity value with side A given as subsystem indices.
double negativity_value(const DensityOperator& rho, std::span<const std::size_t> side_a);
double negativity_value(const DensityOperator& rho, std::initializer_list<std::size_t> side_a);

/// Smallest eigenvalue of rho^{T_A}, unclipped; negative iff rho is NPT across part.
double min_partial_transpose_eigenvalue(const DensityOperator& rho, const Bipartition& part);

/// Wootters concurrence of a two-qubit state.
/// Throws std::invalid_argument unless rho is two qubits.
double concurrence(const DensityOperator& rho);

/// sum_k p_k N(post_k) over branches with a post-state.
double average_negativity(std::span<const MeasurementBranch> branches, const Bipartition& part);

}  // namespace edss
