#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "edss/complex_matrix.hpp"

namespace edss {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(std::span<const std::size_t> dims);

struct ValidityReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

/// State of a multi-qudit register: a square matrix plus the subsystem
/// dimensions whose product is its side. The constructor checks shape only;
/// physical validity (Hermitian, unit trace, PSD) is checked by validate() or
/// enforced by checked().
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, Dims dims);

  /// Throws std::invalid_argument unless validate(tol).valid.
  static DensityOperator checked(ComplexMatrix matrix, Dims dims, double tol = tol::kValidity);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t num_subsystems() const { return dims_.size(); }
  std::size_t dim() const { return matrix_.rows(); }

  ValidityReport validate(double tol = tol::kValidity) const;

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

/// Ordered split of subsystem indices into the transposed side A and the rest B.
class Bipartition {
 public:
  /// Throws std::invalid_argument unless the sides are disjoint, non-empty and
  /// cover {0..n-1}.
  Bipartition(std::vector<std::size_t> side_a, std::vector<std::size_t> side_b, std::size_t n);

  /// side_a as given, side_b the complement in {0..n-1}.
  static Bipartition of(std::span<const std::size_t> side_a, std::size_t n);
  static Bipartition of(std::initializer_list<std::size_t> side_a, std::size_t n);

  const std::vector<std::size_t>& side_a() const { return side_a_; }
  const std::vector<std::size_t>& side_b() const { return side_b_; }
  std::size_t num_subsystems() const { return side_a_.size() + side_b_.size(); }
  bool in_a(std::size_t index) const;

  /// The same split with the sides swapped.
  Bipartition swapped() const;

 private:
  std::vector<std::size_t> side_a_;
  std::vector<std::size_t> side_b_;
};

/// Reduced operator on `keep` (any order; output keeps the original relative order).
/// Throws std::out_of_range for bad indices, std::invalid_argument for an empty set.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::size_t> keep);

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                const Bipartition& part);
ComplexMatrix partial_transpose(const DensityOperator& rho, const Bipartition& part);

/// sum_k K_k rho K_k^dagger where each K_k acts on the listed subsystems (in the
/// listed order) and identity elsewhere.
DensityOperator apply_kraus(const DensityOperator& rho, std::span<const ComplexMatrix> ops,
                            std::span<const std::size_t> targets);

/// U rho U^T for the basis permutation U|x> = |perm(x)>.
DensityOperator permute_basis(const DensityOperator& rho, std::span<const std::size_t> perm);

/// Digit decomposition helpers for row-major multi-indices.
std::vector<std::size_t> strides_of(std::span<const std::size_t> dims);

}  // namespace edss
