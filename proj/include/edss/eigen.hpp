#pragma once

#include <vector>

#include "edss/complex_matrix.hpp"

namespace edss {

enum class EigenMethod {
  /// Householder reduction to real tridiagonal form followed by implicit QL.
  householder_ql,
  /// Cyclic complex Jacobi rotations.
  jacobi,
};

/// Eigenvalues of a Hermitian matrix in ascending order.
/// Throws std::invalid_argument if the input is not square or its Hermiticity
/// defect exceeds tol::kValidity.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          EigenMethod method = EigenMethod::householder_ql);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Full eigendecomposition by cyclic Jacobi.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

/// Sum of absolute eigenvalues (the trace norm of a Hermitian matrix).
double trace_norm(const ComplexMatrix& h);

/// Principal square root of a Hermitian positive semidefinite matrix; tiny
/// negative eigenvalues from rounding are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

}  // namespace edss
