#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace edss {

using Complex = std::complex<double>;

namespace tol {
/// Absolute tolerance for validity checks (Hermiticity, trace, positivity).
inline constexpr double kValidity = 1e-9;
/// Absolute tolerance for algebraic identities.
inline constexpr double kAlgebraic = 1e-12;
}  // namespace tol

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |ket><bra|
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  /// max |A_ij - conj(A_ji)|; infinite for non-square matrices.
  double hermiticity_defect() const;
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  /// this += scale * |ket><ket|, accumulated row by row through the active kernels.
  void add_projector(std::span<const Complex> ket, double scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// Elementwise comparison with an absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = tol::kAlgebraic);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace edss
