#include "edss/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "edss/eigen.hpp"

namespace edss {

NegativityResult negativity(const DensityOperator& rho, const Bipartition& part) {
  if (part.num_subsystems() != rho.num_subsystems()) {
    throw std::invalid_argument("negativity: partition does not match the register");
  }
  const auto& dims = rho.dims();
  std::size_t dim_a = 1;
  for (std::size_t i : part.side_a()) dim_a *= dims[i];
  const std::size_t dim_b = rho.dim() / dim_a;

  NegativityResult r;
  r.min_dim = std::min(dim_a, dim_b);
  double negative_sum = 0.0;
  for (double v : hermitian_eigenvalues(partial_transpose(rho, part))) {
    if (v <= -kNegativeCutoff) {
      r.negative_eigenvalues.push_back(v);
      negative_sum -= v;
      r.trace_norm -= v;
    } else if (v > 0.0) {
      r.trace_norm += v;
    }
  }
  r.value = 2.0 * negative_sum / static_cast<double>(r.min_dim - 1);
  return r;
}

double negativity_value(const DensityOperator& rho, std::span<const std::size_t> side_a) {
  return negativity(rho, Bipartition::of(side_a, rho.num_subsystems())).value;
}

double negativity_value(const DensityOperator& rho, std::initializer_list<std::size_t> side_a) {
  return negativity(rho, Bipartition::of(side_a, rho.num_subsystems())).value;
}

double min_partial_transpose_eigenvalue(const DensityOperator& rho, const Bipartition& part) {
  return hermitian_eigenvalues(partial_transpose(rho, part)).front();
}

double concurrence(const DensityOperator& rho) {
  if (rho.dims() != Dims{2, 2}) throw std::invalid_argument("concurrence: expects two qubits");
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix tilde = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  ComplexMatrix r = root * tilde * root;
  // Remove rounding asymmetry before the Hermitian solver sees it.
  r = 0.5 * (r + r.adjoint());
  std::vector<double> lambda;
  for (double v : hermitian_eigenvalues(r)) lambda.push_back(std::sqrt(std::max(v, 0.0)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double average_negativity(std::span<const MeasurementBranch> branches, const Bipartition& part) {
  double sum = 0.0;
  for (const auto& b : branches) {
    if (!b.post_state) continue;
    sum += b.probability * negativity(*b.post_state, part).value;
  }
  return sum;
}

}  // namespace edss
