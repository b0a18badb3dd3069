#include "edss/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "edss/eigen.hpp"
#include "edss/kernels.hpp"

namespace edss {

std::size_t total_dim(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("DensityOperator: no subsystems");
  for (std::size_t d : dims_) {
    if (d < 2) throw std::invalid_argument("DensityOperator: subsystem dimension below 2");
  }
  if (!matrix_.is_square() || matrix_.rows() != total_dim(dims_)) {
    throw std::invalid_argument("DensityOperator: matrix side " + std::to_string(matrix_.rows()) +
                                " does not match the product of dims");
  }
}

DensityOperator DensityOperator::checked(ComplexMatrix matrix, Dims dims, double tol) {
  DensityOperator rho(std::move(matrix), std::move(dims));
  const ValidityReport report = rho.validate(tol);
  if (!report.valid) {
    throw std::invalid_argument(
        "DensityOperator: invalid state (hermiticity " + std::to_string(report.hermiticity_defect) +
        ", trace " + std::to_string(report.trace_defect) + ", min eigenvalue " +
        std::to_string(report.min_eigenvalue) + ")");
  }
  return rho;
}

ValidityReport DensityOperator::validate(double tol) const {
  ValidityReport r;
  r.hermiticity_defect = matrix_.hermiticity_defect();
  r.trace_defect = std::abs(matrix_.trace() - 1.0);
  if (r.hermiticity_defect > tol) {
    r.min_eigenvalue = -std::numeric_limits<double>::infinity();
    r.valid = false;
    return r;
  }
  r.min_eigenvalue = hermitian_eigenvalues(matrix_).front();
  r.valid = r.trace_defect <= tol && r.min_eigenvalue >= -tol;
  return r;
}

Bipartition::Bipartition(std::vector<std::size_t> side_a, std::vector<std::size_t> side_b,
                         std::size_t n)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
  if (side_a_.empty() || side_b_.empty()) {
    throw std::invalid_argument("Bipartition: both sides must be non-empty");
  }
  std::vector<int> seen(n, 0);
  for (const auto* side : {&side_a_, &side_b_}) {
    for (std::size_t i : *side) {
      if (i >= n) throw std::invalid_argument("Bipartition: index out of range");
      if (seen[i]++) throw std::invalid_argument("Bipartition: sides overlap");
    }
  }
  if (side_a_.size() + side_b_.size() != n) {
    throw std::invalid_argument("Bipartition: sides do not cover every subsystem");
  }
  std::sort(side_a_.begin(), side_a_.end());
  std::sort(side_b_.begin(), side_b_.end());
}

Bipartition Bipartition::of(std::span<const std::size_t> side_a, std::size_t n) {
  std::vector<std::size_t> a(side_a.begin(), side_a.end());
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(a.begin(), a.end(), i) == a.end()) b.push_back(i);
  }
  return Bipartition(std::move(a), std::move(b), n);
}

Bipartition Bipartition::of(std::initializer_list<std::size_t> side_a, std::size_t n) {
  return of(std::span<const std::size_t>(side_a.begin(), side_a.size()), n);
}

bool Bipartition::in_a(std::size_t index) const {
  return std::binary_search(side_a_.begin(), side_a_.end(), index);
}

Bipartition Bipartition::swapped() const {
  return Bipartition(side_b_, side_a_, num_subsystems());
}

namespace {

// offsets[x] = sum over the selected subsystems of digit(x) * stride, enumerated
// over all multi-indices of those subsystems in their listed order.
std::vector<std::size_t> subsystem_offsets(std::span<const std::size_t> dims,
                                           std::span<const std::size_t> strides,
                                           std::span<const std::size_t> selected) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t s : selected) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[s]);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < dims[s]; ++digit) next.push_back(base + digit * strides[s]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep) {
  const std::size_t n = rho.num_subsystems();
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing to keep");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  for (std::size_t k : kept) {
    if (k >= n) throw std::out_of_range("partial_trace: subsystem index out of range");
  }
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate subsystem index");
  }
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }

  const auto strides = strides_of(rho.dims());
  const auto keep_off = subsystem_offsets(rho.dims(), strides, kept);
  const auto trace_off = subsystem_offsets(rho.dims(), strides, traced);
  const ComplexMatrix& m = rho.matrix();

  ComplexMatrix out(keep_off.size(), keep_off.size());
  for (std::size_t i = 0; i < keep_off.size(); ++i) {
    for (std::size_t j = 0; j < keep_off.size(); ++j) {
      Complex sum = 0.0;
      for (std::size_t t : trace_off) sum += m(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = sum;
    }
  }
  Dims dims;
  for (std::size_t k : kept) dims.push_back(rho.dims()[k]);
  return DensityOperator(std::move(out), std::move(dims));
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                const Bipartition& part) {
  if (part.num_subsystems() != dims.size()) {
    throw std::invalid_argument("partial_transpose: partition does not match subsystem count");
  }
  if (!m.is_square() || m.rows() != total_dim(dims)) {
    throw std::invalid_argument("partial_transpose: matrix side does not match dims");
  }
  const std::size_t n = m.rows();
  const auto strides = strides_of(dims);
  // a_part[x]: the side-A component of multi-index x, as a flat offset.
  std::vector<std::size_t> a_part(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s : part.side_a()) a_part[x] += (x / strides[s]) % dims[s] * strides[s];
  }
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r - a_part[r] + a_part[c], c - a_part[c] + a_part[r]) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityOperator& rho, const Bipartition& part) {
  return partial_transpose(rho.matrix(), rho.dims(), part);
}

DensityOperator apply_kraus(const DensityOperator& rho, std::span<const ComplexMatrix> ops,
                            std::span<const std::size_t> targets) {
  const auto& dims = rho.dims();
  std::vector<std::size_t> rest;
  for (std::size_t t : targets) {
    if (t >= dims.size()) throw std::out_of_range("apply_kraus: target index out of range");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (std::find(targets.begin(), targets.end(), i) == targets.end()) rest.push_back(i);
  }
  const auto strides = strides_of(dims);
  const auto local = subsystem_offsets(dims, strides, targets);
  const auto others = subsystem_offsets(dims, strides, rest);
  const std::size_t d = local.size();
  for (const auto& k : ops) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("apply_kraus: operator does not match the target subsystems");
    }
  }

  // Views of rho as a d x d block matrix over the local index; each block is
  // indexed by the remaining subsystems.
  const std::size_t n = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(n, n);
  ComplexMatrix left(n, n);
  for (const auto& k : ops) {
    // left = (K (x) I) rho
    std::fill(left.data().begin(), left.data().end(), Complex{});
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        const Complex kpq = k(p, q);
        if (kpq == Complex{}) continue;
        for (std::size_t o : others) kernels::axpy(kpq, m.row(local[q] + o), left.row(local[p] + o));
      }
    }
    // out += left (K (x) I)^dagger, done column-block by column-block.
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
          const Complex kc = std::conj(k(p, q));
          if (kc == Complex{}) continue;
          for (std::size_t o : others) out(r, local[p] + o) += left(r, local[q] + o) * kc;
        }
      }
    }
  }
  return DensityOperator(std::move(out), dims);
}

DensityOperator permute_basis(const DensityOperator& rho, std::span<const std::size_t> perm) {
  const std::size_t n = rho.dim();
  if (perm.size() != n) throw std::invalid_argument("permute_basis: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("permute_basis: not a permutation");
    seen[v] = true;
  }
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(perm[r], perm[c]) = m(r, c);
  }
  return DensityOperator(std::move(out), rho.dims());
}

}  // namespace edss
