#include "edss/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace edss {
namespace {

std::vector<Complex> basis(std::size_t i, std::size_t d) {
  std::vector<Complex> v(d);
  v[i] = 1.0;
  return v;
}

std::vector<Complex> product(std::initializer_list<std::vector<Complex>> factors) {
  std::vector<Complex> out{1.0};
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

}  // namespace

double PureState::norm() const {
  double s = 0.0;
  for (Complex z : amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

DensityOperator PureState::density() const {
  return DensityOperator(ComplexMatrix::projector(amplitudes), dims);
}

PureState ghz_state(std::size_t n, std::size_t d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz_state: need n >= 2 and d >= 2");
  const Dims dims(n, d);
  PureState s{std::vector<Complex>(total_dim(dims)), dims};
  // |i...i> sits at i * (1 + d + d^2 + ...).
  std::size_t step = 0;
  for (std::size_t k = 0, p = 1; k < n; ++k, p *= d) step += p;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) s.amplitudes[i * step] = amp;
  return s;
}

PureState bell_chi0(std::size_t d) { return ghz_state(2, d); }

PureState psi_plus() { return ghz_state(2, 2); }

DensityOperator edss_initial_two_qubit() {
  using std::numbers::pi;
  auto psi = [](int k) {
    const double r = 1.0 / std::sqrt(2.0);
    return std::vector<Complex>{r, r * std::polar(1.0, k * pi / 2.0)};
  };
  ComplexMatrix m(8, 8);
  for (int k = 0; k < 4; ++k) m.add_projector(product({psi(k), psi(-k), basis(0, 2)}), 1.0 / 6.0);
  for (std::size_t i = 0; i < 2; ++i) {
    m.add_projector(product({basis(i, 2), basis(i, 2), basis(1, 2)}), 1.0 / 6.0);
  }
  return DensityOperator(std::move(m), {2, 2, 2});
}

DensityOperator ghz_initial_state() {
  using std::numbers::pi;
  auto phi = [](int n, int k) {
    const double r = 1.0 / std::sqrt(2.0);
    return std::vector<Complex>{r, r * std::polar(1.0, std::ldexp(pi, n) * k / 7.0)};
  };
  ComplexMatrix m(32, 32);
  for (int k = 0; k < 7; ++k) {
    m.add_projector(product({phi(1, k), phi(2, k), phi(3, k), basis(0, 2), basis(0, 2)}),
                    4.0 / 49.0);
  }
  for (std::size_t mm = 0; mm < 2; ++mm) {
    for (std::size_t d1 = 0; d1 < 2; ++d1) {
      for (std::size_t d2 = 0; d2 < 2; ++d2) {
        if (d1 == 0 && d2 == 0) continue;
        m.add_projector(
            product({basis(mm, 2), basis(mm, 2), basis(mm, 2), basis(d1, 2), basis(d2, 2)}),
            1.0 / 14.0);
      }
    }
  }
  return DensityOperator(std::move(m), {2, 2, 2, 2, 2});
}

DensityOperator qudit_initial_state(std::size_t d) {
  if (d < 2) throw std::invalid_argument("qudit_initial_state: d must be at least 2");
  using std::numbers::pi;
  const std::size_t big_d = (std::size_t{1} << d) - 1;
  const double dd = static_cast<double>(d);
  auto phi = [&](long long k) {
    std::vector<Complex> v(d);
    for (std::size_t j = 0; j < d; ++j) {
      const long long s = (1LL << j) - 1;
      // Reduce the exponent mod D before converting to an angle.
      long long e = (s * k) % static_cast<long long>(big_d);
      v[j] = std::polar(1.0 / std::sqrt(dd), 2.0 * pi * static_cast<double>(e) /
                                                 static_cast<double>(big_d));
    }
    return v;
  };
  const std::size_t n = d * d * d;
  ComplexMatrix m(n, n);
  const double w_phase = dd / (static_cast<double>(big_d) * (2.0 * dd - 1.0));
  for (std::size_t k = 0; k < big_d; ++k) {
    const auto kk = static_cast<long long>(k);
    m.add_projector(product({phi(kk), phi(-kk), basis(0, d)}), w_phase);
  }
  const double w_diag = 1.0 / (dd * (2.0 * dd - 1.0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      if (j == l) continue;
      const std::size_t c = (l + d - j) % d;
      const std::size_t idx = (j * d + j) * d + c;
      m(idx, idx) += w_diag;
    }
  }
  return DensityOperator(std::move(m), {d, d, d});
}

DensityOperator cnot(const DensityOperator& rho, std::size_t control, std::size_t target,
                     bool inverse) {
  const auto& dims = rho.dims();
  if (control >= dims.size() || target >= dims.size()) {
    throw std::out_of_range("cnot: subsystem index out of range");
  }
  if (control == target) throw std::invalid_argument("cnot: control equals target");
  if (dims[control] != dims[target]) {
    throw std::invalid_argument("cnot: control and target dimensions differ");
  }
  const std::size_t d = dims[control];
  const auto strides = strides_of(dims);
  const std::size_t n = rho.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = (x / strides[control]) % d;
    const std::size_t j = (x / strides[target]) % d;
    const std::size_t shifted = inverse ? (j + d - i) % d : (j + i) % d;
    perm[x] = x - j * strides[target] + shifted * strides[target];
  }
  return permute_basis(rho, perm);
}

std::vector<MeasurementBranch> measure_computational(const DensityOperator& rho,
                                                     std::span<const std::size_t> targets) {
  const auto& dims = rho.dims();
  if (targets.empty()) throw std::invalid_argument("measure_computational: no targets");
  std::vector<int> used(dims.size(), 0);
  for (std::size_t t : targets) {
    if (t >= dims.size()) throw std::out_of_range("measure_computational: target out of range");
    if (used[t]++) throw std::invalid_argument("measure_computational: duplicate target");
  }
  if (targets.size() == dims.size()) {
    throw std::invalid_argument("measure_computational: nothing would remain after measurement");
  }
  const auto strides = strides_of(dims);
  Dims rest_dims;
  std::vector<std::size_t> rest_offsets{0};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (used[i]) continue;
    rest_dims.push_back(dims[i]);
    std::vector<std::size_t> next;
    for (std::size_t base : rest_offsets) {
      for (std::size_t k = 0; k < dims[i]; ++k) next.push_back(base + k * strides[i]);
    }
    rest_offsets = std::move(next);
  }

  std::vector<std::size_t> outcome_dims;
  for (std::size_t t : targets) outcome_dims.push_back(dims[t]);
  const std::size_t outcomes = total_dim(outcome_dims);
  const ComplexMatrix& m = rho.matrix();
  const std::size_t r = rest_offsets.size();

  std::vector<MeasurementBranch> branches;
  branches.reserve(outcomes);
  for (std::size_t o = 0; o < outcomes; ++o) {
    MeasurementBranch b;
    b.outcome.resize(targets.size());
    std::size_t base = 0;
    for (std::size_t k = targets.size(), rem = o; k-- > 0;) {
      b.outcome[k] = rem % outcome_dims[k];
      rem /= outcome_dims[k];
      base += b.outcome[k] * strides[targets[k]];
    }
    ComplexMatrix block(r, r);
    double prob = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) block(i, j) = m(base + rest_offsets[i], base + rest_offsets[j]);
      prob += block(i, i).real();
    }
    b.probability = std::max(prob, 0.0);
    if (prob > kZeroProbability) {
      block *= Complex{1.0 / prob};
      b.post_state.emplace(std::move(block), rest_dims);
    }
    branches.push_back(std::move(b));
  }
  return branches;
}

std::vector<MeasurementBranch> measure_computational(const DensityOperator& rho,
                                                     std::size_t target) {
  const std::size_t t[] = {target};
  return measure_computational(rho, t);
}

std::vector<ComplexMatrix> bob_deterministic_kraus() {
  std::vector<ComplexMatrix> ops(3, ComplexMatrix(4, 4));
  ops[0](0, 0) = 1.0;  // I (x) |0><0| on (b, c)
  ops[0](2, 2) = 1.0;
  ops[1](1, 1) = 1.0;  // |01><01|
  ops[2](1, 3) = 1.0;  // |01><11|
  return ops;
}

DensityOperator bob_deterministic_map(const DensityOperator& rho_abc) {
  if (rho_abc.dims() != Dims{2, 2, 2}) {
    throw std::invalid_argument("bob_deterministic_map: expects a three-qubit state");
  }
  const auto ops = bob_deterministic_kraus();
  const std::size_t targets[] = {1, 2};
  return partial_trace(apply_kraus(rho_abc, ops, targets), {0, 1});
}

}  // namespace edss
