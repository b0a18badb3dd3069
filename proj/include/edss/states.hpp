#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "edss/complex_matrix.hpp"
#include "edss/tensor.hpp"

namespace edss {

struct PureState {
  std::vector<Complex> amplitudes;
  Dims dims;

  double norm() const;
  DensityOperator density() const;
};

/// (1/sqrt d) sum_i |i>^{(x) n}. Throws std::invalid_argument for n < 2 or d < 2.
PureState ghz_state(std::size_t n, std::size_t d);
/// (1/sqrt d) sum_j |jj>.
PureState bell_chi0(std::size_t d);
/// (|00> + |11>)/sqrt 2.
PureState psi_plus();

/// Separable three-qubit starting state of the two-qubit protocol:
/// (1/6) sum_{k=0..3} |psi_k, psi_-k, 0><.| + (1/6) sum_i |i,i,1><i,i,1|,
/// |psi_k> = (|0> + e^{i k pi/2}|1>)/sqrt 2.
DensityOperator edss_initial_two_qubit();

/// Five-qubit (a, b, c, d1, d2) starting state of the GHZ protocol:
/// (4/49) sum_{k=0..6} |w(k)><w(k)| (x) P00 + (1/14) sum_m P_mmm (x) (I - P00),
/// |w(k)> = |phi_1(k) phi_2(k) phi_3(k)>, |phi_n(k)> = (|0> + e^{2^n pi i k/7}|1>)/sqrt 2.
DensityOperator ghz_initial_state();

/// Three-qudit starting state of the d-dimensional protocol:
/// d/(D(2d-1)) sum_k |phi(k), phi(-k), 0><.| + 1/(d(2d-1)) sum_{j!=l} P_{j, j, l-j},
/// phi(+-k) = (1/sqrt d) sum_j w^{+-s_j k}|j>, w = e^{2 pi i/D}, D = 2^d - 1, s_j = 2^j - 1.
/// Throws std::invalid_argument for d < 2.
DensityOperator qudit_initial_state(std::size_t d);

/// Conjugation by C|i, j> = |i, j + i mod d> (or j - i when inverse).
/// Throws std::invalid_argument when the two subsystem dimensions differ or
/// control == target, std::out_of_range for bad indices.
DensityOperator cnot(const DensityOperator& rho, std::size_t control, std::size_t target,
                     bool inverse = false);

struct MeasurementBranch {
  /// One digit per measured subsystem, in the order they were listed.
  std::vector<std::size_t> outcome;
  double probability = 0.0;
  /// Normalized state of the unmeasured subsystems; empty for zero-probability outcomes.
  std::optional<DensityOperator> post_state;
};

/// Probabilities below this are reported as zero-probability branches.
inline constexpr double kZeroProbability = 1e-14;

/// Computational-basis measurement of the listed subsystems, which are removed
/// from the post-measurement register. Branches are ordered row-major over the
/// outcome digits.
std::vector<MeasurementBranch> measure_computational(const DensityOperator& rho,
                                                     std::span<const std::size_t> targets);
std::vector<MeasurementBranch> measure_computational(const DensityOperator& rho,
                                                     std::size_t target);

/// Kraus operators of Bob's local map on (b, c): I (x) |0><0|, |01><01|, |01><11|.
std::vector<ComplexMatrix> bob_deterministic_kraus();

/// tr_c(Phi_bc(rho_abc)). Throws std::invalid_argument unless rho is three qubits.
DensityOperator bob_deterministic_map(const DensityOperator& rho_abc);

}  // namespace edss
