#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edss/complex_matrix.hpp"
#include "edss/tensor.hpp"

namespace edss {

/// Qubit channel acting on the Bloch vector as r -> diag(l1, l2, l3) r + (0, 0, t3).
struct CanonicalQubitChannel {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;
  double t3 = 0.0;

  bool operator==(const CanonicalQubitChannel&) const = default;
};

struct KrausChannel {
  std::size_t input_dim = 0;
  std::vector<ComplexMatrix> kraus_ops;
};

enum class ChannelKind { canonical, depolarizing, amplitude_damping, kraus };

std::string_view to_string(ChannelKind kind);
/// Throws std::invalid_argument for unknown names.
ChannelKind parse_channel_kind(std::string_view name);

/// Immutable linear map on d x d operators. Internally every channel carries
/// its superoperator S with S[p*d+q, m*d+n] = <p|E(|m><n|)|q>, which is what
/// apply() and the Choi construction use.
class QuditChannel {
 public:
  ChannelKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  /// p for depolarizing, gamma for amplitude damping.
  std::optional<double> noise() const { return noise_; }
  /// Present for every qubit channel of canonical, depolarizing or amplitude-damping kind.
  const std::optional<CanonicalQubitChannel>& canonical() const { return canonical_; }
  /// Present for amplitude damping and explicit Kraus channels.
  const std::optional<KrausChannel>& kraus() const { return kraus_; }
  const ComplexMatrix& superoperator() const { return super_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;

  std::string describe() const;

 private:
  friend QuditChannel canonical_channel(double, double, double, double);
  friend QuditChannel depolarizing(std::size_t, double);
  friend QuditChannel amplitude_damping(std::size_t, double);
  friend QuditChannel kraus_channel(KrausChannel);

  QuditChannel(ChannelKind kind, std::size_t dim, ComplexMatrix super)
      : kind_(kind), dim_(dim), super_(std::move(super)) {}

  ChannelKind kind_;
  std::size_t dim_;
  std::optional<double> noise_;
  std::optional<CanonicalQubitChannel> canonical_;
  std::optional<KrausChannel> kraus_;
  ComplexMatrix super_;
};

/// E(I) = I + t3 Z, E(X) = l1 X, E(Y) = l2 Y, E(Z) = l3 Z. No validation;
/// see is_cpt.
QuditChannel canonical_channel(double l1, double l2, double l3, double t3);
QuditChannel canonical_channel(const CanonicalQubitChannel& c);

/// E(X) = (1-p) X + (p/d) tr(X) I. Throws std::invalid_argument unless d >= 2
/// and 0 <= p <= 1.
QuditChannel depolarizing(std::size_t d, double p);

/// Kraus set E0 = |0><0| + sqrt(1-g) sum_{i>0} |i><i|, Em = sqrt(g) |0><m|.
/// Throws std::invalid_argument unless d >= 2 and 0 <= gamma <= 1.
QuditChannel amplitude_damping(std::size_t d, double gamma);

/// Throws std::invalid_argument if the operators are not all input_dim square
/// or the set is empty.
QuditChannel kraus_channel(KrausChannel k);

/// Superoperator from a Kraus set, for use by tests and custom channels.
ComplexMatrix superoperator_from_kraus(std::span<const ComplexMatrix> ops, std::size_t d);

/// Applies ch to subsystem `target` of rho, identity elsewhere.
/// Throws std::invalid_argument on a dimension mismatch, std::out_of_range on a bad index.
DensityOperator apply_to_subsystem(const QuditChannel& ch, const DensityOperator& rho,
                                   std::size_t target);

/// sum_ij |i><j| (x) E(|i><j|).
ComplexMatrix choi_matrix(const QuditChannel& ch);

struct CptReport {
  bool cpt = false;
  double min_choi_eigenvalue = 0.0;
  /// max |tr_out(Choi) - I|, equal to max |sum_k A_k^dagger A_k - I| for Kraus channels.
  double trace_preservation_defect = 0.0;
};

CptReport is_cpt(const QuditChannel& ch, double tol = tol::kValidity);

/// (l1 + l2)^2 = (1 + l3)^2 - t3^2 and (l1 - l2)^2 = (1 - l3)^2 - t3^2 within tol.
bool is_extreme_point(const CanonicalQubitChannel& ch, double tol = tol::kValidity);

/// Same action on every input, compared through the superoperators.
bool same_action(const QuditChannel& a, const QuditChannel& b, double tol = tol::kAlgebraic);

}  // namespace edss
