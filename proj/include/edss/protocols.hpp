#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edss/channels.hpp"
#include "edss/closed_form.hpp"
#include "edss/states.hpp"
#include "edss/tensor.hpp"

namespace edss {

struct DeterministicOutput {
  DensityOperator state;
  double negativity = 0.0;
  double concurrence = 0.0;
};

/// Full record of one protocol run.
///
/// Step labels: rho0, rho1, rho1', rho2' (two-qubit), sigma0 ... sigma2' (GHZ),
/// omega0 ... omega2' (qudit). Partition keys are "<side>|<rest>@<label>" with
/// subsystem names a, b, c and D for the GHZ ancilla pair d1 d2; per-branch GHZ
/// values use "@success" for the |00> outcome.
struct ProtocolTrace {
  Protocol protocol = Protocol::two_qubit;
  Mode mode = Mode::probabilistic;
  std::vector<std::pair<std::string, DensityOperator>> steps;
  std::vector<MeasurementBranch> branches;
  std::map<std::string, double> partition_negativities;
  /// Branch-averaged negativities keyed by target partition ("a|b", "a|bc", ...).
  std::map<std::string, double> average_negativities;
  /// Success-branch values: "a|b" or "a|bc", "b|ac", "c|ab" and pairwise "a|b", "b|c", "a|c"
  /// (GHZ pairwise keys are prefixed with "pair:").
  std::map<std::string, double> success_negativities;
  /// Primary average: a|b for the bipartite protocols, a|bc for GHZ.
  double average_negativity = 0.0;
  double success_probability = 0.0;
  std::optional<DeterministicOutput> deterministic_output;
  /// False when a run leaves the setting the analytic results assume
  /// (currently: GHZ with two different channels).
  bool within_analytic_setting = true;
  std::vector<std::string> notes;

  /// Throws std::out_of_range for unknown labels.
  const DensityOperator& step(const std::string& label) const;
  /// Throws std::out_of_range for unknown keys.
  double partition(const std::string& key) const;
};

struct ProtocolOptions {
  /// Largest qudit dimension run_qudit accepts.
  std::size_t max_dim = 6;
  /// Compute the intermediate partition negativities (the identity chain and
  /// separability audit need them).
  bool partition_negativities = true;
};

/// Throws std::invalid_argument for non-qubit or non-CPT channels.
ProtocolTrace run_two_qubit(const QuditChannel& ch, Mode mode, const ProtocolOptions& opts = {});

/// Throws std::invalid_argument for non-qubit or non-CPT channels.
ProtocolTrace run_ghz(const QuditChannel& ch1, const QuditChannel& ch2,
                      const ProtocolOptions& opts = {});

/// Throws std::invalid_argument for d outside [2, opts.max_dim], a channel of
/// the wrong dimension, a non-CPT channel, or (for d > 2) a channel other than
/// depolarizing or amplitude damping.
ProtocolTrace run_qudit(std::size_t d, const QuditChannel& ch, const ProtocolOptions& opts = {});

struct ChainReport {
  /// Each chain lists its members as (name, value).
  std::vector<std::vector<std::pair<std::string, double>>> chains;
  double max_deviation = 0.0;
  double threshold = tol::kValidity;
  bool pass = false;
};

/// Needs a trace run with partition_negativities enabled.
ChainReport verify_identity_chain(const ProtocolTrace& trace, double threshold = tol::kValidity);

struct SeparabilityReport {
  /// (key, negativity) for every exchange-vs-rest partition at every step.
  std::vector<std::pair<std::string, double>> values;
  double max_negativity = 0.0;
  double threshold = tol::kValidity;
  bool pass = false;
};

SeparabilityReport separability_audit(const ProtocolTrace& trace,
                                      double threshold = tol::kValidity);

}  // namespace edss
