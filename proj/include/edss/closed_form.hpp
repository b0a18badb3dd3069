#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "edss/channels.hpp"

namespace edss {

enum class Protocol { two_qubit, ghz, qudit };
enum class Mode { probabilistic, deterministic };

std::string_view to_string(Protocol p);
std::string_view to_string(Mode m);
/// Accepts two_qubit|ghz|qudit. Throws std::invalid_argument otherwise.
Protocol parse_protocol(std::string_view name);
/// Accepts prob|probabilistic|det|deterministic.
Mode parse_mode(std::string_view name);

/// Analytic reference values for the protocols under depolarizing (p) and
/// amplitude-damping (gamma) noise. Piecewise expressions return 0 in their
/// zero region.
enum class Formula {
  // two-qubit, depolarizing
  tq_dep_success_probability,   // (2+p)/6
  tq_dep_success_negativity,    // (2-3p)/(2+p)
  tq_dep_average,               // (2-3p)/6
  tq_dep_deterministic,         // (sqrt(17p^2-40p+32)-p-4)/12
  tq_dep_critical,              // 2/3
  tq_dep_deterministic_critical,// (3-sqrt5)/2
  // two-qubit, amplitude damping
  tq_ad_success_probability,    // (2+g)/6
  tq_ad_success_negativity,     // (2-2g)/(2+g)
  tq_ad_average,                // (1-g)/3
  tq_ad_deterministic,          // (sqrt(8+g^2)-2-g)/6
  // GHZ, depolarizing
  ghz_dep_success_probability,  // (4+4p-p^2)/28
  ghz_dep_a_bc,                 // (4-8p+3p^2)/(4+4p-p^2)
  ghz_dep_b_ac,                 // (4-10p+5p^2)/(4+4p-p^2)
  ghz_dep_average_a_bc,         // (4-8p+3p^2)/28
  ghz_dep_average_b_ac,         // (4-10p+5p^2)/28
  ghz_dep_critical_a,           // 2/3
  ghz_dep_critical_b,           // (sqrt5-1)/sqrt5
  // GHZ, amplitude damping
  ghz_ad_success_probability,   // (2+2g+g^2)/14
  ghz_ad_a_bc,                  // (sqrt(g^4+(2g-2)^2)-g^2)/(g^2+2g+2)
  ghz_ad_b_ac,                  // (1-g)(sqrt(g^2+4)-g)/(g^2+2g+2)
  ghz_ad_average_a_bc,          // (sqrt(g^4+4(1-g)^2)-g^2)/14
  ghz_ad_average_b_ac,          // (1-g)(sqrt(g^2+4)-g)/14
  // qudit, depolarizing
  qd_dep_success_probability,   // (d+p(d-1))/(d(2d-1))
  qd_dep_critical,              // d/(d+1)
  qd_dep_success_negativity,    // (d-(d+1)p)/(d+(d-1)p)
  qd_dep_average,               // (d-(d+1)p)/(d(2d-1))
  // qudit, amplitude damping
  qd_ad_success_probability,    // (d+(d-1)g)/(d(2d-1))
  qd_ad_success_negativity,     // d(1-g)/(d+(d-1)g)
  qd_ad_average,                // (1-g)/(2d-1)
};

struct FormulaInfo {
  Formula id;
  std::string_view name;
  std::string_view expression;
  Protocol protocol;
  ChannelKind channel;
  /// Thresholds do not depend on the noise parameter.
  bool is_threshold;
  bool needs_d;
};

std::span<const FormulaInfo> all_formulas();
const FormulaInfo& formula_info(Formula id);
/// Throws std::invalid_argument for unknown names.
Formula parse_formula(std::string_view name);

struct FormulaParams {
  /// p or gamma; ignored by thresholds.
  double noise = 0.0;
  /// Qudit dimension; required (>= 2) by the qudit formulas.
  std::size_t d = 2;
};

/// Throws std::invalid_argument when noise lies outside [0, 1] or d < 2.
double closed_form(Formula id, const FormulaParams& params);

}  // namespace edss
