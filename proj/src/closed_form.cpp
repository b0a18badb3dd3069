#include "edss/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edss {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::two_qubit:
      return "two_qubit";
    case Protocol::ghz:
      return "ghz";
    case Protocol::qudit:
      return "qudit";
  }
  return "unknown";
}

std::string_view to_string(Mode m) {
  return m == Mode::probabilistic ? "probabilistic" : "deterministic";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "two_qubit") return Protocol::two_qubit;
  if (name == "ghz") return Protocol::ghz;
  if (name == "qudit") return Protocol::qudit;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
  if (name == "prob" || name == "probabilistic") return Mode::probabilistic;
  if (name == "det" || name == "deterministic") return Mode::deterministic;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

namespace {

using P = Protocol;
using C = ChannelKind;

constexpr std::array kFormulas = {
    FormulaInfo{Formula::tq_dep_success_probability, "tq_dep_success_probability", "(2+p)/6",
                P::two_qubit, C::depolarizing, false, false},
    FormulaInfo{Formula::tq_dep_success_negativity, "tq_dep_success_negativity",
                "(2-3p)/(2+p) for p <= 2/3, else 0", P::two_qubit, C::depolarizing, false, false},
    FormulaInfo{Formula::tq_dep_average, "tq_dep_average", "(2-3p)/6 for p <= 2/3, else 0",
                P::two_qubit, C::depolarizing, false, false},
    FormulaInfo{Formula::tq_dep_deterministic, "tq_dep_deterministic",
                "(sqrt(17p^2-40p+32)-p-4)/12 for p < (3-sqrt5)/2, else 0", P::two_qubit,
                C::depolarizing, false, false},
    FormulaInfo{Formula::tq_dep_critical, "tq_dep_critical", "2/3", P::two_qubit,
                C::depolarizing, true, false},
    FormulaInfo{Formula::tq_dep_deterministic_critical, "tq_dep_deterministic_critical",
                "(3-sqrt5)/2", P::two_qubit, C::depolarizing, true, false},
    FormulaInfo{Formula::tq_ad_success_probability, "tq_ad_success_probability", "(2+g)/6",
                P::two_qubit, C::amplitude_damping, false, false},
    FormulaInfo{Formula::tq_ad_success_negativity, "tq_ad_success_negativity", "(2-2g)/(2+g)",
                P::two_qubit, C::amplitude_damping, false, false},
    FormulaInfo{Formula::tq_ad_average, "tq_ad_average", "(1-g)/3", P::two_qubit,
                C::amplitude_damping, false, false},
    FormulaInfo{Formula::tq_ad_deterministic, "tq_ad_deterministic", "(sqrt(8+g^2)-2-g)/6",
                P::two_qubit, C::amplitude_damping, false, false},
    FormulaInfo{Formula::ghz_dep_success_probability, "ghz_dep_success_probability",
                "(4+4p-p^2)/28", P::ghz, C::depolarizing, false, false},
    FormulaInfo{Formula::ghz_dep_a_bc, "ghz_dep_a_bc", "(4-8p+3p^2)/(4+4p-p^2) for p <= 2/3, else 0",
                P::ghz, C::depolarizing, false, false},
    FormulaInfo{Formula::ghz_dep_b_ac, "ghz_dep_b_ac",
                "(4-10p+5p^2)/(4+4p-p^2) for p <= (sqrt5-1)/sqrt5, else 0", P::ghz,
                C::depolarizing, false, false},
    FormulaInfo{Formula::ghz_dep_average_a_bc, "ghz_dep_average_a_bc",
                "(4-8p+3p^2)/28 for p <= 2/3, else 0", P::ghz, C::depolarizing, false, false},
    FormulaInfo{Formula::ghz_dep_average_b_ac, "ghz_dep_average_b_ac",
                "(4-10p+5p^2)/28 for p <= (sqrt5-1)/sqrt5, else 0", P::ghz, C::depolarizing, false,
                false},
    FormulaInfo{Formula::ghz_dep_critical_a, "ghz_dep_critical_a", "2/3", P::ghz,
                C::depolarizing, true, false},
    FormulaInfo{Formula::ghz_dep_critical_b, "ghz_dep_critical_b", "(sqrt5-1)/sqrt5", P::ghz,
                C::depolarizing, true, false},
    FormulaInfo{Formula::ghz_ad_success_probability, "ghz_ad_success_probability",
                "(2+2g+g^2)/14", P::ghz, C::amplitude_damping, false, false},
    FormulaInfo{Formula::ghz_ad_a_bc, "ghz_ad_a_bc", "(sqrt(g^4+(2g-2)^2)-g^2)/(g^2+2g+2)",
                P::ghz, C::amplitude_damping, false, false},
    FormulaInfo{Formula::ghz_ad_b_ac, "ghz_ad_b_ac", "(1-g)(sqrt(g^2+4)-g)/(g^2+2g+2)", P::ghz,
                C::amplitude_damping, false, false},
    FormulaInfo{Formula::ghz_ad_average_a_bc, "ghz_ad_average_a_bc",
                "(sqrt(g^4+4(1-g)^2)-g^2)/14", P::ghz, C::amplitude_damping, false, false},
    FormulaInfo{Formula::ghz_ad_average_b_ac, "ghz_ad_average_b_ac", "(1-g)(sqrt(g^2+4)-g)/14",
                P::ghz, C::amplitude_damping, false, false},
    FormulaInfo{Formula::qd_dep_success_probability, "qd_dep_success_probability",
                "(d+p(d-1))/(d(2d-1))", P::qudit, C::depolarizing, false, true},
    FormulaInfo{Formula::qd_dep_critical, "qd_dep_critical", "d/(d+1)", P::qudit,
                C::depolarizing, true, true},
    FormulaInfo{Formula::qd_dep_success_negativity, "qd_dep_success_negativity",
                "(d-(d+1)p)/(d+(d-1)p) for p <= d/(d+1), else 0", P::qudit, C::depolarizing, false,
                true},
    FormulaInfo{Formula::qd_dep_average, "qd_dep_average",
                "(d-(d+1)p)/(d(2d-1)) for p <= d/(d+1), else 0", P::qudit, C::depolarizing, false,
                true},
    FormulaInfo{Formula::qd_ad_success_probability, "qd_ad_success_probability",
                "(d+(d-1)g)/(d(2d-1))", P::qudit, C::amplitude_damping, false, true},
    FormulaInfo{Formula::qd_ad_success_negativity, "qd_ad_success_negativity",
                "d(1-g)/(d+(d-1)g)", P::qudit, C::amplitude_damping, false, true},
    FormulaInfo{Formula::qd_ad_average, "qd_ad_average", "(1-g)/(2d-1)", P::qudit,
                C::amplitude_damping, false, true},
};

double clip(double x) { return std::max(x, 0.0); }

}  // namespace

std::span<const FormulaInfo> all_formulas() { return kFormulas; }

const FormulaInfo& formula_info(Formula id) {
  for (const auto& f : kFormulas) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown formula id");
}

Formula parse_formula(std::string_view name) {
  for (const auto& f : kFormulas) {
    if (f.name == name) return f.id;
  }
  throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

double closed_form(Formula id, const FormulaParams& params) {
  const double x = params.noise;
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("closed_form: noise parameter must lie in [0, 1]");
  }
  if (params.d < 2) throw std::invalid_argument("closed_form: d must be at least 2");
  const double d = static_cast<double>(params.d);
  const double s5 = std::sqrt(5.0);
  switch (id) {
    case Formula::tq_dep_success_probability:
      return (2.0 + x) / 6.0;
    case Formula::tq_dep_success_negativity:
      return clip((2.0 - 3.0 * x) / (2.0 + x));
    case Formula::tq_dep_average:
      return clip((2.0 - 3.0 * x) / 6.0);
    case Formula::tq_dep_deterministic:
      return clip((std::sqrt(17.0 * x * x - 40.0 * x + 32.0) - x - 4.0) / 12.0);
    case Formula::tq_dep_critical:
      return 2.0 / 3.0;
    case Formula::tq_dep_deterministic_critical:
      return (3.0 - s5) / 2.0;
    case Formula::tq_ad_success_probability:
      return (2.0 + x) / 6.0;
    case Formula::tq_ad_success_negativity:
      return (2.0 - 2.0 * x) / (2.0 + x);
    case Formula::tq_ad_average:
      return (1.0 - x) / 3.0;
    case Formula::tq_ad_deterministic:
      return (std::sqrt(8.0 + x * x) - 2.0 - x) / 6.0;
    case Formula::ghz_dep_success_probability:
      return (4.0 + 4.0 * x - x * x) / 28.0;
    case Formula::ghz_dep_a_bc:
      return clip((4.0 - 8.0 * x + 3.0 * x * x) / (4.0 + 4.0 * x - x * x));
    case Formula::ghz_dep_b_ac:
      return x >= (s5 - 1.0) / s5 ? 0.0
                                   : clip((4.0 - 10.0 * x + 5.0 * x * x) / (4.0 + 4.0 * x - x * x));
    case Formula::ghz_dep_average_a_bc:
      return x >= 2.0 / 3.0 ? 0.0 : clip((4.0 - 8.0 * x + 3.0 * x * x) / 28.0);
    case Formula::ghz_dep_average_b_ac:
      return x >= (s5 - 1.0) / s5 ? 0.0 : clip((4.0 - 10.0 * x + 5.0 * x * x) / 28.0);
    case Formula::ghz_dep_critical_a:
      return 2.0 / 3.0;
    case Formula::ghz_dep_critical_b:
      return (s5 - 1.0) / s5;
    case Formula::ghz_ad_success_probability:
      return (2.0 + 2.0 * x + x * x) / 14.0;
    case Formula::ghz_ad_a_bc:
      return (std::sqrt(std::pow(x, 4) + (2.0 * x - 2.0) * (2.0 * x - 2.0)) - x * x) /
             (x * x + 2.0 * x + 2.0);
    case Formula::ghz_ad_b_ac:
      return (1.0 - x) * (std::sqrt(x * x + 4.0) - x) / (x * x + 2.0 * x + 2.0);
    case Formula::ghz_ad_average_a_bc:
      return (std::sqrt(std::pow(x, 4) + 4.0 * (1.0 - x) * (1.0 - x)) - x * x) / 14.0;
    case Formula::ghz_ad_average_b_ac:
      return (1.0 - x) * (std::sqrt(x * x + 4.0) - x) / 14.0;
    case Formula::qd_dep_success_probability:
      return (d + x * (d - 1.0)) / (d * (2.0 * d - 1.0));
    case Formula::qd_dep_critical:
      return d / (d + 1.0);
    case Formula::qd_dep_success_negativity:
      return clip((d - (d + 1.0) * x) / (d + (d - 1.0) * x));
    case Formula::qd_dep_average:
      return clip((d - (d + 1.0) * x) / (d * (2.0 * d - 1.0)));
    case Formula::qd_ad_success_probability:
      return (d + (d - 1.0) * x) / (d * (2.0 * d - 1.0));
    case Formula::qd_ad_success_negativity:
      return d * (1.0 - x) / (d + (d - 1.0) * x);
    case Formula::qd_ad_average:
      return (1.0 - x) / (2.0 * d - 1.0);
  }
  throw std::invalid_argument("closed_form: unknown formula id");
}

}  // namespace edss
