#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edss/channels.hpp"
#include "edss/closed_form.hpp"
#include "edss/protocols.hpp"

namespace edss {

/// Channel family plus fixed parameters; the swept parameter overrides one of them.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::depolarizing;
  double p = 0.0;
  double gamma = 0.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;
  double t3 = 0.0;

  /// Copy with the named parameter (p, gamma, lambda1, lambda2, lambda3, t3) set to value.
  /// Throws std::invalid_argument for a name the channel kind does not use.
  ChannelSpec with(const std::string& param, double value) const;
  /// Throws std::invalid_argument for kraus (not configurable) or bad parameters.
  QuditChannel build(std::size_t d) const;
};

struct SweepChecks {
  bool identity = false;
  bool separability = false;
  bool closed_form = false;
};

struct SweepSpec {
  Protocol protocol = Protocol::two_qubit;
  Mode mode = Mode::probabilistic;
  ChannelSpec channel;
  std::string param = "p";
  double from = 0.0;
  double to = 1.0;
  std::size_t points = 21;
  /// Qudit dimensions (qudit protocol only).
  std::vector<std::size_t> dims{3};
  std::size_t max_d = 6;
  bool partitions = true;
  std::string csv_path;
  std::string svg_path;
  SweepChecks checks;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
  /// points values from `from` to `to`, endpoints exact.
  std::vector<double> grid() const;
};

struct CheckLine {
  std::string name;
  double max_deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Every enabled check, one line per (row, check).
  std::vector<CheckLine> checks;
  bool checks_pass() const;
};

/// Evaluates the grid (concurrently, rows in grid order). Throws
/// std::invalid_argument for an invalid spec or a non-CPT grid point.
SweepTable run_sweep(const SweepSpec& spec);

/// Shortest round-trip text capped at 12 significant digits; "-0" prints as "0".
std::string format_number(double v);

/// Header plus one LF-terminated line per row.
std::string to_csv(const SweepTable& table);

/// Minimal line chart: one polyline per reported quantity (per d for qudit
/// sweeps). Each polyline carries data-x and data-values attributes holding the
/// CSV text of its points.
std::string to_svg(const SweepTable& table, const std::string& title);

/// Largest noise value in [0, 1] at which the simulated success-branch
/// negativity of the qudit protocol under depolarizing noise is still positive,
/// found by bisection to `tol`.
double derived_critical_noise(std::size_t d, double tol = 1e-12);

/// Largest noise value at which fn (non-increasing, positive at 0) is still positive.
double bisect_threshold(const std::function<double(double)>& fn, double tol = 1e-12);

// ---- verification suites ----

enum class CheckSuite { identity, separability, closed_form, all };
CheckSuite parse_check_suite(std::string_view name);

struct CheckOptions {
  std::size_t max_d = 6;
  std::size_t grid_points = 21;
  std::size_t random_channels = 50;
  std::uint64_t seed = 20240611;
  unsigned threads = 0;
  /// Reference used by the closed_form suite; replaceable for negative controls.
  std::function<double(Formula, const FormulaParams&)> reference = closed_form;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool pass() const;
};

CheckReport run_checks(CheckSuite suite, const CheckOptions& opts = {});

/// "name max_deviation threshold PASS|FAIL" per line.
std::string format_report(const std::vector<CheckLine>& lines);

/// Canonical CP-valid qubit channels with t1 = t2 = 0, sampled uniformly and
/// kept when the Choi test passes.
std::vector<CanonicalQubitChannel> random_cp_canonical_channels(std::size_t count,
                                                                std::uint64_t seed);

/// Human-readable step sequence, partitions and formula ids of a protocol.
std::string describe(Protocol protocol);

}  // namespace edss
