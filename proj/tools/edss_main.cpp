// edss: sweeps, verification suites and protocol descriptions.
//
// Config files (sweep --config FILE) hold one `key = value` pair per line,
// keys being the long flag names without dashes; `#` starts a comment and
// repeated options take a list, e.g. `d = [3, 4, 5]`. Flags given on the
// command line override the file.

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edss/sweep.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kIoError = 3 };

struct SweepArgs {
  std::string protocol = "two_qubit";
  std::string mode = "prob";
  std::string channel = "depolarizing";
  std::vector<std::size_t> dims;
  std::optional<double> p, gamma, lambda1, lambda2, lambda3, t3;
  std::string param;
  double from = 0.0;
  double to = 1.0;
  std::size_t points = 21;
  std::string csv;
  std::string svg;
  std::vector<std::string> checks;
  std::size_t max_d = 6;
  bool skip_partitions = false;
  unsigned threads = 0;
};

struct CheckArgs {
  std::string suite = "all";
  std::size_t max_d = 6;
  std::size_t grid_points = 21;
  std::size_t random_channels = 50;
  unsigned threads = 0;
};

edss::SweepSpec to_spec(const SweepArgs& a) {
  edss::SweepSpec s;
  s.protocol = edss::parse_protocol(a.protocol);
  s.mode = edss::parse_mode(a.mode);
  s.channel.kind = edss::parse_channel_kind(a.channel);
  if (s.channel.kind == edss::ChannelKind::kraus) {
    throw std::invalid_argument("kraus channels cannot be swept from the command line");
  }
  if (a.p) s.channel.p = *a.p;
  if (a.gamma) s.channel.gamma = *a.gamma;
  if (a.lambda1) s.channel.lambda1 = *a.lambda1;
  if (a.lambda2) s.channel.lambda2 = *a.lambda2;
  if (a.lambda3) s.channel.lambda3 = *a.lambda3;
  if (a.t3) s.channel.t3 = *a.t3;
  if (!a.param.empty()) {
    s.param = a.param;
  } else {
    s.param = s.channel.kind == edss::ChannelKind::amplitude_damping ? "gamma"
              : s.channel.kind == edss::ChannelKind::canonical      ? "lambda3"
                                                                    : "p";
  }
  s.from = a.from;
  s.to = a.to;
  s.points = a.points;
  if (!a.dims.empty()) s.dims = a.dims;
  s.max_d = a.max_d;
  s.partitions = !a.skip_partitions;
  s.csv_path = a.csv;
  s.svg_path = a.svg;
  s.threads = a.threads;
  for (const auto& c : a.checks) {
    if (c == "identity") {
      s.checks.identity = true;
    } else if (c == "separability") {
      s.checks.separability = true;
    } else if (c == "closed_form") {
      s.checks.closed_form = true;
    } else if (c == "all") {
      s.checks = {true, true, true};
    } else {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
  s.validate();
  return s;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.close();
  return static_cast<bool>(out);
}

int run_sweep_command(const SweepArgs& args) {
  edss::SweepSpec spec;
  edss::SweepTable table;
  try {
    spec = to_spec(args);
    table = edss::run_sweep(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "edss: " << e.what() << '\n';
    return kInvalidInput;
  }
  const std::string csv = edss::to_csv(table);
  if (spec.csv_path.empty()) {
    std::cout << csv;
  } else if (!write_file(spec.csv_path, csv)) {
    std::cerr << "edss: cannot write " << spec.csv_path << '\n';
    return kIoError;
  }
  if (!spec.svg_path.empty()) {
    const std::string title = std::string(edss::to_string(spec.protocol)) + " / " +
                              std::string(edss::to_string(spec.channel.kind)) + " vs " +
                              spec.param;
    if (!write_file(spec.svg_path, edss::to_svg(table, title))) {
      std::cerr << "edss: cannot write " << spec.svg_path << '\n';
      return kIoError;
    }
  }
  if (!table.checks.empty()) {
    std::ostream& out = spec.csv_path.empty() ? std::cerr : std::cout;
    out << edss::format_report(table.checks);
  }
  return table.checks_pass() ? kOk : kCheckFailed;
}

int run_check_command(const CheckArgs& args) {
  edss::CheckOptions opts;
  edss::CheckSuite suite;
  try {
    suite = edss::parse_check_suite(args.suite);
    if (args.max_d < 2) throw std::invalid_argument("--max-d must be at least 2");
    if (args.grid_points < 2) throw std::invalid_argument("--grid-points must be at least 2");
  } catch (const std::invalid_argument& e) {
    std::cerr << "edss: " << e.what() << '\n';
    return kInvalidInput;
  }
  opts.max_d = args.max_d;
  opts.grid_points = args.grid_points;
  opts.random_channels = args.random_channels;
  opts.threads = args.threads;
  const auto report = edss::run_checks(suite, opts);
  std::cout << edss::format_report(report.lines);
  return report.pass() ? kOk : kCheckFailed;
}

// Fills options not given on the command line from a config file.
void apply_config(CLI::App& app, const std::string& path) {
  for (const auto& item : CLI::ConfigTOML().from_file(path)) {
    if (!item.parents.empty() || item.name == "config") {
      throw CLI::ConversionError("unexpected key '" + item.fullname() + "'");
    }
    CLI::Option* opt = app.get_option_no_throw("--" + item.name);
    if (opt == nullptr) throw CLI::ConversionError("unknown key '" + item.name + "'");
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement distribution by separable states: sweeps and checks"};
  app.require_subcommand(1);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV/SVG");
  std::string config_path;
  sweep->add_option("--config", config_path, "Read options from a key = value file");
  sweep->add_option("--protocol", sa.protocol, "two_qubit | ghz | qudit");
  sweep->add_option("--mode", sa.mode, "prob | det");
  sweep->add_option("--channel,--kind", sa.channel,
                    "depolarizing | amplitude_damping | canonical");
  sweep->add_option("--d", sa.dims, "Qudit dimension (repeatable)");
  sweep->add_option("--p", sa.p, "Depolarizing parameter");
  sweep->add_option("--gamma", sa.gamma, "Amplitude damping parameter");
  sweep->add_option("--lambda1", sa.lambda1);
  sweep->add_option("--lambda2", sa.lambda2);
  sweep->add_option("--lambda3", sa.lambda3);
  sweep->add_option("--t3", sa.t3);
  sweep->add_option("--param", sa.param, "Swept parameter (p, gamma, lambda1..3, t3)");
  sweep->add_option("--from", sa.from);
  sweep->add_option("--to", sa.to);
  sweep->add_option("--points", sa.points);
  sweep->add_option("--csv", sa.csv, "CSV output path (stdout when omitted)");
  sweep->add_option("--svg", sa.svg, "SVG output path");
  sweep->add_option("--check", sa.checks, "identity,separability,closed_form")->delimiter(',');
  sweep->add_option("--max-d", sa.max_d, "Largest qudit dimension accepted");
  sweep->add_flag("--skip-partitions", sa.skip_partitions,
                  "Skip per-step partition negativities");
  sweep->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run the verification suites");
  check->add_option("suite", ca.suite, "all | identity | separability | closed_form");
  check->add_option("--max-d", ca.max_d);
  check->add_option("--grid-points", ca.grid_points);
  check->add_option("--random-channels", ca.random_channels);
  check->add_option("--threads", ca.threads);

  std::string protocol;
  auto* desc = app.add_subcommand("describe", "Print a protocol's steps, partitions and formulas");
  desc->add_option("protocol", protocol, "two_qubit | ghz | qudit")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << "edss: " << e.what() << '\n';
    return kIoError;
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return kOk;
    return kInvalidInput;
  }

  if (*sweep) {
    if (!config_path.empty()) {
      try {
        apply_config(*sweep, config_path);
      } catch (const CLI::FileError& e) {
        std::cerr << "edss: " << e.what() << '\n';
        return kIoError;
      } catch (const CLI::Error& e) {
        std::cerr << "edss: " << config_path << ": " << e.what() << '\n';
        return kInvalidInput;
      }
    }
    return run_sweep_command(sa);
  }
  if (*check) return run_check_command(ca);
  try {
    std::cout << edss::describe(edss::parse_protocol(protocol));
  } catch (const std::invalid_argument& e) {
    std::cerr << "edss: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}
