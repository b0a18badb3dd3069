#include "edss/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "edss/measures.hpp"
#include "parallel.hpp"

namespace edss {

ChannelSpec ChannelSpec::with(const std::string& param, double value) const {
  ChannelSpec out = *this;
  const bool canonical = kind == ChannelKind::canonical;
  if (param == "p" && kind == ChannelKind::depolarizing) {
    out.p = value;
  } else if (param == "gamma" && kind == ChannelKind::amplitude_damping) {
    out.gamma = value;
  } else if (canonical && param == "lambda1") {
    out.lambda1 = value;
  } else if (canonical && param == "lambda2") {
    out.lambda2 = value;
  } else if (canonical && param == "lambda3") {
    out.lambda3 = value;
  } else if (canonical && param == "t3") {
    out.t3 = value;
  } else {
    throw std::invalid_argument("parameter '" + param + "' does not apply to a " +
                                std::string(to_string(kind)) + " channel");
  }
  return out;
}

QuditChannel ChannelSpec::build(std::size_t d) const {
  switch (kind) {
    case ChannelKind::depolarizing:
      return depolarizing(d, p);
    case ChannelKind::amplitude_damping:
      return amplitude_damping(d, gamma);
    case ChannelKind::canonical:
      if (d != 2) throw std::invalid_argument("canonical channels act on qubits only");
      return canonical_channel(lambda1, lambda2, lambda3, t3);
    case ChannelKind::kraus:
      break;
  }
  throw std::invalid_argument("kraus channels cannot be configured from a sweep spec");
}

void SweepSpec::validate() const {
  if (!(from <= to)) throw std::invalid_argument("sweep: --from must not exceed --to");
  if (from < 0.0 || to > 1.0) throw std::invalid_argument("sweep: swept range must lie in [0, 1]");
  if (points < 2) throw std::invalid_argument("sweep: --points must be at least 2");
  (void)channel.with(param, from);
  if (channel.kind == ChannelKind::kraus) {
    throw std::invalid_argument("sweep: kraus channels cannot be swept");
  }
  if (mode == Mode::deterministic && protocol != Protocol::two_qubit) {
    throw std::invalid_argument("sweep: deterministic mode exists only for the two_qubit protocol");
  }
  if (protocol == Protocol::qudit) {
    if (dims.empty()) throw std::invalid_argument("sweep: qudit sweeps need at least one --d");
    for (std::size_t d : dims) {
      if (d < 2 || d > max_d) {
        throw std::invalid_argument("sweep: d = " + std::to_string(d) + " outside [2, " +
                                    std::to_string(max_d) + "]");
      }
      if (d > 2 && channel.kind == ChannelKind::canonical) {
        throw std::invalid_argument("sweep: canonical channels need d = 2");
      }
    }
  }
  if (checks.identity && !partitions) {
    throw std::invalid_argument("sweep: the identity check needs partition negativities");
  }
  if (checks.separability && !partitions) {
    throw std::invalid_argument("sweep: the separability check needs partition negativities");
  }
  if (checks.closed_form && channel.kind == ChannelKind::canonical) {
    throw std::invalid_argument(
        "sweep: closed-form references exist only for depolarizing and amplitude damping");
  }
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  g.back() = to;
  return g;
}

bool SweepTable::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double bisect_threshold(const std::function<double(double)>& fn, double tol) {
  double lo = 0.0, hi = 1.0;
  if (fn(hi) > 0.0) return 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (fn(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double derived_critical_noise(std::size_t d, double tol) {
  const DensityOperator omega1 = cnot(qudit_initial_state(d), 0, 2);
  const Bipartition ab = Bipartition::of({0}, 2);
  return bisect_threshold(
      [&](double p) {
        const DensityOperator o2p = cnot(apply_to_subsystem(depolarizing(d, p), omega1, 2), 1, 2,
                                         /*inverse=*/true);
        const auto branches = measure_computational(o2p, 2);
        if (!branches[0].post_state) return 0.0;
        return -min_partial_transpose_eigenvalue(*branches[0].post_state, ab);
      },
      tol);
}

namespace {

using Row = std::vector<std::pair<std::string, double>>;

struct RowContext {
  const SweepSpec& spec;
  std::size_t d;
  std::optional<double> p_c_derived;
};

bool has_reference(const SweepSpec& spec) {
  return spec.channel.kind == ChannelKind::depolarizing ||
         spec.channel.kind == ChannelKind::amplitude_damping;
}

double noise_of(const ChannelSpec& c) {
  return c.kind == ChannelKind::depolarizing ? c.p : c.gamma;
}

void add_checks(const RowContext& ctx, const ProtocolTrace& t, Row& row) {
  if (!ctx.spec.partitions) return;
  row.emplace_back(t.protocol == Protocol::ghz ? "N_D_abc_max" : "N_c_ab_max",
                   separability_audit(t).max_negativity);
  row.emplace_back("chain_deviation", verify_identity_chain(t).max_deviation);
}

Row two_qubit_row(const RowContext& ctx, double x) {
  const SweepSpec& s = ctx.spec;
  const ChannelSpec cs = s.channel.with(s.param, x);
  ProtocolOptions opts;
  opts.partition_negativities = s.partitions;
  const ProtocolTrace t = run_two_qubit(cs.build(2), s.mode, opts);
  Row row{{s.param, x},
          {"success_probability", t.success_probability},
          {"N_a_b_success", t.success_negativities.at("a|b")},
          {"avg_negativity", t.average_negativity}};
  if (t.deterministic_output) {
    row.emplace_back("det_negativity", t.deterministic_output->negativity);
    row.emplace_back("det_concurrence", t.deterministic_output->concurrence);
  }
  if (s.partitions) {
    row.emplace_back("N_a_bc_rho1p", t.partition("a|bc@rho1'"));
    row.emplace_back("N_a_bc_rho2p", t.partition("a|bc@rho2'"));
    row.emplace_back("N_b_ac_rho2p", t.partition("b|ac@rho2'"));
  }
  add_checks(ctx, t, row);
  if (has_reference(s)) {
    const bool dep = cs.kind == ChannelKind::depolarizing;
    const FormulaParams fp{noise_of(cs), 2};
    row.emplace_back("ref_success_probability",
                     closed_form(dep ? Formula::tq_dep_success_probability
                                     : Formula::tq_ad_success_probability, fp));
    row.emplace_back("ref_N_a_b_success",
                     closed_form(dep ? Formula::tq_dep_success_negativity
                                     : Formula::tq_ad_success_negativity, fp));
    row.emplace_back("ref_avg_negativity",
                     closed_form(dep ? Formula::tq_dep_average : Formula::tq_ad_average, fp));
    if (t.deterministic_output) {
      row.emplace_back("ref_det_negativity",
                       closed_form(dep ? Formula::tq_dep_deterministic
                                       : Formula::tq_ad_deterministic, fp));
    }
  }
  return row;
}

Row ghz_row(const RowContext& ctx, double x) {
  const SweepSpec& s = ctx.spec;
  const ChannelSpec cs = s.channel.with(s.param, x);
  ProtocolOptions opts;
  opts.partition_negativities = s.partitions;
  const QuditChannel ch = cs.build(2);
  const ProtocolTrace t = run_ghz(ch, ch, opts);
  Row row{{s.param, x},
          {"success_probability", t.success_probability},
          {"N_a_bc_success", t.success_negativities.at("a|bc")},
          {"N_b_ac_success", t.success_negativities.at("b|ac")},
          {"N_c_ab_success", t.success_negativities.at("c|ab")},
          {"N_a_b_success", t.success_negativities.at("pair:a|b")},
          {"N_b_c_success", t.success_negativities.at("pair:b|c")},
          {"N_a_c_success", t.success_negativities.at("pair:a|c")},
          {"N_a_bc_avg", t.average_negativities.at("a|bc")},
          {"N_b_ac_avg", t.average_negativities.at("b|ac")},
          {"N_c_ab_avg", t.average_negativities.at("c|ab")}};
  if (s.partitions) {
    row.emplace_back("N_a_bcD_sigma1p", t.partition("a|bcD@sigma1'"));
    row.emplace_back("N_a_bcD_sigma2p", t.partition("a|bcD@sigma2'"));
    row.emplace_back("N_b_acD_sigma2p", t.partition("b|acD@sigma2'"));
    row.emplace_back("N_c_abD_sigma2p", t.partition("c|abD@sigma2'"));
  }
  add_checks(ctx, t, row);
  if (has_reference(s)) {
    const bool dep = cs.kind == ChannelKind::depolarizing;
    const FormulaParams fp{noise_of(cs), 2};
    auto ref = [&](Formula a, Formula b) { return closed_form(dep ? a : b, fp); };
    row.emplace_back("ref_success_probability", ref(Formula::ghz_dep_success_probability,
                                                    Formula::ghz_ad_success_probability));
    row.emplace_back("ref_N_a_bc_success", ref(Formula::ghz_dep_a_bc, Formula::ghz_ad_a_bc));
    row.emplace_back("ref_N_b_ac_success", ref(Formula::ghz_dep_b_ac, Formula::ghz_ad_b_ac));
    row.emplace_back("ref_N_a_bc_avg",
                     ref(Formula::ghz_dep_average_a_bc, Formula::ghz_ad_average_a_bc));
    row.emplace_back("ref_N_b_ac_avg",
                     ref(Formula::ghz_dep_average_b_ac, Formula::ghz_ad_average_b_ac));
  }
  return row;
}

Row qudit_row(const RowContext& ctx, double x) {
  const SweepSpec& s = ctx.spec;
  const ChannelSpec cs = s.channel.with(s.param, x);
  ProtocolOptions opts;
  opts.partition_negativities = s.partitions;
  opts.max_dim = s.max_d;
  const ProtocolTrace t = run_qudit(ctx.d, cs.build(ctx.d), opts);
  Row row{{s.param, x},
          {"d", static_cast<double>(ctx.d)},
          {"success_probability", t.success_probability},
          {"N_a_b_success", t.success_negativities.at("a|b")},
          {"avg_negativity", t.average_negativity}};
  if (s.partitions) {
    row.emplace_back("N_a_bc_omega1p", t.partition("a|bc@omega1'"));
    row.emplace_back("N_a_bc_omega2p", t.partition("a|bc@omega2'"));
    row.emplace_back("N_b_ac_omega2p", t.partition("b|ac@omega2'"));
  }
  add_checks(ctx, t, row);
  if (has_reference(s)) {
    const bool dep = cs.kind == ChannelKind::depolarizing;
    const FormulaParams fp{noise_of(cs), ctx.d};
    auto ref = [&](Formula a, Formula b) { return closed_form(dep ? a : b, fp); };
    row.emplace_back("ref_success_probability", ref(Formula::qd_dep_success_probability,
                                                    Formula::qd_ad_success_probability));
    row.emplace_back("ref_N_a_b_success",
                     ref(Formula::qd_dep_success_negativity, Formula::qd_ad_success_negativity));
    row.emplace_back("ref_avg_negativity", ref(Formula::qd_dep_average, Formula::qd_ad_average));
  }
  if (ctx.p_c_derived) {
    row.emplace_back("p_c_derived", *ctx.p_c_derived);
    row.emplace_back("ref_p_c", closed_form(Formula::qd_dep_critical, {0.0, ctx.d}));
  }
  return row;
}

std::string point_label(const SweepSpec& s, const Row& row) {
  std::ostringstream os;
  os << "[";
  if (s.protocol == Protocol::qudit) os << "d=" << format_number(row[1].second) << ",";
  os << s.param << "=" << format_number(row[0].second) << "]";
  return os.str();
}

double value_of(const Row& row, const std::string& name) {
  for (const auto& [k, v] : row) {
    if (k == name) return v;
  }
  throw std::out_of_range("missing column " + name);
}

void row_checks(const SweepSpec& s, const Row& row, std::vector<CheckLine>& out) {
  const std::string label = point_label(s, row);
  if (s.checks.identity) {
    const double dev = value_of(row, "chain_deviation");
    out.push_back({"identity" + label, dev, tol::kValidity, dev <= tol::kValidity});
  }
  if (s.checks.separability) {
    const double v = value_of(row, s.protocol == Protocol::ghz ? "N_D_abc_max" : "N_c_ab_max");
    out.push_back({"separability" + label, v, tol::kValidity, v <= tol::kValidity});
  }
  if (s.checks.closed_form) {
    double dev = 0.0;
    for (const auto& [k, v] : row) {
      if (k.rfind("ref_", 0) != 0) continue;
      const std::string sim = k == "ref_p_c" ? "p_c_derived" : k.substr(4);
      dev = std::max(dev, std::abs(value_of(row, sim) - v));
    }
    out.push_back({"closed_form" + label, dev, tol::kValidity, dev <= tol::kValidity});
  }
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto grid = spec.grid();
  std::vector<std::size_t> dims =
      spec.protocol == Protocol::qudit ? spec.dims : std::vector<std::size_t>{2};

  std::map<std::size_t, std::optional<double>> p_c;
  for (std::size_t d : dims) p_c[d] = std::nullopt;
  if (spec.protocol == Protocol::qudit && spec.channel.kind == ChannelKind::depolarizing) {
    detail::parallel_for(dims.size(), spec.threads, [&](std::size_t i) {
      // Distinct keys already exist, so concurrent writes touch different nodes.
      p_c.at(dims[i]) = derived_critical_noise(dims[i]);
    });
  }

  std::vector<Row> rows(dims.size() * grid.size());
  detail::parallel_for(rows.size(), spec.threads, [&](std::size_t i) {
    const RowContext ctx{spec, dims[i / grid.size()], p_c.at(dims[i / grid.size()])};
    const double x = grid[i % grid.size()];
    switch (spec.protocol) {
      case Protocol::two_qubit:
        rows[i] = two_qubit_row(ctx, x);
        break;
      case Protocol::ghz:
        rows[i] = ghz_row(ctx, x);
        break;
      case Protocol::qudit:
        rows[i] = qudit_row(ctx, x);
        break;
    }
  });

  SweepTable table;
  for (const auto& [name, _] : rows.front()) table.columns.push_back(name);
  for (const auto& r : rows) {
    std::vector<double> values;
    values.reserve(r.size());
    for (const auto& [_, v] : r) values.push_back(v);
    table.rows.push_back(std::move(values));
    row_checks(spec, r, table.checks);
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace edss
