#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "edss/measures.hpp"
#include "edss/sweep.hpp"
#include "parallel.hpp"

namespace edss {

CheckSuite parse_check_suite(std::string_view name) {
  if (name == "identity") return CheckSuite::identity;
  if (name == "separability") return CheckSuite::separability;
  if (name == "closed_form") return CheckSuite::closed_form;
  if (name == "all") return CheckSuite::all;
  throw std::invalid_argument("unknown check suite '" + std::string(name) + "'");
}

bool CheckReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& c) { return c.pass; });
}

std::string format_report(const std::vector<CheckLine>& lines) {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << l.name << ' ' << format_number(l.max_deviation) << ' ' << format_number(l.threshold)
       << ' ' << (l.pass ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

std::vector<CanonicalQubitChannel> random_cp_canonical_channels(std::size_t count,
                                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<CanonicalQubitChannel> out;
  while (out.size() < count) {
    const CanonicalQubitChannel c{u(rng), u(rng), u(rng), u(rng)};
    if (is_cpt(canonical_channel(c)).cpt) out.push_back(c);
  }
  return out;
}

namespace {

/// Numbers kept from one protocol run; the traces themselves are dropped.
struct Sample {
  std::string family;
  std::size_t d = 2;
  double x = 0.0;
  double chain = 0.0;
  double separability = 0.0;
  std::map<std::string, double> values;
};

std::vector<double> unit_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

Sample summarize(std::string family, std::size_t d, double x, const ProtocolTrace& t) {
  Sample s{std::move(family), d, x, verify_identity_chain(t).max_deviation,
           separability_audit(t).max_negativity, {}};
  s.values["success_probability"] = t.success_probability;
  for (const auto& [k, v] : t.success_negativities) s.values["success:" + k] = v;
  for (const auto& [k, v] : t.average_negativities) s.values["avg:" + k] = v;
  if (t.deterministic_output) s.values["det"] = t.deterministic_output->negativity;
  return s;
}

struct Job {
  std::string family;
  std::size_t d;
  double x;
  std::function<ProtocolTrace()> run;
};

std::vector<Job> build_jobs(const CheckOptions& opts) {
  std::vector<Job> jobs;
  const auto grid = unit_grid(opts.grid_points);
  for (double x : grid) {
    jobs.push_back({"two_qubit.depolarizing", 2, x,
                    [x] { return run_two_qubit(depolarizing(2, x), Mode::deterministic); }});
    jobs.push_back({"two_qubit.amplitude_damping", 2, x,
                    [x] { return run_two_qubit(amplitude_damping(2, x), Mode::deterministic); }});
    jobs.push_back({"ghz.depolarizing", 2, x, [x] {
                      const auto ch = depolarizing(2, x);
                      return run_ghz(ch, ch);
                    }});
    jobs.push_back({"ghz.amplitude_damping", 2, x, [x] {
                      const auto ch = amplitude_damping(2, x);
                      return run_ghz(ch, ch);
                    }});
  }
  const auto channels = random_cp_canonical_channels(opts.random_channels, opts.seed);
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto c = channels[i];
    jobs.push_back({"two_qubit.random_canonical", 2, static_cast<double>(i),
                    [c] { return run_two_qubit(canonical_channel(c), Mode::probabilistic); }});
  }
  for (std::size_t d = 2; d <= opts.max_d; ++d) {
    ProtocolOptions po;
    po.max_dim = opts.max_d;
    for (double x : grid) {
      jobs.push_back({"qudit.depolarizing", d, x,
                      [d, x, po] { return run_qudit(d, depolarizing(d, x), po); }});
      jobs.push_back({"qudit.amplitude_damping", d, x,
                      [d, x, po] { return run_qudit(d, amplitude_damping(d, x), po); }});
    }
  }
  return jobs;
}

std::string family_key(const Sample& s) {
  return s.family.rfind("qudit", 0) == 0 ? s.family + ".d=" + std::to_string(s.d) : s.family;
}

// Simulated counterpart of each formula, read from a sample of the matching family.
struct Binding {
  Formula id;
  std::string family;
  std::vector<std::string> keys;  // max deviation over all listed keys
};

std::vector<Binding> bindings() {
  using F = Formula;
  return {
      {F::tq_dep_success_probability, "two_qubit.depolarizing", {"success_probability"}},
      {F::tq_dep_success_negativity, "two_qubit.depolarizing", {"success:a|b"}},
      {F::tq_dep_average, "two_qubit.depolarizing", {"avg:a|b"}},
      {F::tq_dep_deterministic, "two_qubit.depolarizing", {"det"}},
      {F::tq_ad_success_probability, "two_qubit.amplitude_damping", {"success_probability"}},
      {F::tq_ad_success_negativity, "two_qubit.amplitude_damping", {"success:a|b"}},
      {F::tq_ad_average, "two_qubit.amplitude_damping", {"avg:a|b"}},
      {F::tq_ad_deterministic, "two_qubit.amplitude_damping", {"det"}},
      {F::ghz_dep_success_probability, "ghz.depolarizing", {"success_probability"}},
      {F::ghz_dep_a_bc, "ghz.depolarizing", {"success:a|bc"}},
      {F::ghz_dep_b_ac, "ghz.depolarizing", {"success:b|ac", "success:c|ab"}},
      {F::ghz_dep_average_a_bc, "ghz.depolarizing", {"avg:a|bc"}},
      {F::ghz_dep_average_b_ac, "ghz.depolarizing", {"avg:b|ac", "avg:c|ab"}},
      {F::ghz_ad_success_probability, "ghz.amplitude_damping", {"success_probability"}},
      {F::ghz_ad_a_bc, "ghz.amplitude_damping", {"success:a|bc"}},
      {F::ghz_ad_b_ac, "ghz.amplitude_damping", {"success:b|ac", "success:c|ab"}},
      {F::ghz_ad_average_a_bc, "ghz.amplitude_damping", {"avg:a|bc"}},
      {F::ghz_ad_average_b_ac, "ghz.amplitude_damping", {"avg:b|ac", "avg:c|ab"}},
      {F::qd_dep_success_probability, "qudit.depolarizing", {"success_probability"}},
      {F::qd_dep_success_negativity, "qudit.depolarizing", {"success:a|b"}},
      {F::qd_dep_average, "qudit.depolarizing", {"avg:a|b"}},
      {F::qd_ad_success_probability, "qudit.amplitude_damping", {"success_probability"}},
      {F::qd_ad_success_negativity, "qudit.amplitude_damping", {"success:a|b"}},
      {F::qd_ad_average, "qudit.amplitude_damping", {"avg:a|b"}},
  };
}

double min_pt_two_qubit(double p, bool deterministic) {
  const ProtocolOptions po{6, false};
  const ProtocolTrace t = run_two_qubit(depolarizing(2, p),
                                        deterministic ? Mode::deterministic : Mode::probabilistic, po);
  const Bipartition ab = Bipartition::of({0}, 2);
  if (deterministic) return min_partial_transpose_eigenvalue(t.deterministic_output->state, ab);
  if (!t.branches[0].post_state) return 0.0;
  return min_partial_transpose_eigenvalue(*t.branches[0].post_state, ab);
}

double min_pt_ghz(double p, std::size_t side) {
  const ProtocolOptions po{6, false};
  const auto ch = depolarizing(2, p);
  const ProtocolTrace t = run_ghz(ch, ch, po);
  if (!t.branches[0].post_state) return 0.0;
  return min_partial_transpose_eigenvalue(*t.branches[0].post_state, Bipartition::of({side}, 3));
}

/// Simulated threshold for each threshold formula.
double simulated_threshold(Formula id, std::size_t d) {
  switch (id) {
    case Formula::tq_dep_critical:
      return bisect_threshold([](double p) { return -min_pt_two_qubit(p, false); });
    case Formula::tq_dep_deterministic_critical:
      return bisect_threshold([](double p) { return -min_pt_two_qubit(p, true); });
    case Formula::ghz_dep_critical_a:
      return bisect_threshold([](double p) { return -min_pt_ghz(p, 0); });
    case Formula::ghz_dep_critical_b:
      return bisect_threshold([](double p) { return -min_pt_ghz(p, 1); });
    case Formula::qd_dep_critical:
      return derived_critical_noise(d);
    default:
      break;
  }
  throw std::invalid_argument("not a threshold formula");
}

}  // namespace

CheckReport run_checks(CheckSuite suite, const CheckOptions& opts) {
  if (opts.grid_points < 2) throw std::invalid_argument("run_checks: grid_points must be >= 2");
  if (opts.max_d < 2) throw std::invalid_argument("run_checks: max_d must be >= 2");
  const bool identity = suite == CheckSuite::identity || suite == CheckSuite::all;
  const bool separability = suite == CheckSuite::separability || suite == CheckSuite::all;
  const bool closed = suite == CheckSuite::closed_form || suite == CheckSuite::all;

  const auto jobs = build_jobs(opts);
  std::vector<Sample> samples(jobs.size());
  detail::parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    samples[i] = summarize(jobs[i].family, jobs[i].d, jobs[i].x, jobs[i].run());
  });

  // Families in first-appearance order.
  std::vector<std::string> families;
  std::map<std::string, std::pair<double, double>> worst;  // chain, separability
  for (const auto& s : samples) {
    const std::string key = family_key(s);
    if (!worst.count(key)) families.push_back(key);
    auto& w = worst[key];
    w.first = std::max(w.first, s.chain);
    w.second = std::max(w.second, s.separability);
  }

  CheckReport report;
  if (identity) {
    for (const auto& f : families) {
      const double v = worst[f].first;
      report.lines.push_back({"identity." + f, v, tol::kValidity, v <= tol::kValidity});
    }
  }
  if (separability) {
    for (const auto& f : families) {
      const double v = worst[f].second;
      report.lines.push_back({"separability." + f, v, tol::kValidity, v <= tol::kValidity});
    }
  }
  if (closed) {
    for (const auto& b : bindings()) {
      double dev = 0.0;
      for (const auto& s : samples) {
        if (s.family != b.family) continue;
        const double ref = opts.reference(b.id, {s.x, s.d});
        for (const auto& k : b.keys) dev = std::max(dev, std::abs(s.values.at(k) - ref));
      }
      const auto& info = formula_info(b.id);
      report.lines.push_back(
          {"closed_form." + std::string(info.name), dev, tol::kValidity, dev <= tol::kValidity});
    }
    // Threshold formulas, one bisection each (per d for the qudit one).
    std::vector<std::pair<Formula, std::size_t>> thresholds = {
        {Formula::tq_dep_critical, 2},
        {Formula::tq_dep_deterministic_critical, 2},
        {Formula::ghz_dep_critical_a, 2},
        {Formula::ghz_dep_critical_b, 2}};
    for (std::size_t d = 2; d <= opts.max_d; ++d) thresholds.emplace_back(Formula::qd_dep_critical, d);
    std::vector<double> found(thresholds.size());
    detail::parallel_for(thresholds.size(), opts.threads, [&](std::size_t i) {
      found[i] = simulated_threshold(thresholds[i].first, thresholds[i].second);
    });
    std::map<Formula, double> threshold_dev;
    std::vector<Formula> order;
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      const auto [id, d] = thresholds[i];
      const double dev = std::abs(found[i] - opts.reference(id, {0.0, d}));
      if (!threshold_dev.count(id)) order.push_back(id);
      threshold_dev[id] = std::max(threshold_dev[id], dev);
    }
    for (Formula id : order) {
      const double dev = threshold_dev[id];
      report.lines.push_back({"closed_form." + std::string(formula_info(id).name), dev,
                              tol::kValidity, dev <= tol::kValidity});
    }
    // The d = 2 qudit run and the two-qubit run share the closed form.
    double cross = 0.0;
    std::map<double, double> tq;
    for (const auto& s : samples) {
      if (s.family == "two_qubit.depolarizing") tq[s.x] = s.values.at("avg:a|b");
    }
    for (const auto& s : samples) {
      if (s.family == "qudit.depolarizing" && s.d == 2) {
        cross = std::max(cross, std::abs(s.values.at("avg:a|b") - tq.at(s.x)));
      }
    }
    report.lines.push_back({"closed_form.qudit_d2_matches_two_qubit", cross, tol::kAlgebraic * 100,
                            cross <= tol::kAlgebraic * 100});
  }
  return report;
}

}  // namespace edss
