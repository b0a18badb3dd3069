#include "edss/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "edss/measures.hpp"

namespace edss {

const DensityOperator& ProtocolTrace::step(const std::string& label) const {
  for (const auto& [name, rho] : steps) {
    if (name == label) return rho;
  }
  throw std::out_of_range("ProtocolTrace: no step labelled '" + label + "'");
}

double ProtocolTrace::partition(const std::string& key) const {
  const auto it = partition_negativities.find(key);
  if (it == partition_negativities.end()) {
    throw std::out_of_range("ProtocolTrace: no partition value '" + key + "'");
  }
  return it->second;
}

namespace {

void require_cpt(const QuditChannel& ch, std::size_t d, const char* who) {
  if (ch.dim() != d) {
    throw std::invalid_argument(std::string(who) + ": channel acts on dimension " +
                                std::to_string(ch.dim()) + ", expected " + std::to_string(d));
  }
  const CptReport r = is_cpt(ch);
  if (!r.cpt) {
    throw std::invalid_argument(std::string(who) + ": channel " + ch.describe() +
                                " is not completely positive and trace preserving (min Choi "
                                "eigenvalue " + std::to_string(r.min_choi_eigenvalue) + ")");
  }
}

struct NamedPartition {
  std::string name;
  std::vector<std::size_t> side_a;
};

void record(ProtocolTrace& t, const std::vector<NamedPartition>& parts) {
  for (const auto& [label, rho] : t.steps) {
    for (const auto& p : parts) {
      t.partition_negativities[p.name + "@" + label] = negativity_value(rho, p.side_a);
    }
  }
}

}  // namespace

ProtocolTrace run_two_qubit(const QuditChannel& ch, Mode mode, const ProtocolOptions& opts) {
  require_cpt(ch, 2, "run_two_qubit");
  ProtocolTrace t;
  t.protocol = Protocol::two_qubit;
  t.mode = mode;

  DensityOperator rho0 = edss_initial_two_qubit();
  DensityOperator rho1 = cnot(rho0, 0, 2);
  DensityOperator rho1p = apply_to_subsystem(ch, rho1, 2);
  DensityOperator rho2p = cnot(rho1p, 1, 2);
  t.steps = {{"rho0", std::move(rho0)},
             {"rho1", std::move(rho1)},
             {"rho1'", std::move(rho1p)},
             {"rho2'", std::move(rho2p)}};
  const DensityOperator& final_state = t.steps.back().second;

  t.branches = measure_computational(final_state, 2);
  const Bipartition ab = Bipartition::of({0}, 2);
  t.average_negativity = average_negativity(t.branches, ab);
  t.average_negativities["a|b"] = t.average_negativity;
  t.success_probability = t.branches[0].probability;
  t.success_negativities["a|b"] =
      t.branches[0].post_state ? negativity(*t.branches[0].post_state, ab).value : 0.0;

  if (mode == Mode::deterministic) {
    DensityOperator out = bob_deterministic_map(final_state);
    const double n = negativity(out, ab).value;
    const double c = concurrence(out);
    t.deterministic_output = DeterministicOutput{std::move(out), n, c};
  }
  if (opts.partition_negativities) {
    record(t, {{"a|bc", {0}}, {"b|ac", {1}}, {"c|ab", {2}}});
  }
  return t;
}

ProtocolTrace run_ghz(const QuditChannel& ch1, const QuditChannel& ch2,
                      const ProtocolOptions& opts) {
  require_cpt(ch1, 2, "run_ghz");
  require_cpt(ch2, 2, "run_ghz");
  ProtocolTrace t;
  t.protocol = Protocol::ghz;
  if (!same_action(ch1, ch2)) {
    t.within_analytic_setting = false;
    t.notes.push_back("channels on d1 and d2 differ; the analytic results assume identical "
                      "independent channels");
  }

  // Register order a, b, c, d1, d2.
  DensityOperator s0 = ghz_initial_state();
  DensityOperator s1 = cnot(cnot(s0, 0, 3), 0, 4);
  DensityOperator s1p = apply_to_subsystem(ch2, apply_to_subsystem(ch1, s1, 3), 4);
  DensityOperator s2p = cnot(cnot(s1p, 1, 3), 2, 4);
  t.steps = {{"sigma0", std::move(s0)},
             {"sigma1", std::move(s1)},
             {"sigma1'", std::move(s1p)},
             {"sigma2'", std::move(s2p)}};

  const std::size_t targets[] = {3, 4};
  t.branches = measure_computational(t.steps.back().second, targets);
  const std::vector<NamedPartition> three = {{"a|bc", {0}}, {"b|ac", {1}}, {"c|ab", {2}}};
  for (const auto& p : three) {
    t.average_negativities[p.name] = average_negativity(t.branches, Bipartition::of(p.side_a, 3));
  }
  t.average_negativity = t.average_negativities["a|bc"];

  const MeasurementBranch& success = t.branches[0];
  t.success_probability = success.probability;
  if (success.post_state) {
    const DensityOperator& s = *success.post_state;
    for (const auto& p : three) t.success_negativities[p.name] = negativity_value(s, p.side_a);
    t.success_negativities["pair:a|b"] = negativity_value(partial_trace(s, {0, 1}), {0});
    t.success_negativities["pair:b|c"] = negativity_value(partial_trace(s, {1, 2}), {0});
    t.success_negativities["pair:a|c"] = negativity_value(partial_trace(s, {0, 2}), {0});
  } else {
    for (const char* k : {"a|bc", "b|ac", "c|ab", "pair:a|b", "pair:b|c", "pair:a|c"}) {
      t.success_negativities[k] = 0.0;
    }
  }

  if (opts.partition_negativities) {
    record(t, {{"a|bcD", {0}}, {"b|acD", {1}}, {"c|abD", {2}}, {"D|abc", {3, 4}}});
  }
  return t;
}

ProtocolTrace run_qudit(std::size_t d, const QuditChannel& ch, const ProtocolOptions& opts) {
  if (d < 2 || d > opts.max_dim) {
    throw std::invalid_argument("run_qudit: d = " + std::to_string(d) + " outside [2, " +
                                std::to_string(opts.max_dim) + "]");
  }
  if (d > 2 && ch.kind() != ChannelKind::depolarizing &&
      ch.kind() != ChannelKind::amplitude_damping) {
    throw std::invalid_argument("run_qudit: for d > 2 only depolarizing and amplitude damping "
                                "channels are supported");
  }
  require_cpt(ch, d, "run_qudit");
  ProtocolTrace t;
  t.protocol = Protocol::qudit;

  DensityOperator o0 = qudit_initial_state(d);
  DensityOperator o1 = cnot(o0, 0, 2);
  DensityOperator o1p = apply_to_subsystem(ch, o1, 2);
  DensityOperator o2p = cnot(o1p, 1, 2, /*inverse=*/true);
  t.steps = {{"omega0", std::move(o0)},
             {"omega1", std::move(o1)},
             {"omega1'", std::move(o1p)},
             {"omega2'", std::move(o2p)}};

  t.branches = measure_computational(t.steps.back().second, 2);
  const Bipartition ab = Bipartition::of({0}, 2);
  t.average_negativity = average_negativity(t.branches, ab);
  t.average_negativities["a|b"] = t.average_negativity;
  t.success_probability = t.branches[0].probability;
  t.success_negativities["a|b"] =
      t.branches[0].post_state ? negativity(*t.branches[0].post_state, ab).value : 0.0;

  if (opts.partition_negativities) {
    record(t, {{"c|ab", {2}}});
    for (const char* label : {"omega1'", "omega2'"}) {
      t.partition_negativities[std::string("a|bc@") + label] =
          negativity_value(t.step(label), {0});
    }
    t.partition_negativities["b|ac@omega2'"] = negativity_value(t.step("omega2'"), {1});
  }
  return t;
}

namespace {

double spread(const std::vector<std::pair<std::string, double>>& chain) {
  double lo = chain.front().second, hi = lo;
  for (const auto& [_, v] : chain) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace

ChainReport verify_identity_chain(const ProtocolTrace& trace, double threshold) {
  ChainReport r;
  r.threshold = threshold;
  auto member = [&](const std::string& key) { return std::make_pair(key, trace.partition(key)); };
  auto average = [&](const std::string& key) {
    return std::make_pair("avg " + key, trace.average_negativities.at(key));
  };
  switch (trace.protocol) {
    case Protocol::two_qubit:
      r.chains.push_back({average("a|b"), member("a|bc@rho1'"), member("a|bc@rho2'"),
                          member("b|ac@rho2'")});
      break;
    case Protocol::ghz:
      r.chains.push_back({average("a|bc"), member("a|bcD@sigma2'"), member("a|bcD@sigma1'")});
      r.chains.push_back({average("b|ac"), member("b|acD@sigma2'")});
      r.chains.push_back({average("c|ab"), member("c|abD@sigma2'")});
      if (trace.within_analytic_setting) {
        r.chains.push_back({member("b|acD@sigma2'"), member("c|abD@sigma2'")});
      }
      break;
    case Protocol::qudit:
      r.chains.push_back({average("a|b"), member("a|bc@omega1'"), member("a|bc@omega2'"),
                          member("b|ac@omega2'")});
      break;
  }
  for (const auto& c : r.chains) r.max_deviation = std::max(r.max_deviation, spread(c));
  r.pass = r.max_deviation <= threshold;
  return r;
}

SeparabilityReport separability_audit(const ProtocolTrace& trace, double threshold) {
  SeparabilityReport r;
  r.threshold = threshold;
  const bool ghz = trace.protocol == Protocol::ghz;
  const std::string name = ghz ? "D|abc" : "c|ab";
  for (const auto& [label, rho] : trace.steps) {
    const std::string key = name + "@" + label;
    double value = 0.0;
    if (auto it = trace.partition_negativities.find(key); it != trace.partition_negativities.end()) {
      value = it->second;
    } else if (ghz) {
      value = negativity_value(rho, {3, 4});
    } else {
      value = negativity_value(rho, {2});
    }
    r.values.emplace_back(key, value);
    r.max_negativity = std::max(r.max_negativity, value);
  }
  r.pass = r.max_negativity <= threshold;
  return r;
}

}  // namespace edss
