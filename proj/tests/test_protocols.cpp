#include <doctest.h>

#include <cmath>

#include "edss/closed_form.hpp"
#include "edss/measures.hpp"
#include "edss/protocols.hpp"

using namespace edss;

namespace {

double branch_average(const ProtocolTrace& t, std::initializer_list<std::size_t> side) {
  double sum = 0.0;
  for (const auto& b : t.branches) {
    if (b.post_state) sum += b.probability * negativity_value(*b.post_state, side);
  }
  return sum;
}

}  // namespace

TEST_CASE("two-qubit protocol without noise") {
  const auto t = run_two_qubit(canonical_channel(1, 1, 1, 0), Mode::probabilistic);
  CHECK(t.average_negativity == doctest::Approx(1.0 / 3));
  CHECK(t.success_probability == doctest::Approx(1.0 / 3));
  CHECK(t.branches.front().post_state->matrix().max_abs_diff(psi_plus().density().matrix()) <= 1e-14);
  CHECK_FALSE(t.deterministic_output.has_value());
  for (const char* label : {"rho0", "rho1", "rho1'", "rho2'"}) CHECK(t.step(label).validate().valid);
  CHECK_THROWS_AS(t.step("rho3"), std::out_of_range);
  CHECK_THROWS_AS(t.partition("a|b@nowhere"), std::out_of_range);
}

TEST_CASE("two-qubit deterministic values") {
  const auto dep = run_two_qubit(depolarizing(2, 0.2), Mode::deterministic);
  CHECK(dep.deterministic_output->negativity == doctest::Approx((std::sqrt(24.68) - 4.2) / 12));
  CHECK(dep.deterministic_output->negativity == doctest::Approx(0.063991).epsilon(1e-5));
  const auto ad = run_two_qubit(amplitude_damping(2, 0.0), Mode::deterministic);
  CHECK(ad.deterministic_output->negativity == doctest::Approx((std::sqrt(2.0) - 1) / 3));
  const auto clean = run_two_qubit(depolarizing(2, 0.0), Mode::deterministic);
  CHECK(ad.deterministic_output->negativity == doctest::Approx(clean.deterministic_output->negativity));
  // Deterministic runs still carry the measurement branches.
  CHECK(dep.branches.size() == 2);
}

TEST_CASE("average negativity is the branch-weighted sum") {
  const auto ch = canonical_channel(0.5, 0.5, 0.5, 0.1);
  REQUIRE(is_cpt(ch).cpt);
  const auto t = run_two_qubit(ch, Mode::probabilistic);
  CHECK(std::abs(t.average_negativity - branch_average(t, {0})) <= 1e-12);
  const auto g = run_ghz(amplitude_damping(2, 0.3), amplitude_damping(2, 0.3));
  CHECK(std::abs(g.average_negativities.at("b|ac") - branch_average(g, {1})) <= 1e-12);
  const auto q = run_qudit(4, depolarizing(4, 0.3));
  CHECK(std::abs(q.average_negativity - branch_average(q, {0})) <= 1e-12);
  CHECK(q.branches.size() == 4);
}

TEST_CASE("partition keys") {
  const auto t = run_two_qubit(depolarizing(2, 0.1), Mode::probabilistic);
  for (const char* step : {"rho0", "rho1", "rho1'", "rho2'"}) {
    for (const char* side : {"a|bc", "b|ac", "c|ab"}) CHECK(t.partition_negativities.count(std::string(side) + "@" + step));
  }
  const auto g = run_ghz(depolarizing(2, 0.1), depolarizing(2, 0.1));
  for (const char* step : {"sigma0", "sigma1", "sigma1'", "sigma2'"}) {
    for (const char* side : {"a|bcD", "b|acD", "c|abD", "D|abc"}) {
      CHECK(g.partition_negativities.count(std::string(side) + "@" + step));
    }
  }
  const auto q = run_qudit(3, depolarizing(3, 0.1));
  for (const char* key : {"c|ab@omega0", "c|ab@omega2'", "a|bc@omega1'", "a|bc@omega2'", "b|ac@omega2'"}) {
    CHECK(q.partition_negativities.count(key));
  }
  ProtocolOptions off;
  off.partition_negativities = false;
  CHECK(run_two_qubit(depolarizing(2, 0.1), Mode::probabilistic, off).partition_negativities.empty());
}

TEST_CASE("GHZ protocol") {
  const auto id = canonical_channel(1, 1, 1, 0);
  const auto t = run_ghz(id, id);
  REQUIRE(t.branches.size() == 4);
  CHECK(t.branches[0].outcome == std::vector<std::size_t>{0, 0});
  CHECK(t.branches[3].outcome == std::vector<std::size_t>{1, 1});
  CHECK(t.success_probability == doctest::Approx(1.0 / 7));
  CHECK(t.branches[0].post_state->matrix().max_abs_diff(ghz_state(3, 2).density().matrix()) <= 1e-14);
  CHECK(t.success_negativities.at("a|bc") == doctest::Approx(1.0));
  CHECK(t.success_negativities.at("b|ac") == doctest::Approx(1.0));
  for (const char* k : {"pair:a|b", "pair:b|c", "pair:a|c"}) CHECK(t.success_negativities.at(k) <= 1e-12);

  const auto dep = run_ghz(depolarizing(2, 0.2), depolarizing(2, 0.2));
  CHECK(dep.success_negativities.at("a|bc") == doctest::Approx(2.52 / 4.76));
  CHECK(dep.success_negativities.at("b|ac") == doctest::Approx(2.2 / 4.76));

  for (double g : {0.0, 0.4, 1.0}) {
    const auto ad = run_ghz(amplitude_damping(2, g), amplitude_damping(2, g));
    CHECK(ad.success_probability == doctest::Approx((2 + 2 * g + g * g) / 14));
  }
  const auto full = run_ghz(amplitude_damping(2, 1.0), amplitude_damping(2, 1.0));
  CHECK(full.success_negativities.at("a|bc") <= 1e-12);

  const auto mixed = run_ghz(depolarizing(2, 0.1), amplitude_damping(2, 0.2));
  CHECK_FALSE(mixed.within_analytic_setting);
  CHECK(dep.within_analytic_setting);
}

TEST_CASE("qudit protocol") {
  const auto clean = run_qudit(3, depolarizing(3, 0.0));
  CHECK(clean.average_negativity == doctest::Approx(0.2));
  CHECK(clean.success_probability == doctest::Approx(0.2));
  CHECK(clean.branches[0].post_state->matrix().max_abs_diff(bell_chi0(3).density().matrix()) <= 1e-13);
  CHECK(run_qudit(3, depolarizing(3, 0.8)).average_negativity <= 1e-12);
  CHECK(run_qudit(3, amplitude_damping(3, 0.4)).average_negativity == doctest::Approx(0.12));
  CHECK(clean.partition("c|ab@omega1") <= 1e-12);
}

TEST_CASE("protocol input errors") {
  const auto bad = canonical_channel(1, 1, -1, 0);
  CHECK_THROWS_AS(run_two_qubit(bad, Mode::probabilistic), std::invalid_argument);
  CHECK_THROWS_AS(run_ghz(bad, depolarizing(2, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(run_two_qubit(depolarizing(3, 0.1), Mode::probabilistic), std::invalid_argument);
  CHECK_THROWS_AS(run_qudit(3, depolarizing(2, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(run_qudit(7, depolarizing(7, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(run_qudit(1, depolarizing(2, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(run_qudit(3, kraus_channel({3, {ComplexMatrix::identity(3)}})), std::invalid_argument);
  ProtocolOptions wide;
  wide.max_dim = 7;
  wide.partition_negativities = false;
  CHECK(run_qudit(7, depolarizing(7, 0.1), wide).branches.size() == 7);
  // d = 2 accepts any CPT qubit channel.
  CHECK_NOTHROW(run_qudit(2, canonical_channel(0.5, 0.5, 0.5, 0.1)));
}

TEST_CASE("identity chains") {
  const auto t = run_two_qubit(depolarizing(2, 0.3), Mode::probabilistic);
  const auto r = verify_identity_chain(t);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-10);
  for (const auto& chain : r.chains) {
    for (const auto& [name, v] : chain) CHECK(v == doctest::Approx(1.1 / 6));
  }
  const auto g = run_ghz(amplitude_damping(2, 0.5), amplitude_damping(2, 0.5));
  CHECK(std::abs(g.partition("b|acD@sigma2'") - g.partition("c|abD@sigma2'")) <= 1e-10);
  CHECK(std::abs(g.partition("b|acD@sigma2'") - g.average_negativities.at("b|ac")) <= 1e-10);
  CHECK(verify_identity_chain(g).pass);
  const auto q = run_qudit(4, depolarizing(4, 0.5));
  CHECK(std::abs(q.partition("a|bc@omega1'") - q.average_negativity) <= 1e-10);
  CHECK(verify_identity_chain(q).pass);
  // A zero threshold still passes only when every deviation is exactly zero.
  CHECK(verify_identity_chain(t, -1.0).pass == false);
}

TEST_CASE("separability audit") {
  for (double p : {0.0, 0.4, 1.0}) {
    const auto t = run_two_qubit(depolarizing(2, p), Mode::probabilistic);
    const auto r = separability_audit(t);
    CHECK(r.pass);
    CHECK(r.values.size() == 4);
    for (const auto& [k, v] : r.values) CHECK(v <= 1e-12);
  }
  const auto g = run_ghz(amplitude_damping(2, 0.6), amplitude_damping(2, 0.6));
  CHECK(separability_audit(g).values.size() == 4);
  CHECK(separability_audit(g).max_negativity <= 1e-12);
  ProtocolOptions off;
  off.partition_negativities = false;
  const auto q = run_qudit(3, depolarizing(3, 0.0), off);
  CHECK(separability_audit(q).pass);
}

TEST_CASE("closed forms") {
  CHECK(closed_form(Formula::tq_dep_average, {0.0}) == doctest::Approx(1.0 / 3));
  CHECK(closed_form(Formula::ghz_dep_a_bc, {2.0 / 3}) == doctest::Approx(0.0));
  CHECK(closed_form(Formula::tq_dep_average, {0.9}) == 0.0);
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    CHECK(closed_form(Formula::qd_dep_average, {p, 2}) == doctest::Approx(closed_form(Formula::tq_dep_average, {p})));
  }
  CHECK(closed_form(Formula::qd_dep_critical, {0.0, 10}) == doctest::Approx(10.0 / 11));
  CHECK_THROWS_AS(closed_form(Formula::tq_ad_average, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form(Formula::qd_ad_average, {0.5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("no_such_formula"), std::invalid_argument);
  for (const auto& f : all_formulas()) {
    CHECK(parse_formula(f.name) == f.id);
    CHECK(&formula_info(f.id) == &f);
    for (double x = 0.0; x <= 1.0; x += 0.125) {
      for (std::size_t d : {2u, 3u, 7u}) CHECK(std::isfinite(closed_form(f.id, {x, d})));
    }
  }
}

TEST_CASE("protocol and mode names") {
  for (auto p : {Protocol::two_qubit, Protocol::ghz, Protocol::qudit}) CHECK(parse_protocol(to_string(p)) == p);
  CHECK(parse_mode("prob") == Mode::probabilistic);
  CHECK(parse_mode("det") == Mode::deterministic);
  CHECK(parse_mode(to_string(Mode::deterministic)) == Mode::deterministic);
  CHECK_THROWS_AS(parse_protocol("w_state"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mode("maybe"), std::invalid_argument);
}
