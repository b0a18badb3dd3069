#include <doctest.h>

#include <cmath>

#include "edss/channels.hpp"
#include "edss/eigen.hpp"
#include "edss/states.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace edss;

namespace {

ComplexMatrix bloch(double x, double y, double z) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m += x * pauli_x();
  m += y * pauli_y();
  m += z * pauli_z();
  return 0.5 * m;
}

ComplexMatrix projector(std::size_t d, std::size_t i) {
  ComplexMatrix m(d, d);
  m(i, i) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("canonical channel acts on the Bloch vector") {
  const auto rho = testing::random_state({2}, 1).matrix();
  CHECK(canonical_channel(1, 1, 1, 0).apply(rho).max_abs_diff(rho) <= 1e-15);

  const double p = 0.37;
  const auto dep = canonical_channel(1 - p, 1 - p, 1 - p, 0).apply(rho);
  CHECK(dep.max_abs_diff((1 - p) * rho + (p / 2) * ComplexMatrix::identity(2)) <= 1e-15);

  const double l1 = 0.3, l2 = -0.2, l3 = 0.5, t = 0.1;
  const auto out = canonical_channel(l1, l2, l3, t).apply(bloch(0.4, 0.5, -0.6));
  CHECK(out.max_abs_diff(bloch(l1 * 0.4, l2 * 0.5, l3 * -0.6 + t)) <= 1e-15);
}

TEST_CASE("canonical amplitude damping equals its Kraus form") {
  const double g = 0.3;
  const auto canon = canonical_channel(std::sqrt(1 - g), std::sqrt(1 - g), 1 - g, g);
  const auto one = canon.apply(projector(2, 1));
  CHECK(one.max_abs_diff((1 - g) * projector(2, 1) + g * projector(2, 0)) <= 1e-15);
  CHECK(same_action(canon, amplitude_damping(2, g)));
  CHECK(same_action(canonical_channel(0.6, 0.6, 0.6, 0), depolarizing(2, 0.4)));
}

TEST_CASE("depolarizing channel") {
  const auto rho = testing::random_state({3}, 2).matrix();
  CHECK(depolarizing(3, 0).apply(rho).max_abs_diff(rho) <= 1e-15);
  CHECK(depolarizing(3, 1).apply(rho).max_abs_diff((1.0 / 3) * ComplexMatrix::identity(3)) <= 1e-15);
  const std::vector<double> expected{2.0 / 3, 1.0 / 6, 1.0 / 6};
  CHECK(depolarizing(3, 0.5).apply(projector(3, 0)).max_abs_diff(ComplexMatrix::diagonal(expected)) <=
        1e-15);
  CHECK(depolarizing(4, 0.2).noise() == 0.2);
  CHECK_THROWS_AS(depolarizing(2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(2, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(1, 0.1), std::invalid_argument);
}

TEST_CASE("amplitude damping channel") {
  const auto rho = testing::random_state({4}, 3).matrix();
  CHECK(amplitude_damping(4, 0).apply(rho).max_abs_diff(rho) <= 1e-15);
  CHECK(amplitude_damping(4, 1).apply(rho).max_abs_diff(projector(4, 0)) <= 1e-15);
  const double s = 1 / std::sqrt(2.0);
  const auto plus = ComplexMatrix::projector(std::vector<Complex>{s, s});
  CHECK(std::abs(amplitude_damping(2, 0.36).apply(plus)(0, 1) - 0.4) <= 1e-15);
  const auto ad3 = amplitude_damping(3, 0.25);
  const auto& k = ad3.kraus();
  REQUIRE(k.has_value());
  ComplexMatrix sum(3, 3);
  for (const auto& op : k->kraus_ops) sum += op.adjoint() * op;
  CHECK(sum.max_abs_diff(ComplexMatrix::identity(3)) <= 1e-15);
  CHECK_THROWS_AS(amplitude_damping(2, 1.5), std::invalid_argument);
}

TEST_CASE("explicit Kraus channels") {
  const double g = 0.45;
  ComplexMatrix e0(2, 2), e1(2, 2);
  e0(0, 0) = 1;
  e0(1, 1) = std::sqrt(1 - g);
  e1(0, 1) = std::sqrt(g);
  const auto ch = kraus_channel({2, {e0, e1}});
  CHECK(ch.kind() == ChannelKind::kraus);
  CHECK(same_action(ch, amplitude_damping(2, g)));
  CHECK_THROWS_AS(kraus_channel({2, {}}), std::invalid_argument);
  CHECK_THROWS_AS(kraus_channel({3, {e0}}), std::invalid_argument);
}

TEST_CASE("channel on one subsystem") {
  const auto rho = testing::random_state({2, 3, 2}, 4);
  const auto ch = amplitude_damping(3, 0.6);
  const auto out = apply_to_subsystem(ch, rho, 1);
  ComplexMatrix expected(12, 12);
  for (const auto& k : ch.kraus()->kraus_ops) {
    const auto big = kron(kron(ComplexMatrix::identity(2), k), ComplexMatrix::identity(2));
    expected += big * rho.matrix() * big.adjoint();
  }
  CHECK(out.matrix().max_abs_diff(expected) <= 1e-14);
  CHECK_THROWS_AS(apply_to_subsystem(ch, rho, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_to_subsystem(ch, rho, 3), std::out_of_range);
  const auto id = canonical_channel(1, 1, 1, 0);
  CHECK(apply_to_subsystem(id, rho, 2).matrix().max_abs_diff(rho.matrix()) <= 1e-15);
}

TEST_CASE("noise on the exchange qubit gives the three-term state") {
  const double p = 0.3, l = 1 - p, t = 0.0;
  const auto rho1 = oracle::two_qubit_after_first_cnot();
  const auto out = apply_to_subsystem(depolarizing(2, p), DensityOperator(rho1, {2, 2, 2}), 2);
  // 1/6 sum_m Pi_mm (x) (I + t Z) + 1/12 sum_{m!=n} Pi_mn (x) (I + (t + (-1)^m l) Z)
  //   + 1/12 sum_{m!=n} |mm><nn| (x) (l X + i (-1)^m l Y)
  ComplexMatrix expected(8, 8);
  const auto i2 = ComplexMatrix::identity(2);
  for (std::size_t m = 0; m < 2; ++m) {
    const double sign = m == 0 ? 1.0 : -1.0;
    const std::vector<Complex> mm = oracle::product({oracle::basis(2, m), oracle::basis(2, m)});
    expected += kron(ComplexMatrix::projector(mm), (1.0 / 6) * (i2 + t * pauli_z()));
    const std::size_t n = 1 - m;
    const std::vector<Complex> mn = oracle::product({oracle::basis(2, m), oracle::basis(2, n)});
    expected += kron(ComplexMatrix::projector(mn), (1.0 / 12) * (i2 + (t + sign * l) * pauli_z()));
    const std::vector<Complex> nn = oracle::product({oracle::basis(2, n), oracle::basis(2, n)});
    expected += kron(ComplexMatrix::outer(mm, nn),
                     (1.0 / 12) * (l * pauli_x() + Complex(0, sign * l) * pauli_y()));
  }
  CHECK(out.matrix().max_abs_diff(expected) <= 1e-12);
}

TEST_CASE("noise on both GHZ ancillas gives the printed block structure") {
  const double g = 0.35, l = std::sqrt(1 - g), l3 = 1 - g, t = g;
  const auto sigma1 = DensityOperator(oracle::ghz_after_alice_cnots(), {2, 2, 2, 2, 2});
  const auto ch = amplitude_damping(2, g);
  const auto out = apply_to_subsystem(ch, apply_to_subsystem(ch, sigma1, 3), 4);
  auto e_proj = [&](std::size_t m) {
    return 0.5 * (ComplexMatrix::identity(2) + (t + (m == 0 ? l3 : -l3)) * pauli_z());
  };
  auto e_coh = [&](std::size_t m) {
    return 0.5 * (l * pauli_x() + Complex(0, m == 0 ? l : -l) * pauli_y());
  };
  auto cube = [](std::size_t m, std::size_t n) {
    const auto km = oracle::product({oracle::basis(2, m), oracle::basis(2, m), oracle::basis(2, m)});
    const auto kn = oracle::product({oracle::basis(2, n), oracle::basis(2, n), oracle::basis(2, n)});
    return ComplexMatrix::outer(km, kn);
  };
  const auto e_id = ch.apply(ComplexMatrix::identity(2));
  ComplexMatrix expected(32, 32);
  for (std::size_t m = 0; m < 2; ++m) {
    const std::size_t n = 1 - m;
    expected += (1.0 / 14) * kron(cube(m, n), kron(e_coh(m), e_coh(m)));
    expected += (1.0 / 14) * kron(cube(m, m), kron(e_id, e_id) - kron(e_proj(m), e_proj(m)));
    const auto pm = oracle::basis(2, m);
    expected += (1.0 / 14) * kron(kron(ComplexMatrix::projector(pm), ComplexMatrix::identity(4)),
                                  kron(e_proj(m), e_proj(m)));
  }
  CHECK(out.matrix().max_abs_diff(expected) <= 1e-12);
}

TEST_CASE("choi matrices") {
  const auto id = choi_matrix(canonical_channel(1, 1, 1, 0));
  CHECK(id.max_abs_diff(2.0 * psi_plus().density().matrix()) <= 1e-15);
  CHECK(choi_matrix(depolarizing(2, 1)).max_abs_diff(0.5 * ComplexMatrix::identity(4)) <= 1e-15);
  const auto ad = choi_matrix(amplitude_damping(2, 0.3));
  CHECK(ad.trace().real() == doctest::Approx(2.0));
  CHECK(hermitian_eigenvalues(ad).front() >= -1e-15);
}

TEST_CASE("complete positivity") {
  const auto bad = is_cpt(canonical_channel(1, 1, -1, 0));
  CHECK_FALSE(bad.cpt);
  CHECK(bad.min_choi_eigenvalue < -0.5);
  CHECK(is_cpt(depolarizing(5, 0.7)).cpt);
  CHECK(is_cpt(amplitude_damping(6, 0.9)).cpt);
  // (l1-l2)^2 = 0 exceeds (1-l3)^2 - t^2 = -0.08.
  const auto r = is_cpt(canonical_channel(0.9, 0.9, 0.9, 0.3));
  CHECK_FALSE(r.cpt);
  CHECK(r.trace_preservation_defect <= 1e-15);
  // Non-trace-preserving Kraus set.
  ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  const auto lossy = is_cpt(kraus_channel({2, {half}}));
  CHECK_FALSE(lossy.cpt);
  CHECK(lossy.trace_preservation_defect == doctest::Approx(0.75));
}

TEST_CASE("extreme points") {
  CHECK(is_extreme_point({std::sqrt(0.6), std::sqrt(0.6), 0.6, 0.4}));
  CHECK_FALSE(is_extreme_point({0.5, 0.5, 0.5, 0.0}));
  CHECK(is_extreme_point({1, 1, 1, 0}));
  CHECK(is_extreme_point(*amplitude_damping(2, 0.4).canonical()));
  CHECK_FALSE(depolarizing(3, 0.4).canonical().has_value());
}

TEST_CASE("channel kind names round trip") {
  for (auto k : {ChannelKind::canonical, ChannelKind::depolarizing, ChannelKind::amplitude_damping,
                 ChannelKind::kraus}) {
    CHECK(parse_channel_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_channel_kind("bitflip"), std::invalid_argument);
  CHECK(depolarizing(2, 0.25).describe().find("depolarizing") != std::string::npos);
}
