#include <doctest.h>

#include <cmath>
#include <random>

#include "edss/channels.hpp"
#include "edss/measures.hpp"
#include "edss/states.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace edss;
using oracle::basis;
using oracle::product;

namespace {

ComplexMatrix proj(std::initializer_list<std::size_t> digits, std::size_t d = 2) {
  std::vector<std::vector<Complex>> f;
  for (auto x : digits) f.push_back(basis(d, x));
  return ComplexMatrix::projector(product(f));
}

ComplexMatrix flip_outer(std::size_t m, std::size_t n, std::size_t copies) {
  std::vector<std::vector<Complex>> km(copies, basis(2, m)), kn(copies, basis(2, n));
  return ComplexMatrix::outer(product(km), product(kn));
}

/// State just before Bob's measurement in the two-qubit protocol.
DensityOperator two_qubit_pre_measurement(const QuditChannel& ch) {
  return cnot(apply_to_subsystem(ch, cnot(edss_initial_two_qubit(), 0, 2), 2), 1, 2);
}

DensityOperator ghz_success(const QuditChannel& ch) {
  auto s = cnot(cnot(ghz_initial_state(), 0, 3), 0, 4);
  s = apply_to_subsystem(ch, apply_to_subsystem(ch, s, 3), 4);
  s = cnot(cnot(s, 1, 3), 2, 4);
  const std::vector<std::size_t> targets{3, 4};
  return *measure_computational(s, targets).front().post_state;
}

void check_separable_cuts(const DensityOperator& rho, std::initializer_list<std::vector<std::size_t>> cuts) {
  for (const auto& side : cuts) CHECK(negativity_value(rho, side) <= 1e-12);
}

}  // namespace

TEST_CASE("initial states are valid and separable across every reported cut") {
  const auto r = edss_initial_two_qubit();
  CHECK(r.validate(1e-12).valid);
  CHECK(r.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  check_separable_cuts(r, {{2}, {0}, {1}});

  const auto s = ghz_initial_state();
  CHECK(s.validate(1e-12).valid);
  check_separable_cuts(s, {{3, 4}});

  for (std::size_t d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const auto q = qudit_initial_state(d);
    CHECK(q.validate(1e-12).valid);
    CHECK(q.dims() == Dims{d, d, d});
    check_separable_cuts(q, {{2}});
  }
  CHECK_THROWS_AS(qudit_initial_state(1), std::invalid_argument);
}

TEST_CASE("initial states match their literal constructions") {
  CHECK(edss_initial_two_qubit().matrix().max_abs_diff(oracle::two_qubit_initial()) <= 1e-14);
  CHECK(ghz_initial_state().matrix().max_abs_diff(oracle::ghz_initial()) <= 1e-14);
  for (std::size_t d = 2; d <= 5; ++d) {
    CHECK(qudit_initial_state(d).matrix().max_abs_diff(oracle::qudit_initial(d)) <= 1e-13);
  }
}

TEST_CASE("first CNOT reproduces the correlated states") {
  CHECK(cnot(edss_initial_two_qubit(), 0, 2).matrix().max_abs_diff(oracle::two_qubit_after_first_cnot()) <=
        1e-12);
  CHECK(cnot(cnot(ghz_initial_state(), 0, 3), 0, 4).matrix().max_abs_diff(oracle::ghz_after_alice_cnots()) <=
        1e-12);
  for (std::size_t d = 2; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(cnot(qudit_initial_state(d), 0, 2).matrix().max_abs_diff(oracle::qudit_after_first_cnot(d)) <= 1e-12);
  }
  // For d = 2 the qudit and qubit constructions meet after the CNOT.
  CHECK(cnot(qudit_initial_state(2), 0, 2).matrix().max_abs_diff(cnot(edss_initial_two_qubit(), 0, 2).matrix()) <=
        1e-12);
  const auto after = cnot(qudit_initial_state(3), 0, 2).matrix();
  CHECK(after(0, 13).real() == doctest::Approx(1.0 / 15));
  CHECK(after(1, 1).real() == doctest::Approx(1.0 / 15));
}

TEST_CASE("reference pure states") {
  CHECK(ghz_state(2, 2).amplitudes == psi_plus().amplitudes);
  CHECK(bell_chi0(2).amplitudes == psi_plus().amplitudes);
  CHECK(ghz_state(3, 2).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ghz_state(4, 3).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(negativity_value(bell_chi0(3).density(), {0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ghz_state(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ghz_state(3, 1), std::invalid_argument);
}

TEST_CASE("generalized CNOT on basis states") {
  auto basis_state = [](std::size_t d, std::size_t i, std::size_t j) {
    return DensityOperator(proj({i, j}, d), {d, d});
  };
  CHECK(cnot(basis_state(2, 1, 1), 0, 1).matrix().max_abs_diff(proj({1, 0})) == 0.0);
  CHECK(cnot(basis_state(3, 2, 2), 0, 1).matrix().max_abs_diff(proj({2, 1}, 3)) == 0.0);
  CHECK(cnot(basis_state(3, 2, 1), 0, 1, true).matrix().max_abs_diff(proj({2, 2}, 3)) == 0.0);
  CHECK(cnot(basis_state(3, 1, 2), 1, 0).matrix().max_abs_diff(proj({0, 2}, 3)) == 0.0);
  const auto rho = testing::random_state({4, 4}, 3);
  CHECK(cnot(cnot(rho, 0, 1), 0, 1, true).matrix().max_abs_diff(rho.matrix()) <= 1e-15);
  CHECK_THROWS_AS(cnot(testing::random_state({2, 3}, 4), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cnot(rho, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cnot(rho, 0, 2), std::out_of_range);
}

TEST_CASE("CNOT conjugates the target block by X powers") {
  const auto r2 = testing::random_state({2}, 5).matrix();
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t n = 0; n < 2; ++n) {
      const auto in = kron(ComplexMatrix::outer(basis(2, m), basis(2, n)), r2);
      const auto xm = m ? pauli_x() : ComplexMatrix::identity(2);
      const auto xn = n ? pauli_x() : ComplexMatrix::identity(2);
      const auto expected = kron(ComplexMatrix::outer(basis(2, m), basis(2, n)), xm * r2 * xn);
      CHECK(cnot(DensityOperator(in, {2, 2}), 0, 1).matrix().max_abs_diff(expected) <= 1e-15);
    }
  }
}

TEST_CASE("measurement of the noiseless pre-measurement state") {
  const auto rho2 = two_qubit_pre_measurement(canonical_channel(1, 1, 1, 0));
  const auto br = measure_computational(rho2, 2);
  REQUIRE(br.size() == 2);
  CHECK(br[0].outcome == std::vector<std::size_t>{0});
  CHECK(br[0].probability == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(br[0].post_state->matrix().max_abs_diff(psi_plus().density().matrix()) <= 1e-14);
  CHECK(br[1].probability == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(br[1].post_state->matrix().max_abs_diff(0.25 * ComplexMatrix::identity(4)) <= 1e-14);
}

TEST_CASE("measurement of a product state and zero-probability branches") {
  const auto ab = testing::random_state({2, 3}, 6);
  const DensityOperator abc(kron(ab.matrix(), proj({0})), {2, 3, 2});
  const auto br = measure_computational(abc, 2);
  CHECK(br[0].probability == doctest::Approx(1.0));
  CHECK(br[0].post_state->matrix().max_abs_diff(ab.matrix()) <= 1e-15);
  CHECK(br[0].post_state->dims() == Dims{2, 3});
  CHECK(br[1].probability == 0.0);
  CHECK_FALSE(br[1].post_state.has_value());

  const auto rho = testing::random_state({2, 3, 2}, 7);
  const std::vector<std::size_t> targets{2, 0};
  const auto multi = measure_computational(rho, targets);
  REQUIRE(multi.size() == 4);
  CHECK(multi[1].outcome == std::vector<std::size_t>{0, 1});
  double total = 0.0;
  for (const auto& b : multi) total += b.probability;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // Outcome (c=0, a=1): probability is the diagonal weight of |1, *, 0>.
  double w = 0.0;
  for (std::size_t b = 0; b < 3; ++b) w += rho.matrix()(6 + 2 * b, 6 + 2 * b).real();
  CHECK(multi[1].probability == doctest::Approx(w));
}

TEST_CASE("branch probabilities and branch states for canonical channels") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  int tested = 0;
  while (tested < 10) {
    const double l1 = u(rng), l2 = u(rng), l3 = u(rng), t = u(rng);
    const auto ch = canonical_channel(l1, l2, l3, t);
    if (!is_cpt(ch).cpt) continue;
    ++tested;
    const auto br = measure_computational(two_qubit_pre_measurement(ch), 2);
    for (std::size_t l = 0; l < 2; ++l) {
      const double sign = l == 0 ? 1.0 : -1.0;
      auto f = [&](std::size_t k) { return 1 + (k % 2 == 0 ? 1.0 : -1.0) * t; };
      const double g = sign * l3, h = 0.5 * (l1 + sign * l2), q = (3 - g) / 6;
      CHECK(br[l].probability == doctest::Approx(q).epsilon(1e-12));
      ComplexMatrix expected(4, 4);
      for (std::size_t m = 0; m < 2; ++m) {
        expected += 2 * h * flip_outer(m, 1 - m, 2);
        expected += 2 * f(l + m) * proj({m, m});
        expected += (f(l + m + 1) - g) * proj({m, (m + 1) % 2});
      }
      CHECK(br[l].post_state->matrix().max_abs_diff((1 / (12 * q)) * expected) <= 1e-12);
    }
  }
}

TEST_CASE("branch states under depolarizing noise") {
  for (double p : {0.0, 0.2, 0.5, 0.9}) {
    CAPTURE(p);
    const auto br = measure_computational(two_qubit_pre_measurement(depolarizing(2, p)), 2);
    CHECK(br[0].probability == doctest::Approx((2 + p) / 6));
    ComplexMatrix r0(4, 4), r1(4, 4);
    for (std::size_t m = 0; m < 2; ++m) {
      const std::size_t n = 1 - m;
      r0 += proj({m, m}) + (p / 2) * proj({m, n}) + (1 - p) * flip_outer(m, n, 2);
      r1 += proj({m, m}) + ((2 - p) / 2) * proj({m, n});
    }
    CHECK(br[0].post_state->matrix().max_abs_diff((1 / (2 + p)) * r0) <= 1e-13);
    CHECK(br[1].post_state->matrix().max_abs_diff((1 / (4 - p)) * r1) <= 1e-13);
  }
}

TEST_CASE("branch states under amplitude damping") {
  for (double g : {0.0, 0.3, 0.8}) {
    CAPTURE(g);
    const auto br = measure_computational(two_qubit_pre_measurement(amplitude_damping(2, g)), 2);
    ComplexMatrix r0 = (1 + g) * proj({0, 0}) + (1 - g) * proj({1, 1}) + g * proj({1, 0});
    r0 += std::sqrt(1 - g) * (flip_outer(0, 1, 2) + flip_outer(1, 0, 2));
    const auto i4 = ComplexMatrix::identity(4);
    const ComplexMatrix r1 = i4 - g * (kron(ComplexMatrix::identity(2), proj({0})) - proj({1, 1}));
    CHECK(br[0].probability == doctest::Approx((2 + g) / 6));
    CHECK(br[0].post_state->matrix().max_abs_diff((1 / (2 + g)) * r0) <= 1e-13);
    CHECK(br[1].post_state->matrix().max_abs_diff((1 / (4 - g)) * r1) <= 1e-13);
  }
}

TEST_CASE("Bob's deterministic map") {
  ComplexMatrix sum(4, 4);
  for (const auto& a : bob_deterministic_kraus()) sum += a.adjoint() * a;
  CHECK(sum.max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

  const auto i2 = ComplexMatrix::identity(2);
  const auto i_0 = kron(i2, proj({0}));
  const auto noiseless = bob_deterministic_map(two_qubit_pre_measurement(canonical_channel(1, 1, 1, 0)));
  CHECK(noiseless.matrix().max_abs_diff((1.0 / 3) * (psi_plus().density().matrix() + i_0)) <= 1e-14);

  const double p = 0.2;
  const auto dep = bob_deterministic_map(two_qubit_pre_measurement(depolarizing(2, p)));
  const ComplexMatrix chi = ((1 - p) / 3) * (psi_plus().density().matrix() + i_0) +
                            (p / 12) * (proj({0, 0}) + proj({1, 1}) + ComplexMatrix::identity(4) + 3.0 * i_0);
  CHECK(dep.matrix().max_abs_diff(chi) <= 1e-14);

  const double g = 0.4;
  const auto ad = bob_deterministic_map(two_qubit_pre_measurement(amplitude_damping(2, g)));
  const ComplexMatrix chi_ad =
      (1.0 / 6) * ((1 + g) * proj({0, 0}) + (1 - g) * proj({1, 1}) + 2 * g * proj({1, 0}) + (2 - g) * i_0 +
                   std::sqrt(1 - g) * (flip_outer(0, 1, 2) + flip_outer(1, 0, 2)));
  CHECK(ad.matrix().max_abs_diff(chi_ad) <= 1e-14);
  CHECK_THROWS_AS(bob_deterministic_map(testing::random_state({2, 2}, 1)), std::invalid_argument);
}

TEST_CASE("GHZ success states") {
  for (double p : {0.0, 0.2, 0.6}) {
    CAPTURE(p);
    const auto s = ghz_success(depolarizing(2, p));
    ComplexMatrix m = 4 * (1 - p) * (1 - p) * ghz_state(3, 2).density().matrix();
    for (std::size_t k = 0; k < 2; ++k) {
      m += ((8 * p - 5 * p * p) / 2) * proj({k, k, k});
      m += p * (1 - p) * kron(ComplexMatrix::identity(2), proj({k, 1 - k}));
    }
    m += (p * p / 2) * ComplexMatrix::identity(8);
    CHECK(s.matrix().max_abs_diff((1 / (4 + 4 * p - p * p)) * m) <= 1e-13);
  }
  for (double g : {0.0, 0.3, 0.7, 1.0}) {
    CAPTURE(g);
    const auto s = ghz_success(amplitude_damping(2, g));
    ComplexMatrix m(8, 8);
    for (std::size_t k = 0; k < 2; ++k) {
      m += (1 - g) * flip_outer(k, 1 - k, 3);
      m += std::pow(1 + (k == 0 ? g : -g), 2) * proj({k, k, k});
      m += g * (1 - g) * proj({1, k, (k + 1) % 2});
    }
    m += g * g * proj({1, 0, 0});
    CHECK(s.matrix().max_abs_diff((1 / (2 + 2 * g + g * g)) * m) <= 1e-13);
  }
}
