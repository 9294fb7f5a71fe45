#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "unruhsim/channels.hpp"
#include "unruhsim/rindler.hpp"

using namespace unruhsim;

namespace {

DensityMatrix bell_state() { return shared_state(0.0); }

}  // namespace

TEST_CASE("make_channel: amplitude damping operators at p1 = 0.5") {
  const auto ch = make_channel(ChannelKind::AmplitudeDamping, 0.5);
  REQUIRE(ch.ops.size() == 2);
  const double s = std::sqrt(0.5);
  CHECK(max_abs_diff(ch.ops[0], ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, s}})) == 0.0);
  CHECK(max_abs_diff(ch.ops[1], ComplexMatrix::from_rows({{0.0, s}, {0.0, 0.0}})) == 0.0);
}

TEST_CASE("make_channel: operator counts per kind") {
  CHECK(make_channel(ChannelKind::AmplitudeDamping, 0.3).ops.size() == 2);
  CHECK(make_channel(ChannelKind::PhaseDamping, 0.3).ops.size() == 2);
  CHECK(make_channel(ChannelKind::Depolarizing, 0.3).ops.size() == 4);
}

TEST_CASE("make_channel: p outside [0, 1] is a domain error") {
  CHECK_THROWS_AS(make_channel(ChannelKind::PhaseDamping, -0.01), std::domain_error);
  CHECK_THROWS_AS(make_channel(ChannelKind::Depolarizing, 1.01), std::domain_error);
  CHECK_THROWS_AS(make_channel(ChannelKind::AmplitudeDamping,
                               std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("completeness holds for every kind and parameter") {
  std::mt19937 gen(55);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    for (auto kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                      ChannelKind::Depolarizing}) {
      const double p = u01(gen);
      const auto ch = make_channel(kind, p);
      CHECK(ch.completeness_defect() <= 1e-12);
      CHECK(lift_local(ch, ChannelPlacement::AliceLocal).completeness_defect() <= 1e-12);
      CHECK(lift_local(ch, ChannelPlacement::RobLocal).completeness_defect() <= 1e-12);
      CHECK(lift_collective(ch).completeness_defect() <= 1e-13);
    }
  }
  // depolarizing closure is parameter-independent: (1-p) + 3*(p/3) = 1
  CHECK(make_channel(ChannelKind::Depolarizing, 0.6).completeness_defect() <= 1e-15);
}

TEST_CASE("p = 0 channels act as exact identities") {
  std::mt19937 gen(56);
  for (auto kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                    ChannelKind::Depolarizing}) {
    const auto alice = lift_local(make_channel(kind, 0.0), ChannelPlacement::AliceLocal);
    const auto coll = lift_collective(make_channel(kind, 0.0));
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = testsup::random_density(gen);
      CHECK(max_abs_diff(apply(alice, rho).mat(), rho.mat()) <= 1e-14);
      CHECK(max_abs_diff(apply(coll, rho).mat(), rho.mat()) <= 1e-14);
    }
  }
}

TEST_CASE("lift_local: identity channel lifts to the 4x4 identity") {
  const auto ch = lift_local(make_channel(ChannelKind::PhaseDamping, 0.0),
                             ChannelPlacement::AliceLocal);
  CHECK(max_abs_diff(ch.ops[0], ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("lift_local: keeps the operator count") {
  const auto dep = make_channel(ChannelKind::Depolarizing, 0.4);
  CHECK(lift_local(dep, ChannelPlacement::AliceLocal).ops.size() == 4);
  CHECK(lift_local(dep, ChannelPlacement::RobLocal).ops.size() == 4);
}

TEST_CASE("lift_local: refuses an already lifted channel") {
  const auto lifted = lift_local(make_channel(ChannelKind::AmplitudeDamping, 0.2),
                                 ChannelPlacement::RobLocal);
  CHECK_THROWS_AS(lift_local(lifted, ChannelPlacement::AliceLocal), std::invalid_argument);
  CHECK_THROWS_AS(lift_local(make_channel(ChannelKind::AmplitudeDamping, 0.2),
                             ChannelPlacement::Collective),
                  std::invalid_argument);
}

TEST_CASE("lift_local: full amplitude decay on Rob turns the Bell pair into a product state") {
  const auto ch = lift_local(make_channel(ChannelKind::AmplitudeDamping, 1.0),
                             ChannelPlacement::RobLocal);
  const auto rho = apply(ch, bell_state());
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;  // |00><00|
  expected(2, 2) = 0.5;  // |10><10|
  CHECK(max_abs_diff(rho.mat(), expected) < 1e-15);
}

TEST_CASE("lift_collective: operator counts square") {
  CHECK(lift_collective(make_channel(ChannelKind::AmplitudeDamping, 0.7)).ops.size() == 4);
  CHECK(lift_collective(make_channel(ChannelKind::Depolarizing, 0.7)).ops.size() == 16);
  const auto lifted = lift_local(make_channel(ChannelKind::AmplitudeDamping, 0.2),
                                 ChannelPlacement::RobLocal);
  CHECK_THROWS_AS(lift_collective(lifted), std::invalid_argument);
}

TEST_CASE("apply: single-qubit amplitude damping moves |1><1| population") {
  // Rob-local action on I/2 (x) |1><1|: |1><1| -> diag(p1, 1 - p1)
  const double p1 = 0.35;
  ComplexMatrix m(4);
  m(1, 1) = 0.5;  // |01><01|
  m(3, 3) = 0.5;  // |11><11|
  const auto ch = lift_local(make_channel(ChannelKind::AmplitudeDamping, p1),
                             ChannelPlacement::RobLocal);
  const auto rho = apply(ch, DensityMatrix(m));
  CHECK(rho(0, 0).real() == doctest::Approx(0.5 * p1).epsilon(1e-14));
  CHECK(rho(1, 1).real() == doctest::Approx(0.5 * (1 - p1)).epsilon(1e-14));
  CHECK(rho(2, 2).real() == doctest::Approx(0.5 * p1).epsilon(1e-14));
  CHECK(rho(3, 3).real() == doctest::Approx(0.5 * (1 - p1)).epsilon(1e-14));
}

TEST_CASE("apply: phase damping keeps diagonals and shrinks coherences by sqrt(1-p2)") {
  const double p2 = 0.6;
  const auto rho0 = bell_state();
  const auto ch = lift_local(make_channel(ChannelKind::PhaseDamping, p2),
                             ChannelPlacement::AliceLocal);
  const auto rho = apply(ch, rho0);
  CHECK(rho(0, 0).real() == doctest::Approx(rho0(0, 0).real()).epsilon(1e-14));
  CHECK(rho(3, 3).real() == doctest::Approx(rho0(3, 3).real()).epsilon(1e-14));
  CHECK(rho(0, 3).real() ==
        doctest::Approx(rho0(0, 3).real() * std::sqrt(1 - p2)).epsilon(1e-14));
}

TEST_CASE("apply: depolarizing on |0><0| gives diag(1 - 2p/3, 2p/3)") {
  const double p3 = 0.45;
  ComplexMatrix m(4);
  m(0, 0) = 0.5;  // |00>
  m(2, 2) = 0.5;  // |10>  (Rob's qubit in |0> for both)
  const auto ch = lift_local(make_channel(ChannelKind::Depolarizing, p3),
                             ChannelPlacement::RobLocal);
  const auto rho = apply(ch, DensityMatrix(m));
  CHECK(rho(0, 0).real() == doctest::Approx(0.5 * (1 - 2 * p3 / 3)).epsilon(1e-13));
  CHECK(rho(1, 1).real() == doctest::Approx(0.5 * (2 * p3 / 3)).epsilon(1e-13));
}

TEST_CASE("apply: rejects single-qubit channels") {
  CHECK_THROWS_AS(apply(make_channel(ChannelKind::PhaseDamping, 0.5), bell_state()),
                  std::invalid_argument);
}

TEST_CASE("apply: preserves trace, Hermiticity and positivity") {
  std::mt19937 gen(57);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = testsup::random_density(gen);
    for (auto kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                      ChannelKind::Depolarizing}) {
      const auto ch = lift_collective(make_channel(kind, u01(gen)));
      const auto out = apply(ch, rho);  // DensityMatrix revalidates on construction
      CHECK(std::abs(out.mat().trace() - 1.0) <= 1e-12);
      CHECK(max_abs_diff(out.mat(), dagger(out.mat())) <= 1e-12);
      CHECK(hermitian_eigen(out.mat()).values[0] >= -1e-10);
    }
  }
}

TEST_CASE("Alice-local and Rob-local maps commute") {
  std::mt19937 gen(58);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rho = testsup::random_density(gen);
    const auto a = lift_local(make_channel(ChannelKind::PhaseDamping, u01(gen)),
                              ChannelPlacement::AliceLocal);
    const auto b = lift_local(make_channel(ChannelKind::AmplitudeDamping, u01(gen)),
                              ChannelPlacement::RobLocal);
    const auto ab = apply(b, apply(a, rho));
    const auto ba = apply(a, apply(b, rho));
    CHECK(max_abs_diff(ab.mat(), ba.mat()) <= 1e-13);
  }
}

TEST_CASE("apply_global: all channels at p = 0 leave the state untouched") {
  std::mt19937 gen(59);
  const auto alice = lift_local(make_channel(ChannelKind::PhaseDamping, 0.0),
                                ChannelPlacement::AliceLocal);
  const auto rob = lift_local(make_channel(ChannelKind::AmplitudeDamping, 0.0),
                              ChannelPlacement::RobLocal);
  const auto coll = lift_collective(make_channel(ChannelKind::Depolarizing, 0.0));
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testsup::random_density(gen);
    CHECK(max_abs_diff(apply_global(rho, alice, rob, coll).mat(), rho.mat()) <= 1e-14);
  }
}
