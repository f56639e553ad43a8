// Copyright 2026 The uqcr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "testing.hpp"
#include "uqcr/bounds.hpp"
#include "uqcr/error.hpp"

namespace uqcr::bounds {
namespace {

using quantum::ProjectiveObservable;
using quantum::Vec3;

std::vector<ProjectiveObservable> pauli_xz() {
  return {ProjectiveObservable::from_bloch_axis("x", Vec3::UnitX()),
          ProjectiveObservable::from_bloch_axis("z", Vec3::UnitZ())};
}

std::vector<ProjectiveObservable> tilted_abc() {
  return {ProjectiveObservable::from_bloch_axis("a", Vec3(1, 1, 0)),
          ProjectiveObservable::from_bloch_axis("b", Vec3::UnitY()),
          ProjectiveObservable::from_bloch_axis("c", Vec3::UnitZ())};
}

std::vector<ProjectiveObservable> qubit_mub3() { return quantum::standard_mub_set(2); }

void expect_vector(const ProbVector& p, const std::vector<double>& want, double tol) {
  ASSERT_EQ(p.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(p[i], want[i], tol) << "entry " << i;
}

SolverConfig quick() {
  SolverConfig cfg;
  cfg.oracle_samples = 20000;
  cfg.multistarts = 16;
  return cfg;
}

TEST(Choices, CountAndOperators) {
  const auto obs = pauli_xz();
  const auto c2 = enumerate_choices(obs, 2);
  EXPECT_EQ(c2.size(), 6u);
  for (const auto& c : c2) {
    EXPECT_EQ(c.level, 2u);
    std::size_t picked = 0;
    for (const auto& s : c.subsets) picked += s.size();
    EXPECT_EQ(picked, 2u);
    EXPECT_NEAR(c.op.trace().real(), 2.0, 1e-14);
  }
  EXPECT_EQ(enumerate_choices(tilted_abc(), 3).size(), 20u);
  EXPECT_THROW(enumerate_choices(obs, 0), Error);
  EXPECT_THROW(enumerate_choices(obs, 4), Error);
}

TEST(Choices, TopNSumEqualsMaxOverChoices) {
  // Tr[C rho] maximized over level-n choices equals the top-n sum of P.
  const auto obs = tilted_abc();
  quantum::Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = quantum::random_density(2, 1 + trial % 2, rng);
    const auto P = quantum::direct_sum_pdv(obs, rho);
    for (std::size_t n = 1; n < 6; ++n) {
      double best = -1.0;
      for (const auto& c : enumerate_choices(obs, n)) best = std::max(best, (c.op * rho.matrix()).trace().real());
      EXPECT_NEAR(top_n_sum(P, n), best, 1e-13);
    }
  }
}

TEST(Constraint, ValidateAndAdmit) {
  EXPECT_THROW(StateConstraint::fixed_bloch_norm(0.5).validate(3), Error);
  EXPECT_THROW(StateConstraint::fixed_bloch_norm(1.5).validate(2), Error);
  EXPECT_NO_THROW(StateConstraint::pure_only().validate(5));
  const auto mixed = quantum::bloch_to_density(Vec3(0.3, 0, 0));
  EXPECT_FALSE(StateConstraint::pure_only().admits(mixed));
  EXPECT_TRUE(StateConstraint::fixed_bloch_norm(0.3).admits(mixed));
  EXPECT_TRUE(StateConstraint::all_states().admits(mixed));
}

TEST(Sampling, StatesAreAdmissible) {
  quantum::Rng rng(1);
  for (const auto& c : {StateConstraint::all_states(), StateConstraint::pure_only(),
                        StateConstraint::fixed_bloch_norm(0.4)}) {
    for (int k = 0; k < 50; ++k) EXPECT_TRUE(c.admits(sample_state(c, 2, rng)));
  }
}

TEST(Infimum, PauliXZAllStates) {
  const auto obs = pauli_xz();
  const auto t = infimum_t(obs, StateConstraint::all_states(), quick());
  expect_vector(t.vector, {0.5, 0.5, 0.5, 0.5}, 1e-7);
  for (const auto& c : t.certificates) {
    ASSERT_TRUE(c.diagnostics.dual_gap.has_value());
    EXPECT_LT(*c.diagnostics.dual_gap, 1e-6);
  }
}

// Frozen from an independent Bloch-sphere search (Nelder-Mead, many starts).
constexpr double kTiltedAbcMinima[] = {0.6787033722, 1.3535533906, 1.8535533906, 2.3535533906,
                                 2.6787033722};

TEST(Infimum, TiltedAbcPureMatchesFrozenMinima) {
  const auto obs = tilted_abc();
  const auto t = infimum_t(obs, StateConstraint::pure_only(), quick());
  ASSERT_EQ(t.certificates.size(), 5u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_NEAR(t.certificates[n - 1].value, kTiltedAbcMinima[n - 1], 1e-8);
  expect_vector(t.vector, qubit_example2_t(std::numbers::pi / 4, 1.0).entries(), 1e-8);
}

TEST(Infimum, TiltedAbcNoWorseThanGridSearch) {
  const auto obs = tilted_abc();
  const auto pure = StateConstraint::pure_only();
  for (std::size_t n = 1; n <= 5; ++n) {
    const double grid = testing::brute_min_on_sphere(
        [&](const Vec3& r) { return testing::qubit_topn(obs, r, n); }, 1.0);
    const auto cert = min_topn_over_states(obs, n, pure, quick());
    EXPECT_LE(cert.value, grid + 1e-9) << "level " << n;
  }
}

TEST(Infimum, CertificatesAreConsistent) {
  const auto obs = tilted_abc();
  const auto pure = StateConstraint::pure_only();
  const auto t = infimum_t(obs, pure, quick());
  for (const auto& c : t.certificates) {
    EXPECT_EQ(c.kind, BoundKind::Min);
    EXPECT_TRUE(pure.admits(c.state));
    const auto P = quantum::direct_sum_pdv(obs, c.state);
    EXPECT_NEAR(top_n_sum(P, c.level), c.value, 1e-9);
    EXPECT_NEAR((c.choice.op * c.state.matrix()).trace().real(), c.value, 1e-7);
    EXPECT_LE(c.diagnostics.residual, quick().tol);
  }
}

TEST(Infimum, QubitMub3PureAndMixed) {
  const auto obs = qubit_mub3();
  const double a = 1.0 / (2.0 * std::sqrt(3.0));
  const auto pure = infimum_t(obs, StateConstraint::pure_only(), quick());
  expect_vector(pure.vector, {0.5 + a, 1.0 - a, 0.5, 0.5, a, 0.5 - a}, 1e-8);
  const auto all = infimum_t(obs, StateConstraint::all_states(), quick());
  expect_vector(all.vector, std::vector<double>(6, 0.5), 1e-7);
}

TEST(Infimum, FixedNormMatchesClosedForms) {
  for (double r : {0.0, 0.35, 0.8, 1.0}) {
    const auto c = StateConstraint::fixed_bloch_norm(r);
    expect_vector(infimum_t(qubit_mub3(), c, quick()).vector, qubit_mub_t(r).entries(), 1e-8);
    expect_vector(infimum_t(tilted_abc(), c, quick()).vector,
                  qubit_example2_t(std::numbers::pi / 4, r).entries(), 1e-8);
  }
}

TEST(Infimum, TwoBasesAreTrivial) {
  quantum::Rng rng(77);
  for (int dim : {2, 3}) {
    const std::vector<ProjectiveObservable> obs = {quantum::random_basis_observable("a", dim, rng),
                                                   quantum::random_basis_observable("b", dim, rng)};
    const auto t = infimum_t(obs, StateConstraint::all_states(), quick());
    expect_vector(t.vector, two_basis_trivial_bound(dim).entries(), 1e-6);
  }
}

TEST(Infimum, DeterministicAcrossThreadCounts) {
  const auto obs = tilted_abc();
  auto cfg = quick();
  cfg.threads = 1;
  const auto a = infimum_t(obs, StateConstraint::pure_only(), cfg);
  cfg.threads = 3;
  const auto b = infimum_t(obs, StateConstraint::pure_only(), cfg);
  EXPECT_EQ(a.vector, b.vector);
  for (std::size_t k = 0; k < a.certificates.size(); ++k) {
    EXPECT_EQ(a.certificates[k].diagnostics.multistart_index, b.certificates[k].diagnostics.multistart_index);
  }
}

TEST(Infimum, ReportsDivergence) {
  auto cfg = quick();
  cfg.tol = -1.0;  // nothing can beat the oracle by a whole unit
  try {
    min_topn_over_states(pauli_xz(), 1, StateConstraint::all_states(), cfg);
    FAIL() << "expected SolverDiverged";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SolverDiverged);
  }
}

TEST(Infimum, RejectsMixedDimensions) {
  quantum::Rng rng(1);
  const std::vector<ProjectiveObservable> obs = {quantum::random_basis_observable("a", 2, rng),
                                                 quantum::random_basis_observable("b", 3, rng)};
  EXPECT_THROW(infimum_t(obs, StateConstraint::all_states(), quick()), Error);
}

TEST(Supremum, PauliXZ) {
  const auto s = supremum_s(pauli_xz(), StateConstraint::all_states());
  expect_vector(s.vector, {1.0, std::sqrt(0.5), 1.0 - std::sqrt(0.5), 0.0}, 1e-12);
}

TEST(Supremum, QubitMub3) {
  // per-level maxima (1, 1 + h, (3 + sqrt 3) / 2, 2 + h, 3) with h = 1/sqrt 2
  const auto s = supremum_s(qubit_mub3(), StateConstraint::pure_only());
  const double h = std::sqrt(0.5);
  const double s3 = (3.0 + std::sqrt(3.0)) / 2.0;
  expect_vector(s.vector, {1.0, h, s3 - 1.0 - h, 2.0 + h - s3, 1.0 - h, 0.0}, 1e-12);
}

TEST(Supremum, IsConcaveMajorantOfLevelMaxima) {
  const std::vector<ProjectiveObservable> obs = {
      ProjectiveObservable::from_bloch_axis("z1", Vec3::UnitZ()),
      ProjectiveObservable::from_bloch_axis("z2", Vec3::UnitZ()),
      ProjectiveObservable::from_bloch_axis("x", Vec3::UnitX())};
  const auto s = supremum_s(obs, StateConstraint::all_states());
  std::vector<double> raw = {0.0};
  for (const auto& c : s.certificates) raw.push_back(c.value);
  raw.push_back(3.0);
  // S_2 at |z+>; S_3 = max of 3/2 + z + x/2 on the unit circle
  EXPECT_NEAR(raw[2], 2.0, 1e-12);
  EXPECT_NEAR(raw[3], 1.5 + std::sqrt(5.0) / 2.0, 1e-12);
  const auto hull = majorization::least_concave_majorant(raw);
  const auto L = s.vector.prefix_sums();
  for (std::size_t k = 0; k < hull.size(); ++k) EXPECT_NEAR(L[k], hull[k], 1e-12);
  for (std::size_t k = 0; k < raw.size(); ++k) EXPECT_GE(L[k], raw[k] - 1e-12);
}

TEST(Supremum, NoSampleExceedsS) {
  const auto obs = tilted_abc();
  const auto s = supremum_s(obs, StateConstraint::all_states());
  quantum::Rng rng(5);
  for (int k = 0; k < 2000; ++k) {
    const auto P = quantum::direct_sum_pdv(obs, sample_state(StateConstraint::all_states(), 2, rng));
    EXPECT_TRUE(majorization::is_majorized_by(P, s.vector, 1e-8));
  }
}

TEST(ClosedForms, ConsistentAtPhiZero) {
  EXPECT_EQ(two_basis_trivial_bound(3).size(), 6u);
  const auto a = qubit_example2_t(0.0, 0.7);
  const auto b = qubit_mub_t(0.7);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
  EXPECT_THROW(qubit_example2_t(1.0, 1.0), Error);
  EXPECT_THROW(qubit_mub_t(1.2), Error);
}

}  // namespace
}  // namespace uqcr::bounds
