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
#include <vector>

#include "uqcr/bounds.hpp"
#include "uqcr/certainty.hpp"
#include "uqcr/error.hpp"

namespace uqcr::certainty {
namespace {

using bounds::StateConstraint;
using quantum::ProjectiveObservable;
using quantum::Vec3;

std::vector<ProjectiveObservable> pauli_xz() {
  return {ProjectiveObservable::from_bloch_axis("x", Vec3::UnitX()),
          ProjectiveObservable::from_bloch_axis("z", Vec3::UnitZ())};
}

ProbVector pv(std::vector<double> v, double total) { return ProbVector::from_unsorted(v, total); }

bounds::SolverConfig quick() {
  bounds::SolverConfig cfg;
  cfg.oracle_samples = 20000;
  cfg.multistarts = 16;
  return cfg;
}

const ProbVector kT1 = pv({0.5, 0.5, 0.5, 0.5}, 2.0);
const ProbVector kS1 = pv({1.0, std::sqrt(0.5), 1.0 - std::sqrt(0.5), 0.0}, 2.0);

TEST(Certify, MaximallyMixedIsEqualityCase) {
  const auto r = certify_state(pauli_xz(), quantum::bloch_to_density(Vec3::Zero()), kT1, kS1);
  EXPECT_TRUE(r.lower_ok);
  EXPECT_TRUE(r.upper_ok);
  EXPECT_NEAR(r.entropy_sum, 2.0, 1e-12);
  EXPECT_NEAR(r.entropy_cap, 2.0, 1e-12);
  ASSERT_TRUE(r.tightened_cap.has_value());
  EXPECT_NEAR(*r.tightened_cap, 2.0, 1e-12);
  EXPECT_NEAR(r.entropy_slack, 0.0, 1e-12);
}

TEST(Certify, ZPlusAgainstPauliXZ) {
  const auto r = certify_state(pauli_xz(), quantum::bloch_to_density(Vec3::UnitZ()), kT1, kS1);
  EXPECT_TRUE(r.sandwich_ok());
  EXPECT_NEAR(r.P[0], 1.0, 1e-12);
  EXPECT_NEAR(r.P[3], 0.0, 1e-12);
  EXPECT_NEAR(r.entropy_sum, 1.0, 1e-12);
  EXPECT_NEAR(r.entropy_cap, 2.0, 1e-12);
  // D(P||t) = log2 2 + 2 * 0.5 log2 1 = 1 bit
  ASSERT_TRUE(r.divergence.has_value());
  EXPECT_NEAR(*r.divergence, 1.0, 1e-12);
  EXPECT_NEAR(*r.tightened_cap, 1.0, 1e-12);
}

TEST(Certify, DivergenceUndefinedWhenTHasZeros) {
  // Hypothetical t with an empty last slot: P puts weight there.
  const auto t = pv({0.7, 0.7, 0.6, 0.0}, 2.0);
  const auto r = certify_state(pauli_xz(), quantum::bloch_to_density(Vec3(0, 0, 0)), t, kS1);
  EXPECT_FALSE(r.divergence.has_value());
  EXPECT_FALSE(r.tightened_cap.has_value());
  EXPECT_FALSE(r.lower_ok);  // (0.5, ...) does not majorize (0.7, ...)
  EXPECT_LT(r.lower_slack, 0.0);
}

TEST(Certify, QubitMub3PureZPlus) {
  const auto obs = quantum::standard_mub_set(2);
  const auto pure = StateConstraint::pure_only();
  const auto t = bounds::infimum_t(obs, pure, quick()).vector;
  const auto s = bounds::supremum_s(obs, pure).vector;
  const auto r = certify_state(obs, quantum::bloch_to_density(Vec3::UnitZ()), t, s);
  EXPECT_TRUE(r.sandwich_ok());
  EXPECT_NEAR(r.entropy_sum, 2.0, 1e-12);
  EXPECT_NEAR(r.entropy_cap, 2.611011226, 1e-8);
  EXPECT_LE(r.entropy_sum, *r.tightened_cap + 1e-9);
  EXPECT_LE(*r.tightened_cap, r.entropy_cap + 1e-9);
}

TEST(Certify, MixedStateAgainstPureBoundsIsSurfaced) {
  const auto obs = quantum::standard_mub_set(2);
  const auto pure = StateConstraint::pure_only();
  const auto t = bounds::infimum_t(obs, pure, quick()).vector;
  const auto s = bounds::supremum_s(obs, pure).vector;
  const auto r = certify_state(obs, quantum::bloch_to_density(Vec3::Zero()), t, s);
  EXPECT_FALSE(r.lower_ok);
  EXPECT_TRUE(r.upper_ok);
}

TEST(Certify, Errors) {
  EXPECT_THROW(certify_state(pauli_xz(), quantum::random_density(3, 3, 1), kT1, kS1), Error);
  const auto three = quantum::standard_mub_set(2);
  EXPECT_THROW(certify_state(three, quantum::bloch_to_density(Vec3::Zero()), kT1, kS1), Error);
}

TEST(Certify, EntropicChainOnSamples) {
  const auto obs = pauli_xz();
  const auto all = StateConstraint::all_states();
  const auto t = bounds::infimum_t(obs, all, quick()).vector;
  const auto s = bounds::supremum_s(obs, all).vector;
  quantum::Rng rng(21);
  for (int k = 0; k < 2000; ++k) {
    const auto r = certify_state(obs, bounds::sample_state(all, 2, rng), t, s);
    ASSERT_TRUE(r.sandwich_ok());
    ASSERT_TRUE(r.tightened_cap.has_value());
    EXPECT_LE(r.entropy_sum, *r.tightened_cap + 1e-9);
    EXPECT_LE(*r.tightened_cap, r.entropy_cap + 1e-9);
    EXPECT_GE(r.entropy_sum, majorization::shannon_entropy(s) - 1e-9);
  }
}

TEST(Certify, NatsScaleBits) {
  const auto rho = quantum::bloch_to_density(Vec3(0.2, 0.1, -0.3));
  const auto bits = certify_state(pauli_xz(), rho, kT1, kS1);
  const auto nats = certify_state(pauli_xz(), rho, kT1, kS1, 1e-8, LogBase::Nats);
  EXPECT_NEAR(nats.entropy_sum, bits.entropy_sum * std::log(2.0), 1e-12);
  EXPECT_NEAR(*nats.tightened_cap, *bits.tightened_cap * std::log(2.0), 1e-12);
}

TEST(EntropicBound, Examples) {
  EXPECT_NEAR(entropic_certainty_bound(kT1), 2.0, 1e-15);
  EXPECT_EQ(entropic_certainty_bound(pv({1, 0, 0}, 1.0)), 0.0);
  const double a = 1.0 / (2.0 * std::sqrt(3.0));
  const auto t3 = pv({0.5 + a, 1.0 - a, 0.5, 0.5, a, 0.5 - a}, 3.0);
  EXPECT_NEAR(entropic_certainty_bound(t3), 2.611011226, 1e-8);
}

TEST(Sanchez, DefaultConfiguration) {
  const auto r = sanchez_consistency_check();
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.target, 2.232022654, 1e-8);
  EXPECT_NEAR(r.entropy, r.target, 1e-6);
}

TEST(Sanchez, GuardsSkip) {
  const auto mubs = quantum::standard_mub_set(2);
  EXPECT_FALSE(sanchez_consistency_check(mubs, StateConstraint::all_states()).has_value());
  const std::vector<ProjectiveObservable> tilted = {
      mubs[0], mubs[1], ProjectiveObservable::from_bloch_axis("t", Vec3(0.2, 0, 1))};
  EXPECT_FALSE(sanchez_consistency_check(tilted, StateConstraint::pure_only()).has_value());
  const auto qutrit = quantum::standard_mub_set(3);
  EXPECT_FALSE(sanchez_consistency_check(qutrit, StateConstraint::pure_only()).has_value());
}

}  // namespace
}  // namespace uqcr::certainty
