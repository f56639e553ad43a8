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

#pragma once

// State-dependent reports built on top of the t/s bounds: the sandwich
// t < P < s, the Shannon-entropy cap H(t) and the tightened cap H(t) - D(P||t).

#include <optional>
#include <span>

#include "uqcr/bounds.hpp"
#include "uqcr/majorization.hpp"
#include "uqcr/quantum.hpp"

namespace uqcr::certainty {

using majorization::LogBase;
using majorization::ProbVector;

struct CertaintyReport {
  ProbVector P;
  ProbVector t;
  ProbVector s;
  bool lower_ok = false;  // t < P
  bool upper_ok = false;  // P < s
  // P coincides with t (resp. s) up to the order tolerance.
  bool lower_equal = false;
  bool upper_equal = false;
  double entropy_sum = 0.0;
  double entropy_cap = 0.0;
  // Empty when P has weight where t vanishes.
  std::optional<double> divergence{};
  std::optional<double> tightened_cap{};
  // min_k (L_k(P) - L_k(t)) and min_k (L_k(s) - L_k(P)); negative on violation.
  double lower_slack = 0.0;
  double upper_slack = 0.0;
  double entropy_slack = 0.0;  // entropy_cap - entropy_sum
  LogBase base = LogBase::Bits;

  bool sandwich_ok() const noexcept { return lower_ok && upper_ok; }
};

/// `tol` is the prefix-sum tolerance of both order checks.
CertaintyReport certify_state(std::span<const quantum::ProjectiveObservable> observables,
                              const quantum::DensityMatrix& rho, const ProbVector& t,
                              const ProbVector& s, double tol = 1e-8,
                              LogBase base = LogBase::Bits);

double entropic_certainty_bound(const ProbVector& t, LogBase base = LogBase::Bits);

struct SanchezCheck {
  double entropy = 0.0;  // H of the PDV at the level-1 minimizer
  double target = 0.0;   // 3 h(1/2 + 1/(2 sqrt 3))
  bool passed = false;
};

/// Three pairwise unbiased qubit bases under the pure-state constraint: the
/// level-1 minimizer's PDV must reach 3 h(1/2 + 1/(2 sqrt 3)) within 1e-6.
/// Returns nullopt when the configuration does not fit (wrong dimension,
/// not three MUBs, or a constraint other than pure states).
std::optional<SanchezCheck> sanchez_consistency_check(
    std::span<const quantum::ProjectiveObservable> observables,
    const bounds::StateConstraint& constraint, const bounds::SolverConfig& cfg = {});

/// Runs the check on sigma_x, sigma_y, sigma_z with pure states.
SanchezCheck sanchez_consistency_check();

}  // namespace uqcr::certainty
