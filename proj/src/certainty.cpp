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

#include "uqcr/certainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "uqcr/error.hpp"

namespace uqcr::certainty {
namespace {

// Smallest prefix-sum gap upper - lower over the common length.
double min_prefix_gap(const ProbVector& lower, const ProbVector& upper) {
  const std::size_t len = std::max(lower.size(), upper.size());
  const auto a = lower.prefix_sums(len);
  const auto b = upper.prefix_sums(len);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= len; ++k) gap = std::min(gap, b[k] - a[k]);
  return gap;
}

bool prefix_equal(const ProbVector& a, const ProbVector& b, double tol) {
  const std::size_t len = std::max(a.size(), b.size());
  const auto pa = a.prefix_sums(len);
  const auto pb = b.prefix_sums(len);
  for (std::size_t k = 1; k <= len; ++k) {
    if (std::abs(pa[k] - pb[k]) > tol) return false;
  }
  return true;
}

double binary_entropy(double p) {
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

}  // namespace

CertaintyReport certify_state(std::span<const quantum::ProjectiveObservable> observables,
                              const quantum::DensityMatrix& rho, const ProbVector& t,
                              const ProbVector& s, double tol, LogBase base) {
  if (observables.empty()) throw Error(ErrorKind::EmptySet, "no observables given");
  for (const auto& obs : observables) {
    if (obs.dim() != rho.dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "observable '" + obs.name() + "' has dimension " + std::to_string(obs.dim()) +
                      " but the state has dimension " + std::to_string(rho.dim()));
    }
  }
  CertaintyReport r{quantum::direct_sum_pdv(observables, rho), t, s};
  r.base = base;
  if (std::abs(t.total() - r.P.total()) > 1e-9 || std::abs(s.total() - r.P.total()) > 1e-9) {
    throw Error(ErrorKind::TotalMismatch,
                "bounds were computed for " + std::to_string(t.total()) +
                    " observables, got " + std::to_string(observables.size()));
  }
  r.lower_slack = min_prefix_gap(t, r.P);
  r.upper_slack = min_prefix_gap(r.P, s);
  r.lower_ok = r.lower_slack >= -tol;
  r.upper_ok = r.upper_slack >= -tol;
  r.lower_equal = prefix_equal(r.P, t, tol);
  r.upper_equal = prefix_equal(r.P, s, tol);
  r.entropy_sum = majorization::shannon_entropy(r.P, base);
  r.entropy_cap = majorization::shannon_entropy(t, base);
  r.entropy_slack = r.entropy_cap - r.entropy_sum;
  try {
    r.divergence = majorization::kl_divergence(r.P, t, base);
    r.tightened_cap = r.entropy_cap - *r.divergence;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SupportMismatch) throw;
  }
  return r;
}

double entropic_certainty_bound(const ProbVector& t, LogBase base) {
  return majorization::shannon_entropy(t, base);
}

std::optional<SanchezCheck> sanchez_consistency_check(
    std::span<const quantum::ProjectiveObservable> observables,
    const bounds::StateConstraint& constraint, const bounds::SolverConfig& cfg) {
  if (constraint.kind != bounds::StateConstraint::Kind::PureOnly) return std::nullopt;
  if (observables.size() != 3) return std::nullopt;
  for (const auto& obs : observables) {
    if (obs.dim() != 2 || !obs.is_rank_one()) return std::nullopt;
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (!quantum::is_mub_pair(observables[a], observables[b])) return std::nullopt;
    }
  }
  const auto cert = bounds::min_topn_over_states(observables, 1, constraint, cfg);
  SanchezCheck out;
  out.entropy = majorization::shannon_entropy(quantum::direct_sum_pdv(observables, cert.state));
  out.target = 3.0 * binary_entropy(0.5 + 0.5 / std::sqrt(3.0));
  out.passed = std::abs(out.entropy - out.target) <= 1e-6;
  return out;
}

SanchezCheck sanchez_consistency_check() {
  const auto mubs = quantum::standard_mub_set(2);
  return *sanchez_consistency_check(mubs, bounds::StateConstraint::pure_only());
}

}  // namespace uqcr::certainty
