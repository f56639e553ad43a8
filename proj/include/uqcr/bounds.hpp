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

// State-independent majorization bounds for a set of projective observables.
//
// For each level n the partial sum of the n largest entries of the direct-sum
// PDV is the maximum of Tr[C rho] over the choice operators C of that level.
// The lower bound t collects the per-level minima over states, the upper
// bound s the per-level maxima (flattened to a concave curve).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uqcr/majorization.hpp"
#include "uqcr/quantum.hpp"

namespace uqcr::bounds {

using majorization::ProbVector;
using quantum::DensityMatrix;
using quantum::Matrix;
using quantum::ProjectiveObservable;

/// Sum of a chosen subset of outcome projectors from every observable.
struct ChoiceOperator {
  /// subsets[alpha] lists the chosen outcome indices of observable alpha.
  std::vector<std::vector<std::size_t>> subsets;
  Matrix op;
  std::size_t level = 0;
};

/// All choice operators of level n; there are C(sum N_alpha, n) of them.
std::vector<ChoiceOperator> enumerate_choices(std::span<const ProjectiveObservable> observables,
                                              std::size_t n);

/// Sum of the n largest entries of P.
double top_n_sum(const ProbVector& P, std::size_t n);

struct StateConstraint {
  enum class Kind { AllStates, PureOnly, FixedBlochNorm };
  Kind kind = Kind::AllStates;
  double bloch_norm = 1.0;

  static StateConstraint all_states() { return {Kind::AllStates, 1.0}; }
  static StateConstraint pure_only() { return {Kind::PureOnly, 1.0}; }
  static StateConstraint fixed_bloch_norm(double r) { return {Kind::FixedBlochNorm, r}; }

  /// Throws InvalidArgument if the constraint makes no sense in `dim`.
  void validate(int dim) const;
  /// Whether `rho` belongs to the constrained state set (within `tol`).
  bool admits(const DensityMatrix& rho, double tol = 1e-8) const;
};

struct SolverConfig {
  int max_iter = 5000;
  int multistarts = 64;
  double tol = 1e-7;
  std::size_t oracle_samples = 100000;
  std::uint64_t seed = 20240917;
  /// Worker threads for multistarts; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

enum class BoundKind { Min, Max };

struct SolverDiagnostics {
  int iterations = 0;
  int multistart_index = -1;
  /// Certificate value minus the sampling oracle's best value at this level.
  double residual = 0.0;
  /// Primal value minus a dual lower bound (convex state set only).
  std::optional<double> dual_gap;
};

struct BoundCertificate {
  std::size_t level = 0;
  BoundKind kind = BoundKind::Min;
  double value = 0.0;
  DensityMatrix state;
  ChoiceOperator choice;
  SolverDiagnostics diagnostics;
};

/// Best per-level prefix sums over random admissible states plus the
/// eigenstates of every choice operator.
class SamplingOracle {
 public:
  static SamplingOracle build(std::span<const ProjectiveObservable> observables,
                              const StateConstraint& constraint, std::size_t samples,
                              std::uint64_t seed);

  /// Levels run 0..total_outcomes.
  double min_prefix(std::size_t n) const { return min_prefix_.at(n); }
  double max_prefix(std::size_t n) const { return max_prefix_.at(n); }
  const DensityMatrix& argmin(std::size_t n) const { return argmin_.at(n); }
  std::size_t total_outcomes() const noexcept { return min_prefix_.size() - 1; }

 private:
  std::vector<double> min_prefix_;
  std::vector<double> max_prefix_;
  std::vector<DensityMatrix> argmin_;
};

/// Random state drawn from the constrained set.
DensityMatrix sample_state(const StateConstraint& constraint, int dim, quantum::Rng& rng);

BoundCertificate min_topn_over_states(std::span<const ProjectiveObservable> observables,
                                      std::size_t n, const StateConstraint& constraint,
                                      const SolverConfig& cfg);

BoundCertificate max_topn_over_states(std::span<const ProjectiveObservable> observables,
                                      std::size_t n, const StateConstraint& constraint);

struct BoundResult {
  ProbVector vector;
  std::vector<BoundCertificate> certificates;
};

BoundResult infimum_t(std::span<const ProjectiveObservable> observables,
                      const StateConstraint& constraint, const SolverConfig& cfg);

BoundResult supremum_s(std::span<const ProjectiveObservable> observables,
                       const StateConstraint& constraint);

/// (1/N, ..., 1/N) with 2N entries.
ProbVector two_basis_trivial_bound(int dim);

/// Closed-form lower bound for the qubit observables A = eigenbasis of
/// cos(phi) sigma_x + sin(phi) sigma_y, B = sigma_y, C = sigma_z, at Bloch
/// norm r_norm. Valid for 0 <= phi <= pi/4.
ProbVector qubit_example2_t(double phi, double r_norm);

/// Closed-form lower bound for sigma_x, sigma_y, sigma_z at Bloch norm r_norm.
ProbVector qubit_mub_t(double r_norm);

}  // namespace uqcr::bounds
