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

// Coherence vectors: for a pure state the sorted squared amplitudes in a
// reference basis, for a mixed state the join of the decomposition averages
// over every pure-state ensemble of rho (approximated by sampling).

#include <cstdint>
#include <span>
#include <string>

#include "uqcr/bounds.hpp"
#include "uqcr/majorization.hpp"
#include "uqcr/quantum.hpp"

namespace uqcr::coherence {

using majorization::ProbVector;

enum class Exactness { Exact, ApproximateLower };

const char* to_string(Exactness e) noexcept;

struct CoherenceVector {
  std::string basis_name;
  ProbVector vector;
  Exactness exactness = Exactness::Exact;
};

struct SamplingConfig {
  std::size_t samples = 256;
  std::uint64_t seed = 20240917;
};

/// Throws NotNormalized if |psi| differs from 1 by more than 1e-10 and
/// NotRankOne unless `basis` is a complete orthonormal basis.
CoherenceVector coherence_vector_pure(const quantum::Ket& psi,
                                      const quantum::ProjectiveObservable& basis);

/// Join over the eigen-ensemble, `cfg.samples` Haar mixings of it and, for
/// states diagonal in `basis`, the basis ensemble. The true coherence vector
/// majorizes the result; it is labelled exact for rank-one states and when
/// the result is already the point mass.
CoherenceVector coherence_vector_mixed_approx(const quantum::DensityMatrix& rho,
                                              const quantum::ProjectiveObservable& basis,
                                              const SamplingConfig& cfg = {});

struct ComplementarityBounds {
  ProbVector mu_t;
  ProbVector mu_s;
  double entropy_mu_t = 0.0;  // upper end of the entropic form
  double entropy_mu_s = 0.0;  // lower end
};

/// mu_t < mu_1 (+) ... (+) mu_M < mu_s over pure states. Needs at least two
/// complete bases of a shared dimension.
ComplementarityBounds coherence_complementarity_bounds(
    std::span<const quantum::ProjectiveObservable> bases, const bounds::SolverConfig& cfg = {},
    majorization::LogBase base = majorization::LogBase::Bits);

}  // namespace uqcr::coherence
