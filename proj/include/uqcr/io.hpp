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

// File formats. Everything is JSON except the Lorenz table (CSV).
// Complex numbers are [re, im] pairs (a bare number is read as real);
// matrices are row-major lists of rows. Parse errors name the offending
// field, e.g. "observables[1].basis[0][2]".

#include <string>
#include <string_view>
#include <vector>

#include "uqcr/bounds.hpp"
#include "uqcr/certainty.hpp"
#include "uqcr/coherence.hpp"
#include "uqcr/quantum.hpp"

namespace uqcr::io {

struct ObservableSet {
  int dimension = 0;
  std::vector<quantum::ProjectiveObservable> observables;
};

/// {"dimension": N, "observables": [{"name": ..., <spec>}, ...]} where <spec>
/// is one of "basis", "projectors", "bloch_axis" (N = 2) or "preset"
/// ("pauli_x", "pauli_y", "pauli_z", "mub_set"; the last expands to N + 1
/// observables).
ObservableSet parse_observables(std::string_view text);
/// Writes every observable as explicit projectors.
std::string observables_to_json(const ObservableSet& set);

/// {"density": matrix} | {"ket": vector} | {"bloch": [x, y, z], "norm": r}.
/// Kets are normalized; with "norm" the Bloch vector is rescaled to length r.
quantum::DensityMatrix parse_state(std::string_view text);

/// "all", "pure" or "bloch=R".
bounds::StateConstraint parse_constraint(std::string_view text);
std::string constraint_to_string(const bounds::StateConstraint& c);

struct BoundsFile {
  ObservableSet observables;
  bounds::StateConstraint constraint;
  bounds::SolverConfig config;
  bounds::BoundResult t;
  bounds::BoundResult s;
};

BoundsFile compute_bounds(ObservableSet observables, const bounds::StateConstraint& constraint,
                          const bounds::SolverConfig& config);

std::string bounds_to_json(const BoundsFile& b);
/// Vectors come back bit for bit; certificates are re-validated as states.
BoundsFile parse_bounds(std::string_view text);

/// Report plus whether `rho` is admissible under the bounds' constraint.
struct VerifyResult {
  certainty::CertaintyReport report;
  bool admissible = true;
  bool holds() const noexcept { return admissible && report.sandwich_ok(); }
};

VerifyResult verify(const BoundsFile& b, const ObservableSet& observables,
                    const quantum::DensityMatrix& rho,
                    majorization::LogBase base = majorization::LogBase::Bits);

std::string report_to_json(const VerifyResult& v);
/// entropy_sum, entropy_cap, tightened_cap (null when undefined), slack.
std::string entropy_to_json(const certainty::CertaintyReport& r);

/// Columns n, L_t, L_s, L_P1, ... with 12 significant digits.
std::string lorenz_csv(const BoundsFile& b, const std::vector<quantum::DensityMatrix>& states);

std::string coherence_to_json(const coherence::ComplementarityBounds& bounds,
                              const std::vector<std::vector<coherence::CoherenceVector>>& per_state);

std::string format_double(double x, int precision = 12);

std::string read_file(const std::string& path);
/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace uqcr::io
