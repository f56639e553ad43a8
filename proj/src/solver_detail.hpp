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

// Internal helpers shared by the bound solvers. Not installed.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "uqcr/quantum.hpp"

namespace uqcr::bounds::detail {

using quantum::Ket;
using quantum::Matrix;
using quantum::Vec3;

// Real coordinates of a Hermitian matrix: diagonal, then (Re, Im) of the
// strict upper triangle, row by row. Tr[C rho] = dot(pack_functional(C),
// pack_state(rho)).
Eigen::VectorXd pack_state(const Matrix& rho);
Eigen::VectorXd pack_functional(const Matrix& c);
// Inverse of pack_functional.
Matrix unpack_functional(const Eigen::VectorXd& g, int dim);

// Rows are pack_functional of each operator.
Eigen::MatrixXd functional_rows(const std::vector<Matrix>& ops);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct MinimaxResult {
  Matrix state;
  double value = 0.0;
  Eigen::Index argmax = 0;
  int iterations = 0;
  std::optional<double> dual_lower;
};

// Each function minimizes max_j Tr[ops_j rho] over one state family.

// All density matrices; convex. The state is parametrized by a purification
// so the same sphere solver applies.
MinimaxResult minimize_over_density(const std::vector<Matrix>& ops, const Matrix& start,
                                    int max_iter);
// Pure states |psi><psi|.
MinimaxResult minimize_over_pure(const std::vector<Matrix>& ops, const Ket& start, int max_iter);
// Qubit states with Bloch vector of norm `radius`; start is a direction.
MinimaxResult minimize_over_bloch_sphere(const std::vector<Matrix>& ops, double radius,
                                         const Vec3& start, int max_iter);

}  // namespace uqcr::bounds::detail
