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

// Finite-dimensional states and measurements.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "uqcr/majorization.hpp"

namespace uqcr::quantum {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using Rng = std::mt19937_64;

inline constexpr double kStateTol = 1e-10;

/// Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  /// The trivial one-dimensional state.
  DensityMatrix() : matrix_(Matrix::Identity(1, 1)) {}

  static DensityMatrix from_matrix(const Matrix& m, double tol = kStateTol);
  /// |psi><psi| for a normalized ket.
  static DensityMatrix from_ket(const Ket& psi, double tol = kStateTol);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }
  double purity() const;
  bool is_pure(double tol = 1e-9) const { return purity() > 1.0 - tol; }

 private:
  explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

/// Projective measurement. Projectors may have rank > 1, in which case the
/// observable has fewer outcomes than the dimension.
class ProjectiveObservable {
 public:
  static ProjectiveObservable from_projectors(std::string name, std::vector<Matrix> projectors,
                                              double tol = kStateTol);
  /// Rank-one projectors onto the vectors of an orthonormal basis.
  static ProjectiveObservable from_basis(std::string name, std::span<const Ket> basis,
                                         double tol = kStateTol);
  /// Eigenbasis of n.sigma for a nonzero 3-vector n (normalized internally).
  /// Outcome order: +1 eigenvalue first.
  static ProjectiveObservable from_bloch_axis(std::string name, const Vec3& axis);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return static_cast<int>(projectors_.front().rows()); }
  std::size_t outcome_count() const noexcept { return projectors_.size(); }
  const std::vector<Matrix>& projectors() const noexcept { return projectors_; }
  bool is_rank_one() const noexcept;
  /// Unit vectors spanning each rank-one projector. Throws NotRankOne.
  std::vector<Ket> basis_vectors() const;

 private:
  ProjectiveObservable(std::string name, std::vector<Matrix> projectors)
      : name_(std::move(name)), projectors_(std::move(projectors)) {}
  std::string name_;
  std::vector<Matrix> projectors_;
};

class Povm {
 public:
  static Povm from_elements(std::vector<Matrix> elements, double tol = kStateTol);
  static Povm from_observable(const ProjectiveObservable& obs);

  int dim() const noexcept { return static_cast<int>(elements_.front().rows()); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }

 private:
  explicit Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {}
  std::vector<Matrix> elements_;
};

const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();

/// p_i = Tr[X_i rho] in outcome order, clamped to [0, 1].
std::vector<double> born_probabilities(const ProjectiveObservable& obs, const DensityMatrix& rho);
std::vector<double> born_probabilities(const Povm& povm, const DensityMatrix& rho);

/// Sorted probability vector of one measurement.
majorization::ProbVector pdv(const ProjectiveObservable& obs, const DensityMatrix& rho);
/// Direct sum of the PDVs of every observable.
majorization::ProbVector direct_sum_pdv(std::span<const ProjectiveObservable> observables,
                                        const DensityMatrix& rho);

bool is_mub_pair(const ProjectiveObservable& a, const ProjectiveObservable& b, double tol = 1e-9);

DensityMatrix bloch_to_density(const Vec3& r);
Vec3 density_to_bloch(const DensityMatrix& rho);

/// Reduced state of a random pure state on C^dim (x) C^rank.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, Rng& rng);
/// Haar-random unit vector.
Ket random_ket(int dim, Rng& rng);
/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(int dim, Rng& rng);
/// Observable measuring in the columns of a Haar-random unitary.
ProjectiveObservable random_basis_observable(std::string name, int dim, Rng& rng);

/// dim + 1 pairwise unbiased bases; dim must be 2 or 3.
std::vector<ProjectiveObservable> standard_mub_set(int dim);

/// Projection of a Hermitian matrix onto the set of density matrices
/// (Frobenius-nearest), via eigenvalue projection onto the simplex.
Matrix project_to_density(const Matrix& hermitian);

}  // namespace uqcr::quantum
