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

#include "uqcr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uqcr/error.hpp"

namespace uqcr::quantum {
namespace {

using majorization::ProbVector;

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be a non-empty square matrix");
  }
}

Matrix make_projector(const Ket& v) { return v * v.adjoint(); }

double standard_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix& m, double tol) {
  require_square(m, "density matrix");
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorKind::InvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) {
    throw Error(ErrorKind::InvalidArgument,
                "density matrix trace is " + std::to_string(m.trace().real()) + ", expected 1");
  }
  Matrix h = hermitian_part(m);
  if (min_eigenvalue(h) < -tol) {
    throw Error(ErrorKind::InvalidArgument, "density matrix has a negative eigenvalue");
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::from_ket(const Ket& psi, double tol) {
  if (psi.size() == 0) throw Error(ErrorKind::DimensionMismatch, "empty ket");
  if (std::abs(psi.norm() - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized, "ket norm is " + std::to_string(psi.norm()));
  }
  return DensityMatrix(make_projector(psi));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

ProjectiveObservable ProjectiveObservable::from_projectors(std::string name,
                                                           std::vector<Matrix> projectors,
                                                           double tol) {
  if (projectors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "observable '" + name + "' has no outcomes");
  }
  const auto dim = projectors.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    auto& p = projectors[i];
    require_square(p, "projector");
    if (p.rows() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "projectors of '" + name + "' differ in size");
    }
    if (!is_hermitian(p, tol)) {
      throw Error(ErrorKind::InvalidArgument,
                  "projector " + std::to_string(i) + " of '" + name + "' is not Hermitian");
    }
    p = hermitian_part(p);
    if (max_abs(p * p - p) > tol) {
      throw Error(ErrorKind::InvalidArgument,
                  "projector " + std::to_string(i) + " of '" + name + "' is not idempotent");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (max_abs(p * projectors[j]) > tol) {
        throw Error(ErrorKind::InvalidArgument, "projectors " + std::to_string(j) + " and " +
                                                    std::to_string(i) + " of '" + name +
                                                    "' are not orthogonal");
      }
    }
    sum += p;
  }
  if (max_abs(sum - Matrix::Identity(dim, dim)) > tol) {
    throw Error(ErrorKind::InvalidArgument, "projectors of '" + name + "' do not sum to identity");
  }
  return ProjectiveObservable(std::move(name), std::move(projectors));
}

ProjectiveObservable ProjectiveObservable::from_basis(std::string name, std::span<const Ket> basis,
                                                      double tol) {
  if (basis.empty()) throw Error(ErrorKind::InvalidArgument, "basis '" + name + "' is empty");
  std::vector<Matrix> projectors;
  projectors.reserve(basis.size());
  for (const auto& v : basis) {
    if (v.size() != basis.front().size()) {
      throw Error(ErrorKind::DimensionMismatch, "basis '" + name + "' vectors differ in length");
    }
    if (std::abs(v.norm() - 1.0) > tol) {
      throw Error(ErrorKind::NotNormalized, "basis '" + name + "' has a vector of norm " +
                                                std::to_string(v.norm()));
    }
    projectors.push_back(make_projector(v));
  }
  return from_projectors(std::move(name), std::move(projectors), tol);
}

ProjectiveObservable ProjectiveObservable::from_bloch_axis(std::string name, const Vec3& axis) {
  const double norm = axis.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::InvalidArgument, "Bloch axis of '" + name + "' is zero");
  const Vec3 n = axis / norm;
  const Matrix ns = n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
  const Matrix id = Matrix::Identity(2, 2);
  return from_projectors(std::move(name), {(id + ns) / 2.0, (id - ns) / 2.0});
}

bool ProjectiveObservable::is_rank_one() const noexcept {
  return std::all_of(projectors_.begin(), projectors_.end(),
                     [](const Matrix& p) { return std::abs(p.trace().real() - 1.0) < 1e-8; });
}

std::vector<Ket> ProjectiveObservable::basis_vectors() const {
  if (!is_rank_one()) throw Error(ErrorKind::NotRankOne, "observable '" + name_ + "' is not rank one");
  std::vector<Ket> out;
  out.reserve(projectors_.size());
  for (const auto& p : projectors_) {
    Eigen::Index col = 0;
    p.colwise().norm().maxCoeff(&col);
    out.push_back(p.col(col).normalized());
  }
  return out;
}

Povm Povm::from_elements(std::vector<Matrix> elements, double tol) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "POVM has no elements");
  const auto dim = elements.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (auto& e : elements) {
    require_square(e, "POVM element");
    if (e.rows() != dim) throw Error(ErrorKind::DimensionMismatch, "POVM elements differ in size");
    if (!is_hermitian(e, tol)) throw Error(ErrorKind::InvalidArgument, "POVM element is not Hermitian");
    e = hermitian_part(e);
    if (min_eigenvalue(e) < -tol) {
      throw Error(ErrorKind::InvalidArgument, "POVM element is not positive semidefinite");
    }
    sum += e;
  }
  if (max_abs(sum - Matrix::Identity(dim, dim)) > tol) {
    throw Error(ErrorKind::InvalidArgument, "POVM elements do not sum to identity");
  }
  return Povm(std::move(elements));
}

Povm Povm::from_observable(const ProjectiveObservable& obs) {
  return from_elements(obs.projectors());
}

const Matrix& pauli_x() {
  static const Matrix m = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  return m;
}

namespace {

std::vector<double> born(const std::vector<Matrix>& elements, const DensityMatrix& rho) {
  if (elements.front().rows() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "measurement dimension " + std::to_string(elements.front().rows()) +
                    " does not match state dimension " + std::to_string(rho.dim()));
  }
  std::vector<double> p;
  p.reserve(elements.size());
  for (const auto& e : elements) {
    // Tr[E rho] = sum_ab E_ab rho_ba
    const double v = (e.cwiseProduct(rho.matrix().transpose())).sum().real();
    p.push_back(std::clamp(v, 0.0, 1.0));
  }
  return p;
}

}  // namespace

std::vector<double> born_probabilities(const ProjectiveObservable& obs, const DensityMatrix& rho) {
  return born(obs.projectors(), rho);
}

std::vector<double> born_probabilities(const Povm& povm, const DensityMatrix& rho) {
  return born(povm.elements(), rho);
}

ProbVector pdv(const ProjectiveObservable& obs, const DensityMatrix& rho) {
  return ProbVector::from_unsorted(born_probabilities(obs, rho), 1.0);
}

ProbVector direct_sum_pdv(std::span<const ProjectiveObservable> observables,
                          const DensityMatrix& rho) {
  std::vector<ProbVector> parts;
  parts.reserve(observables.size());
  for (const auto& obs : observables) parts.push_back(pdv(obs, rho));
  return majorization::direct_sum(parts);
}

bool is_mub_pair(const ProjectiveObservable& a, const ProjectiveObservable& b, double tol) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "bases differ in dimension");
  const auto n = static_cast<std::size_t>(a.dim());
  if (a.outcome_count() != n || b.outcome_count() != n) {
    throw Error(ErrorKind::NotRankOne, "MUB check needs complete rank-one bases");
  }
  const auto va = a.basis_vectors();
  const auto vb = b.basis_vectors();
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (const auto& x : va) {
    for (const auto& y : vb) {
      if (std::abs(std::abs(x.dot(y)) - target) > tol) return false;
    }
  }
  return true;
}

DensityMatrix bloch_to_density(const Vec3& r) {
  if (r.norm() > 1.0 + 1e-10) {
    throw Error(ErrorKind::BlochNormExceeded, "Bloch vector norm " + std::to_string(r.norm()) + " > 1");
  }
  const Matrix m = (Matrix::Identity(2, 2) + r.x() * pauli_x() + r.y() * pauli_y() +
                    r.z() * pauli_z()) /
                   2.0;
  return DensityMatrix::from_matrix(m);
}

Vec3 density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorKind::WrongDimension, "Bloch vectors exist only for qubits");
  const Matrix& m = rho.matrix();
  return Vec3(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real());
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

DensityMatrix random_density(int dim, int rank, Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " invalid for dimension " +
                                        std::to_string(dim));
  }
  const Matrix g = ginibre(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho);
}

Ket random_ket(int dim, Rng& rng) {
  Ket v = ginibre(dim, 1, rng).col(0);
  return v.normalized();
}

Matrix random_unitary(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ProjectiveObservable random_basis_observable(std::string name, int dim, Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  std::vector<Ket> basis;
  for (int j = 0; j < dim; ++j) basis.push_back(u.col(j));
  return ProjectiveObservable::from_basis(std::move(name), basis, 1e-9);
}

std::vector<ProjectiveObservable> standard_mub_set(int dim) {
  if (dim == 2) {
    return {ProjectiveObservable::from_bloch_axis("pauli_x", Vec3::UnitX()),
            ProjectiveObservable::from_bloch_axis("pauli_y", Vec3::UnitY()),
            ProjectiveObservable::from_bloch_axis("pauli_z", Vec3::UnitZ())};
  }
  if (dim == 3) {
    std::vector<ProjectiveObservable> out;
    std::vector<Ket> computational;
    for (int k = 0; k < 3; ++k) computational.push_back(Ket::Unit(3, k));
    out.push_back(ProjectiveObservable::from_basis("computational", computational));
    // |a,b> = 3^{-1/2} sum_k w^{a k^2 + b k} |k>, w = exp(2 pi i / 3)
    for (int a = 0; a < 3; ++a) {
      std::vector<Ket> basis;
      for (int b = 0; b < 3; ++b) {
        Ket v(3);
        for (int k = 0; k < 3; ++k) {
          const double phase = 2.0 * std::numbers::pi * ((a * k * k + b * k) % 3) / 3.0;
          v(k) = std::polar(1.0 / std::sqrt(3.0), phase);
        }
        basis.push_back(v);
      }
      out.push_back(ProjectiveObservable::from_basis("quadratic_" + std::to_string(a), basis));
    }
    return out;
  }
  throw Error(ErrorKind::UnsupportedDimension,
              "explicit MUB sets are available for dimensions 2 and 3, not " + std::to_string(dim));
}

Matrix project_to_density(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(hermitian));
  const Eigen::VectorXd ev = es.eigenvalues();
  const auto n = ev.size();
  // Euclidean projection of the spectrum onto the probability simplex.
  std::vector<double> u(ev.data(), ev.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumulative += u[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  Eigen::VectorXd lambda = (ev.array() - theta).max(0.0);
  return es.eigenvectors() * lambda.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace uqcr::quantum
