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

#include "uqcr/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "uqcr/error.hpp"

namespace uqcr::coherence {
namespace {

using quantum::Ket;
using quantum::Matrix;

constexpr double kRankTol = 1e-12;

void require_complete_basis(const quantum::ProjectiveObservable& basis) {
  if (!basis.is_rank_one() || static_cast<int>(basis.outcome_count()) != basis.dim()) {
    throw Error(ErrorKind::NotRankOne,
                "basis '" + basis.name() + "' is not a complete orthonormal basis");
  }
}

// Sum over ensemble members of the sorted |<k|phi>|^2, where the members are
// unnormalized (their squared norms are the ensemble weights).
ProbVector ensemble_average(const std::vector<Ket>& members, const Matrix& basis_adj) {
  const auto n = basis_adj.rows();
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  std::vector<double> amp(static_cast<std::size_t>(n));
  for (const auto& phi : members) {
    const Ket c = basis_adj * phi;
    for (Eigen::Index k = 0; k < n; ++k) amp[static_cast<std::size_t>(k)] = std::norm(c(k));
    std::sort(amp.begin(), amp.end(), std::greater<>());
    for (std::size_t k = 0; k < amp.size(); ++k) acc[k] += amp[k];
  }
  double total = 0.0;
  for (double a : acc) total += a;
  for (double& a : acc) a /= total;  // absorbs round-off in the ensemble weights
  return ProbVector::from_unsorted(acc, 1.0);
}

Matrix basis_matrix(const quantum::ProjectiveObservable& basis) {
  const auto vecs = basis.basis_vectors();
  Matrix b(basis.dim(), basis.dim());
  for (std::size_t k = 0; k < vecs.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = vecs[k];
  return b;
}

}  // namespace

const char* to_string(Exactness e) noexcept {
  return e == Exactness::Exact ? "exact" : "approximate_lower";
}

CoherenceVector coherence_vector_pure(const Ket& psi, const quantum::ProjectiveObservable& basis) {
  require_complete_basis(basis);
  if (psi.size() != basis.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state and basis '" + basis.name() +
                                                  "' have different dimensions");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::NotNormalized, "state vector norm is " + std::to_string(psi.norm()));
  }
  const auto rho = quantum::DensityMatrix::from_ket(psi);
  return {basis.name(), quantum::pdv(basis, rho), Exactness::Exact};
}

CoherenceVector coherence_vector_mixed_approx(const quantum::DensityMatrix& rho,
                                              const quantum::ProjectiveObservable& basis,
                                              const SamplingConfig& cfg) {
  require_complete_basis(basis);
  if (rho.dim() != basis.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state and basis '" + basis.name() +
                                                  "' have different dimensions");
  }
  const Matrix b = basis_matrix(basis);
  const Matrix b_adj = b.adjoint();

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  std::vector<Ket> eigen_members;
  for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
    const double q = es.eigenvalues()(k);
    if (q > kRankTol) eigen_members.push_back(std::sqrt(q) * es.eigenvectors().col(k));
  }
  const int rank = static_cast<int>(eigen_members.size());
  if (rank == 1) {
    return {basis.name(), ensemble_average(eigen_members, b_adj), Exactness::Exact};
  }

  std::vector<ProbVector> candidates;
  candidates.push_back(ensemble_average(eigen_members, b_adj));

  // Incoherent states: the basis states themselves form an ensemble.
  const Matrix in_basis = b_adj * rho.matrix() * b;
  if ((in_basis - Matrix(in_basis.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <= 1e-10) {
    std::vector<Ket> members;
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      const double q = std::max(0.0, in_basis(k, k).real());
      if (q > 0.0) members.push_back(std::sqrt(q) * b.col(k));
    }
    candidates.push_back(ensemble_average(members, b_adj));
  }

  quantum::Rng rng(cfg.seed);
  std::vector<Ket> mixed(eigen_members.size());
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Matrix u = quantum::random_unitary(rank, rng);
    for (int a = 0; a < rank; ++a) {
      mixed[a] = Ket::Zero(rho.dim());
      for (int k = 0; k < rank; ++k) mixed[a] += u(a, k) * eigen_members[k];
    }
    candidates.push_back(ensemble_average(mixed, b_adj));
  }

  CoherenceVector out{basis.name(), majorization::join_all(candidates),
                      Exactness::ApproximateLower};
  if (out.vector[0] >= 1.0 - 1e-12) out.exactness = Exactness::Exact;
  return out;
}

ComplementarityBounds coherence_complementarity_bounds(
    std::span<const quantum::ProjectiveObservable> bases, const bounds::SolverConfig& cfg,
    majorization::LogBase base) {
  if (bases.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "complementarity needs at least two bases, got " +
                                                std::to_string(bases.size()));
  }
  for (const auto& b : bases) require_complete_basis(b);
  const auto pure = bounds::StateConstraint::pure_only();
  auto t = bounds::infimum_t(bases, pure, cfg);
  auto s = bounds::supremum_s(bases, pure);
  ComplementarityBounds out{std::move(t.vector), std::move(s.vector)};
  out.entropy_mu_t = majorization::shannon_entropy(out.mu_t, base);
  out.entropy_mu_s = majorization::shannon_entropy(out.mu_s, base);
  return out;
}

}  // namespace uqcr::coherence
