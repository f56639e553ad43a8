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

#include "uqcr/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "solver_detail.hpp"
#include "uqcr/error.hpp"

namespace uqcr::bounds {
namespace {

using detail::functional_rows;
using detail::mix_seed;
using detail::pack_state;
using quantum::Ket;
using quantum::Rng;
using quantum::Vec3;

// Total number of choice operators over all levels for which the oracle
// still seeds itself with their eigenstates.
constexpr double kCandidateBudget = 50000;

std::size_t count_outcomes(std::span<const ProjectiveObservable> observables) {
  std::size_t k = 0;
  for (const auto& o : observables) k += o.outcome_count();
  return k;
}

int shared_dim(std::span<const ProjectiveObservable> observables) {
  if (observables.empty()) throw Error(ErrorKind::EmptySet, "no observables");
  const int dim = observables.front().dim();
  for (const auto& o : observables) {
    if (o.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "observables act on different dimensions");
    }
  }
  return dim;
}

Matrix bloch_matrix(const Vec3& r) {
  return (Matrix::Identity(2, 2) + r.x() * quantum::pauli_x() + r.y() * quantum::pauli_y() +
          r.z() * quantum::pauli_z()) /
         2.0;
}

Vec3 bloch_of(const Matrix& m) {
  return Vec3(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real());
}

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Matrix sample_matrix(const StateConstraint& c, int dim, Rng& rng) {
  switch (c.kind) {
    case StateConstraint::Kind::AllStates:
      return quantum::random_density(dim, dim, rng).matrix();
    case StateConstraint::Kind::PureOnly: {
      const Ket psi = quantum::random_ket(dim, rng);
      return psi * psi.adjoint();
    }
    case StateConstraint::Kind::FixedBlochNorm:
      return bloch_matrix(c.bloch_norm * random_direction(rng));
  }
  return {};
}

// Moves a pure candidate state into the constrained set.
Matrix admissible_from_pure(const StateConstraint& c, const Ket& psi) {
  if (c.kind == StateConstraint::Kind::FixedBlochNorm) {
    const Vec3 r = bloch_of(psi * psi.adjoint());
    return bloch_matrix(c.bloch_norm * r.normalized());
  }
  return psi * psi.adjoint();
}

Ket top_eigenvector(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvectors().col(m.rows() - 1);
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, const F& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Matrix> operators_of(const std::vector<ChoiceOperator>& choices) {
  std::vector<Matrix> ops;
  ops.reserve(choices.size());
  for (const auto& c : choices) ops.push_back(c.op);
  return ops;
}

std::vector<Matrix> all_projectors(std::span<const ProjectiveObservable> observables) {
  std::vector<Matrix> out;
  for (const auto& o : observables) out.insert(out.end(), o.projectors().begin(), o.projectors().end());
  return out;
}

BoundCertificate solve_min_level(std::span<const ProjectiveObservable> observables, std::size_t n,
                                 const StateConstraint& constraint, const SolverConfig& cfg,
                                 const SamplingOracle& oracle) {
  const int dim = shared_dim(observables);
  auto choices = enumerate_choices(observables, n);
  const std::vector<Matrix> ops = operators_of(choices);
  const Eigen::MatrixXd rows = functional_rows(ops);
  auto objective = [&](const Matrix& m) { return (rows * pack_state(m)).maxCoeff(); };

  const std::size_t starts_wanted = static_cast<std::size_t>(std::max(1, cfg.multistarts));
  std::vector<Matrix> starts{oracle.argmin(n).matrix()};

  // Eigenstates of this level's choice operators, best objective first.
  std::vector<std::pair<double, Matrix>> eigen_candidates;
  for (const auto& c : choices) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(c.op);
    for (int k = 0; k < dim; ++k) {
      Matrix m = admissible_from_pure(constraint, es.eigenvectors().col(k));
      eigen_candidates.emplace_back(objective(m), std::move(m));
    }
  }
  std::stable_sort(eigen_candidates.begin(), eigen_candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t eigen_starts = std::min(eigen_candidates.size(), (starts_wanted - 1) / 2);
  for (std::size_t k = 0; k < eigen_starts; ++k) starts.push_back(eigen_candidates[k].second);
  for (std::size_t k = starts.size(); k < starts_wanted; ++k) {
    Rng rng(mix_seed(cfg.seed, n, k));
    starts.push_back(sample_matrix(constraint, dim, rng));
  }

  std::vector<detail::MinimaxResult> results(starts.size());
  parallel_for(starts.size(), cfg.threads, [&](std::size_t k) {
    switch (constraint.kind) {
      case StateConstraint::Kind::AllStates:
        results[k] = detail::minimize_over_density(ops, starts[k], cfg.max_iter);
        break;
      case StateConstraint::Kind::PureOnly:
        results[k] = detail::minimize_over_pure(ops, top_eigenvector(starts[k]), cfg.max_iter);
        break;
      case StateConstraint::Kind::FixedBlochNorm:
        results[k] = detail::minimize_over_bloch_sphere(ops, constraint.bloch_norm,
                                                        bloch_of(starts[k]), cfg.max_iter);
        break;
    }
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].value < results[best].value) best = k;
  }
  const auto& r = results[best];
  BoundCertificate cert;
  cert.level = n;
  cert.kind = BoundKind::Min;
  cert.value = r.value;
  cert.state = DensityMatrix::from_matrix(r.state, 1e-9);
  cert.choice = std::move(choices[static_cast<std::size_t>(r.argmax)]);
  cert.diagnostics.iterations = r.iterations;
  cert.diagnostics.multistart_index = static_cast<int>(best);
  cert.diagnostics.residual = r.value - oracle.min_prefix(n);
  if (r.dual_lower) cert.diagnostics.dual_gap = r.value - *r.dual_lower;
  if (cert.diagnostics.residual > cfg.tol) {
    char excess[32];
    std::snprintf(excess, sizeof excess, "%.3e", cert.diagnostics.residual);
    throw Error(ErrorKind::SolverDiverged,
                "level " + std::to_string(n) + ": solver value exceeds the sampling oracle minimum " +
                    std::to_string(oracle.min_prefix(n)) + " by " +
                    excess);
  }
  return cert;
}

}  // namespace

void StateConstraint::validate(int dim) const {
  if (kind != Kind::FixedBlochNorm) return;
  if (dim != 2) {
    throw Error(ErrorKind::WrongDimension, "fixed Bloch norm constraint requires dimension 2");
  }
  if (!(bloch_norm >= 0.0 && bloch_norm <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "Bloch norm " + std::to_string(bloch_norm) + " outside [0, 1]");
  }
}

bool StateConstraint::admits(const DensityMatrix& rho, double tol) const {
  switch (kind) {
    case Kind::AllStates:
      return true;
    case Kind::PureOnly:
      return rho.purity() >= 1.0 - tol;
    case Kind::FixedBlochNorm:
      return rho.dim() == 2 && std::abs(quantum::density_to_bloch(rho).norm() - bloch_norm) <= tol;
  }
  return false;
}

DensityMatrix sample_state(const StateConstraint& constraint, int dim, quantum::Rng& rng) {
  constraint.validate(dim);
  return DensityMatrix::from_matrix(sample_matrix(constraint, dim, rng), 1e-9);
}

SamplingOracle SamplingOracle::build(std::span<const ProjectiveObservable> observables,
                                     const StateConstraint& constraint, std::size_t samples,
                                     std::uint64_t seed) {
  const int dim = shared_dim(observables);
  constraint.validate(dim);
  const std::size_t total = count_outcomes(observables);
  const Eigen::MatrixXd proj_rows = functional_rows(all_projectors(observables));

  SamplingOracle o;
  o.min_prefix_.assign(total + 1, std::numeric_limits<double>::infinity());
  o.max_prefix_.assign(total + 1, -std::numeric_limits<double>::infinity());
  std::vector<Matrix> argmin(total + 1, Matrix::Identity(dim, dim) / dim);

  std::vector<double> p(total);
  auto consider = [&](const Matrix& m) {
    const Eigen::VectorXd probs = proj_rows * pack_state(m);
    std::copy(probs.data(), probs.data() + probs.size(), p.begin());
    std::sort(p.begin(), p.end(), std::greater<>());
    double acc = 0.0;
    for (std::size_t n = 1; n <= total; ++n) {
      acc += p[n - 1];
      if (acc < o.min_prefix_[n]) {
        o.min_prefix_[n] = acc;
        argmin[n] = m;
      }
      o.max_prefix_[n] = std::max(o.max_prefix_[n], acc);
    }
  };

  // Eigenstates of the choice operators of every level.
  double budget = 0.0;
  for (std::size_t n = 1; n < total; ++n) {
    double c = 1.0;
    for (std::size_t i = 1; i <= n; ++i) c = c * static_cast<double>(total - n + i) / static_cast<double>(i);
    budget += c;
  }
  if (budget <= kCandidateBudget) {
    for (std::size_t n = 1; n < total; ++n) {
      for (const auto& c : enumerate_choices(observables, n)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(c.op);
        for (int k = 0; k < dim; ++k) consider(admissible_from_pure(constraint, es.eigenvectors().col(k)));
      }
    }
  }
  Rng rng(mix_seed(seed, 0x6f7261636c65ULL));
  for (std::size_t s = 0; s < samples; ++s) consider(sample_matrix(constraint, dim, rng));
  if (samples == 0 && budget > kCandidateBudget) consider(sample_matrix(constraint, dim, rng));

  o.min_prefix_[0] = 0.0;
  o.max_prefix_[0] = 0.0;
  for (std::size_t n = 0; n <= total; ++n) {
    o.argmin_.push_back(DensityMatrix::from_matrix(argmin[n], 1e-9));
  }
  return o;
}

BoundCertificate min_topn_over_states(std::span<const ProjectiveObservable> observables,
                                      std::size_t n, const StateConstraint& constraint,
                                      const SolverConfig& cfg) {
  const auto oracle = SamplingOracle::build(observables, constraint, cfg.oracle_samples, cfg.seed);
  return solve_min_level(observables, n, constraint, cfg, oracle);
}

BoundCertificate max_topn_over_states(std::span<const ProjectiveObservable> observables,
                                      std::size_t n, const StateConstraint& constraint) {
  const int dim = shared_dim(observables);
  constraint.validate(dim);
  auto choices = enumerate_choices(observables, n);
  double best_value = -std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  Matrix best_state;
  for (std::size_t j = 0; j < choices.size(); ++j) {
    const Matrix& op = choices[j].op;
    double value = 0.0;
    Matrix state;
    if (constraint.kind == StateConstraint::Kind::FixedBlochNorm) {
      // Tr[C rho] = Tr[C]/2 + (R/2) b.u with b_i = Tr[C sigma_i]
      const Vec3 b((op * quantum::pauli_x()).trace().real(), (op * quantum::pauli_y()).trace().real(),
                   (op * quantum::pauli_z()).trace().real());
      value = op.trace().real() / 2.0 + constraint.bloch_norm * b.norm() / 2.0;
      const Vec3 dir = b.norm() > 0.0 ? Vec3(b.normalized()) : Vec3(Vec3::UnitZ());
      state = bloch_matrix(constraint.bloch_norm * dir);
    } else {
      Eigen::SelfAdjointEigenSolver<Matrix> es(op);
      value = es.eigenvalues()(dim - 1);
      const Ket v = es.eigenvectors().col(dim - 1);
      state = v * v.adjoint();
    }
    if (value > best_value) {
      best_value = value;
      best = j;
      best_state = std::move(state);
    }
  }
  BoundCertificate cert;
  cert.level = n;
  cert.kind = BoundKind::Max;
  cert.value = best_value;
  cert.state = DensityMatrix::from_matrix(best_state, 1e-9);
  cert.choice = std::move(choices[best]);
  cert.diagnostics.iterations = 0;
  cert.diagnostics.multistart_index = 0;
  cert.diagnostics.residual = 0.0;
  return cert;
}

BoundResult infimum_t(std::span<const ProjectiveObservable> observables,
                      const StateConstraint& constraint, const SolverConfig& cfg) {
  const int dim = shared_dim(observables);
  constraint.validate(dim);
  const std::size_t total = count_outcomes(observables);
  const double m_total = static_cast<double>(observables.size());
  const auto oracle = SamplingOracle::build(observables, constraint, cfg.oracle_samples, cfg.seed);

  BoundResult out{ProbVector::from_unsorted(std::vector<double>(1, 1.0), 1.0), {}};
  std::vector<double> minima(total + 1, 0.0);
  minima[total] = m_total;
  for (std::size_t n = 1; n < total; ++n) {
    out.certificates.push_back(solve_min_level(observables, n, constraint, cfg, oracle));
    minima[n] = out.certificates.back().value;
  }
  for (std::size_t n = 1; n + 1 <= total; ++n) {
    const double prev = minima[n] - minima[n - 1];
    const double next = minima[n + 1] - minima[n];
    if (next > prev + 1e-7) {
      throw Error(ErrorKind::SolverDiverged,
                  "prefix minima are not concave at level " + std::to_string(n));
    }
  }
  out.vector = ProbVector::from_prefix_sums(minima, m_total);
  return out;
}

BoundResult supremum_s(std::span<const ProjectiveObservable> observables,
                       const StateConstraint& constraint) {
  const int dim = shared_dim(observables);
  constraint.validate(dim);
  const std::size_t total = count_outcomes(observables);
  const double m_total = static_cast<double>(observables.size());

  BoundResult out{ProbVector::from_unsorted(std::vector<double>(1, 1.0), 1.0), {}};
  std::vector<double> maxima(total + 1, 0.0);
  maxima[total] = m_total;
  for (std::size_t n = 1; n < total; ++n) {
    out.certificates.push_back(max_topn_over_states(observables, n, constraint));
    maxima[n] = out.certificates.back().value;
  }
  out.vector = ProbVector::from_prefix_sums(majorization::least_concave_majorant(maxima), m_total);
  return out;
}

ProbVector two_basis_trivial_bound(int dim) {
  if (dim < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
  return ProbVector::from_unsorted(std::vector<double>(2 * dim, 1.0 / dim), 2.0);
}

ProbVector qubit_example2_t(double phi, double r_norm) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 4 + 1e-12)) {
    throw Error(ErrorKind::InvalidArgument, "phi must lie in [0, pi/4]");
  }
  if (!(r_norm >= 0.0 && r_norm <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "Bloch norm must lie in [0, 1]");
  }
  // Level-1 minimizer r1 = |r|(sin v cos p, sin v sin p, cos v), tan v = 1/sin p,
  // p = pi/4 - phi/2; levels 2..4 are minimized by r = |r|(1, 0, 0).
  const double s = std::sin(std::numbers::pi / 4 - phi / 2);
  const double cos_v = s / std::sqrt(1.0 + s * s);
  const double a = 0.5 * r_norm * cos_v;
  const double b = 0.5 * r_norm * std::cos(phi);
  const std::vector<double> t = {0.5 + a, 0.5 + b - a, 0.5, 0.5, 0.5 - b + a, 0.5 - a};
  return ProbVector::from_unsorted(t, 3.0);
}

ProbVector qubit_mub_t(double r_norm) {
  if (!(r_norm >= 0.0 && r_norm <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "Bloch norm must lie in [0, 1]");
  }
  const double a = r_norm / (2.0 * std::sqrt(3.0));
  const double b = r_norm / 2.0;
  const std::vector<double> t = {0.5 + a, 0.5 + b - a, 0.5, 0.5, 0.5 - b + a, 0.5 - a};
  return ProbVector::from_unsorted(t, 3.0);
}

}  // namespace uqcr::bounds
