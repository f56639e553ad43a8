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

// Smoothed min-max over state families that live on a real unit sphere.
//
// Every family is written as x in S^{d-1} with objective values
// f_j(x) = x^T Q_j x + l_j . x + o_j: pure states use the real form of the
// ket, mixed states a purification, fixed-norm qubits the Bloch direction.
// max_j f_j is replaced by the log-sum-exp surrogate with inverse
// temperature beta and minimized by damped Riemannian Newton steps; beta
// grows by a decade per stage (path following) until the surrogate error
// log(J)/beta is near 1e-9. The best exact objective seen is returned.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "solver_detail.hpp"

namespace uqcr::bounds::detail {
namespace {

using quantum::Complex;

// Longest tangent step (radians, roughly) taken by one Newton iteration.
constexpr double kMaxStep = 0.25;
constexpr std::array<double, 9> kBetas = {1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9};

struct SphereProblem {
  std::vector<Eigen::MatrixXd> quad;  // empty for affine families
  Eigen::MatrixXd lin;                // J x d, or empty
  Eigen::VectorXd offset;             // J
  Eigen::Index dim = 0;

  Eigen::Index count() const { return offset.size(); }

  Eigen::VectorXd values(const Eigen::VectorXd& x) const {
    Eigen::VectorXd v = offset;
    if (lin.size() > 0) v += lin * x;
    for (std::size_t j = 0; j < quad.size(); ++j) v(static_cast<Eigen::Index>(j)) += x.dot(quad[j] * x);
    return v;
  }

  // Ambient gradients as columns.
  Eigen::MatrixXd gradients(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd g(dim, count());
    if (lin.size() > 0) {
      g = lin.transpose();
    } else {
      g.setZero();
    }
    for (std::size_t j = 0; j < quad.size(); ++j) g.col(static_cast<Eigen::Index>(j)) += 2.0 * quad[j] * x;
    return g;
  }
};

struct Smoothed {
  double value = 0.0;
  Eigen::VectorXd weights;
};

Smoothed smooth(const Eigen::VectorXd& v, double beta) {
  const double top = v.maxCoeff();
  Eigen::VectorXd w = ((v.array() - top) * beta).exp().matrix();
  const double total = w.sum();
  return {top + std::log(total) / beta, w / total};
}

Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(x.size(), x.size());
  return q.rightCols(x.size() - 1);
}

struct SphereResult {
  Eigen::VectorXd x;
  double value = 0.0;
  Eigen::Index argmax = 0;
  int iterations = 0;
  Eigen::VectorXd weights;
};

SphereResult minimize_on_sphere(const SphereProblem& p, Eigen::VectorXd x, int max_iter) {
  x.normalize();
  SphereResult best;
  Eigen::VectorXd v = p.values(x);
  best.value = v.maxCoeff(&best.argmax);
  best.x = x;
  best.weights = Eigen::VectorXd::Zero(p.count());
  best.weights(best.argmax) = 1.0;
  const int per_stage = std::max(10, max_iter / static_cast<int>(kBetas.size()));

  for (double beta : kBetas) {
    Smoothed cur = smooth(v, beta);
    for (int it = 0; it < per_stage; ++it) {
      ++best.iterations;
      const Eigen::MatrixXd basis = tangent_basis(x);
      const Eigen::MatrixXd grads = basis.transpose() * p.gradients(x);  // (d-1) x J
      const Eigen::VectorXd g = grads * cur.weights;
      // Riemannian Hessian of the surrogate in tangent coordinates.
      Eigen::MatrixXd h = beta * (grads * cur.weights.asDiagonal() * grads.transpose() - g * g.transpose());
      double radial = 0.0;  // sum_j w_j x . grad f_j
      const Eigen::MatrixXd amb = p.gradients(x);
      for (Eigen::Index j = 0; j < p.count(); ++j) radial += cur.weights(j) * x.dot(amb.col(j));
      if (!p.quad.empty()) {
        Eigen::MatrixXd q = Eigen::MatrixXd::Zero(p.dim, p.dim);
        for (std::size_t j = 0; j < p.quad.size(); ++j) {
          const double w = cur.weights(static_cast<Eigen::Index>(j));
          if (w > 1e-300) q += w * p.quad[j];
        }
        h += 2.0 * basis.transpose() * q * basis;
      }
      h -= radial * Eigen::MatrixXd::Identity(h.rows(), h.cols());

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
      const Eigen::VectorXd lam = es.eigenvalues();
      const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
      const double floor = 1e-12 * scale;
      Eigen::VectorXd inv(lam.size());
      for (Eigen::Index i = 0; i < lam.size(); ++i) inv(i) = 1.0 / std::max(std::abs(lam(i)), floor);
      const Eigen::MatrixXd& vecs = es.eigenvectors();
      Eigen::VectorXd step = -(vecs * (inv.asDiagonal() * (vecs.transpose() * g)));
      if (step.norm() > kMaxStep) step *= kMaxStep / step.norm();
      double slope = g.dot(step);
      // Near a stationary point that is not a minimum (symmetric saddles show up
      // when several choices tie), follow the most negative curvature instead.
      const bool stalled = !(slope < 0.0) || -slope < 1e-22;
      const bool concave = lam(0) < -1e-9 * scale;
      if (stalled && !concave) break;

      double t = 1.0;
      bool accepted = false;
      if (stalled) {
        const Eigen::VectorXd dir = vecs.col(0) * kMaxStep;
        for (int ls = 0; ls < 40 && !accepted; ++ls, t *= 0.5) {
          for (double sign : {1.0, -1.0}) {
            const Eigen::VectorXd trial = (x + sign * t * (basis * dir)).normalized();
            const Eigen::VectorXd tv = p.values(trial);
            const Smoothed next = smooth(tv, beta);
            if (next.value < cur.value) {
              x = trial;
              v = tv;
              cur = next;
              accepted = true;
              break;
            }
          }
        }
        slope = -1.0;  // keep iterating from the new point
      } else {
        for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
          const Eigen::VectorXd trial = (x + t * (basis * step)).normalized();
          const Eigen::VectorXd tv = p.values(trial);
          const Smoothed next = smooth(tv, beta);
          if (next.value <= cur.value + 1e-4 * t * slope) {
            x = trial;
            v = tv;
            cur = next;
            accepted = true;
            break;
          }
        }
      }
      if (!accepted) break;
      Eigen::Index arg = 0;
      const double exact = v.maxCoeff(&arg);
      if (exact < best.value) {
        best.value = exact;
        best.argmax = arg;
        best.x = x;
        best.weights = cur.weights;
      }
      if (-slope < 1e-20) break;
    }
  }
  return best;
}

// Real symmetric form of a Hermitian matrix acting on (Re psi, Im psi).
Eigen::MatrixXd real_form(const Matrix& c) {
  const auto n = c.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = c.real();
  r.topRightCorner(n, n) = -c.imag();
  r.bottomLeftCorner(n, n) = c.imag();
  r.bottomRightCorner(n, n) = c.real();
  return r;
}

Eigen::VectorXd real_coords(const quantum::Ket& psi) {
  Eigen::VectorXd x(2 * psi.size());
  x.head(psi.size()) = psi.real();
  x.tail(psi.size()) = psi.imag();
  return x;
}

quantum::Ket complex_coords(const Eigen::VectorXd& x) {
  const auto n = x.size() / 2;
  quantum::Ket psi(n);
  for (Eigen::Index i = 0; i < n; ++i) psi(i) = Complex(x(i), x(i + n));
  return psi;
}

MinimaxResult finish(const SphereResult& r, Matrix state) {
  MinimaxResult out;
  out.state = std::move(state);
  out.value = r.value;
  out.argmax = r.argmax;
  out.iterations = r.iterations;
  return out;
}

}  // namespace

Eigen::VectorXd pack_state(const Matrix& rho) {
  const auto n = rho.rows();
  Eigen::VectorXd x(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index a = 0; a < n; ++a) x(k++) = rho(a, a).real();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      x(k++) = rho(a, b).real();
      x(k++) = rho(a, b).imag();
    }
  }
  return x;
}

Eigen::VectorXd pack_functional(const Matrix& c) {
  // Tr[C rho] = sum_a C_aa rho_aa + 2 sum_{a<b} Re(C_ab conj(rho_ab))
  Eigen::VectorXd x = pack_state(c);
  x.tail(x.size() - c.rows()) *= 2.0;
  return x;
}

Matrix unpack_functional(const Eigen::VectorXd& g, int dim) {
  Matrix m(dim, dim);
  Eigen::Index k = 0;
  for (int a = 0; a < dim; ++a) m(a, a) = g(k++);
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      m(a, b) = Complex(g(k), g(k + 1)) / 2.0;
      m(b, a) = std::conj(m(a, b));
      k += 2;
    }
  }
  return m;
}

Eigen::MatrixXd functional_rows(const std::vector<Matrix>& ops) {
  const auto n = ops.front().rows();
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(ops.size()), n * n);
  for (std::size_t j = 0; j < ops.size(); ++j) {
    rows.row(static_cast<Eigen::Index>(j)) = pack_functional(ops[j]).transpose();
  }
  return rows;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MinimaxResult minimize_over_pure(const std::vector<Matrix>& ops, const Ket& start, int max_iter) {
  SphereProblem p;
  p.dim = 2 * start.size();
  p.offset = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ops.size()));
  for (const auto& c : ops) p.quad.push_back(real_form(c));
  const auto r = minimize_on_sphere(p, real_coords(start), max_iter);
  const Ket psi = complex_coords(r.x).normalized();
  return finish(r, psi * psi.adjoint());
}

MinimaxResult minimize_over_density(const std::vector<Matrix>& ops, const Matrix& start,
                                    int max_iter) {
  const auto n = start.rows();
  // |Psi> in C^n (x) C^n with rho = Tr_2 |Psi><Psi|; index a * n + b.
  std::vector<Matrix> lifted;
  lifted.reserve(ops.size());
  for (const auto& c : ops) {
    Matrix big = Matrix::Zero(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index a2 = 0; a2 < n; ++a2) {
        for (Eigen::Index b = 0; b < n; ++b) big(a * n + b, a2 * n + b) = c(a, a2);
      }
    }
    lifted.push_back(std::move(big));
  }
  // Purify the start: X = sqrt(rho) in matrix form.
  Eigen::SelfAdjointEigenSolver<Matrix> es(quantum::project_to_density(start));
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix x0 = es.eigenvectors() * roots.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  Ket psi0(n * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) psi0(a * n + b) = x0(a, b);
  }

  SphereProblem p;
  p.dim = 2 * n * n;
  p.offset = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ops.size()));
  for (const auto& c : lifted) p.quad.push_back(real_form(c));
  const auto r = minimize_on_sphere(p, real_coords(psi0), max_iter);

  const Ket psi = complex_coords(r.x).normalized();
  Matrix x(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) x(a, b) = psi(a * n + b);
  }
  MinimaxResult out = finish(r, x * x.adjoint());
  // lambda_min(sum_j w_j C_j) <= min_rho max_j Tr[C_j rho] for any weights w.
  Matrix g = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < ops.size(); ++j) g += r.weights(static_cast<Eigen::Index>(j)) * ops[j];
  Eigen::SelfAdjointEigenSolver<Matrix> dual(g, Eigen::EigenvaluesOnly);
  out.dual_lower = dual.eigenvalues()(0);
  return out;
}

MinimaxResult minimize_over_bloch_sphere(const std::vector<Matrix>& ops, double radius,
                                         const Vec3& start, int max_iter) {
  // Tr[C rho] = Tr[C]/2 + (radius/2) u . (Tr[C sigma_x], Tr[C sigma_y], Tr[C sigma_z])
  SphereProblem p;
  p.dim = 3;
  const auto count = static_cast<Eigen::Index>(ops.size());
  p.offset.resize(count);
  p.lin.resize(count, 3);
  for (Eigen::Index j = 0; j < count; ++j) {
    const Matrix& c = ops[static_cast<std::size_t>(j)];
    p.offset(j) = c.trace().real() / 2.0;
    p.lin(j, 0) = radius / 2.0 * (c * quantum::pauli_x()).trace().real();
    p.lin(j, 1) = radius / 2.0 * (c * quantum::pauli_y()).trace().real();
    p.lin(j, 2) = radius / 2.0 * (c * quantum::pauli_z()).trace().real();
  }
  const Eigen::VectorXd u0 = start.norm() > 0.0 ? Vec3(start.normalized()) : Vec3(Vec3::UnitZ());
  const auto r = minimize_on_sphere(p, u0, max_iter);
  const Vec3 rv = radius * Vec3(r.x);
  const Matrix state = (Matrix::Identity(2, 2) + rv.x() * quantum::pauli_x() +
                        rv.y() * quantum::pauli_y() + rv.z() * quantum::pauli_z()) /
                       2.0;
  return finish(r, state);
}

}  // namespace uqcr::bounds::detail
