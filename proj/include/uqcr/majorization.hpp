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

// Probability vectors as elements of the majorization lattice.
//
// A ProbVector is kept sorted in non-increasing order and carries its total
// (1 for a single measurement, M for a direct sum of M measurements). Vectors
// of different length but equal total are compared by zero padding.

#include <cstddef>
#include <span>
#include <vector>

namespace uqcr::majorization {

/// Absolute tolerance used by the lattice comparisons.
inline constexpr double kOrderTol = 1e-10;

class ProbVector {
 public:
  /// Sorts `raw` non-increasing. Round-off negatives (>= -1e-12) are clamped
  /// to zero and the residual of the total is added to the largest entry.
  static ProbVector from_unsorted(std::span<const double> raw, double total);

  /// Takes `sorted` verbatim after validating order, range and total. Used
  /// when reading vectors back from files so values survive bit for bit.
  static ProbVector from_sorted(std::span<const double> sorted, double total);

  /// Increments of a prefix-sum sequence L_0 = 0, L_1, ..., L_n. Tiny
  /// ordering violations from floating point are repaired by sorting.
  static ProbVector from_prefix_sums(std::span<const double> prefix, double total);

  const std::vector<double>& entries() const noexcept { return entries_; }
  double total() const noexcept { return total_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  /// Prefix sums with a leading zero, padded with the total up to `length`.
  std::vector<double> prefix_sums(std::size_t length = 0) const;

  bool operator==(const ProbVector&) const = default;

 private:
  ProbVector(std::vector<double> entries, double total)
      : entries_(std::move(entries)), total_(total) {}

  std::vector<double> entries_;
  double total_ = 0.0;
};

struct LorenzCurve {
  /// points[k] = L_k, points[0] = 0.
  std::vector<double> points;
  double total = 0.0;
};

enum class LogBase { Bits, Nats };

bool is_majorized_by(const ProbVector& a, const ProbVector& b, double tol = kOrderTol);

ProbVector meet(const ProbVector& a, const ProbVector& b);
ProbVector meet_all(std::span<const ProbVector> set);
ProbVector join(const ProbVector& a, const ProbVector& b);
ProbVector join_all(std::span<const ProbVector> set);

/// Concatenation of single-measurement PDVs, re-sorted; total = count.
ProbVector direct_sum(std::span<const ProbVector> vectors);

LorenzCurve lorenz(const ProbVector& p);

/// Least concave majorant of the points (k, values[k]), evaluated at every k.
std::vector<double> least_concave_majorant(std::span<const double> values);

double shannon_entropy(std::span<const double> p, LogBase base = LogBase::Bits);
double shannon_entropy(const ProbVector& p, LogBase base = LogBase::Bits);

/// sum_i t_i log(t_i / P_i), weights taken from the first argument.
/// Throws SupportMismatch when t_i > 0 and P_i = 0.
double relative_entropy_term(const ProbVector& t, const ProbVector& P,
                             LogBase base = LogBase::Bits);

/// Kullback-Leibler divergence sum_i p_i log(p_i / q_i) over sorted entries.
/// Throws SupportMismatch when p_i > 0 and q_i = 0.
double kl_divergence(const ProbVector& p, const ProbVector& q,
                     LogBase base = LogBase::Bits);

}  // namespace uqcr::majorization
