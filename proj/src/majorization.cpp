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

#include "uqcr/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "uqcr/error.hpp"

namespace uqcr::majorization {
namespace {

constexpr double kNegativeTol = 1e-12;
constexpr double kSumTol = 1e-9;

void check_totals(double a, double b) {
  if (std::abs(a - b) > kSumTol) {
    throw Error(ErrorKind::TotalMismatch,
                "totals differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

double log_in(double x, LogBase base) {
  return base == LogBase::Bits ? std::log2(x) : std::log(x);
}

// Entry-wise combination of padded prefix sums across a set.
std::vector<double> combine_prefix(std::span<const ProbVector> set,
                                   const std::function<double(double, double)>& pick) {
  if (set.empty()) throw Error(ErrorKind::EmptySet, "empty vector set");
  std::size_t len = 0;
  for (const auto& v : set) {
    check_totals(set.front().total(), v.total());
    len = std::max(len, v.size());
  }
  std::vector<double> out = set.front().prefix_sums(len);
  for (std::size_t m = 1; m < set.size(); ++m) {
    const auto p = set[m].prefix_sums(len);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = pick(out[k], p[k]);
  }
  return out;
}

}  // namespace

ProbVector ProbVector::from_unsorted(std::span<const double> raw, double total) {
  std::vector<double> v(raw.begin(), raw.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= -kNegativeTol)) {
      throw Error(ErrorKind::NegativeEntry,
                  "entry " + std::to_string(i) + " is negative: " + std::to_string(v[i]));
    }
    v[i] = std::max(v[i], 0.0);
    sum += v[i];
  }
  if (!(std::abs(sum - total) <= kSumTol)) {
    throw Error(ErrorKind::SumMismatch, "entries sum to " + std::to_string(sum) +
                                            ", expected " + std::to_string(total));
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (!v.empty()) v.front() += total - std::accumulate(v.begin(), v.end(), 0.0);
  return ProbVector(std::move(v), total);
}

ProbVector ProbVector::from_sorted(std::span<const double> sorted, double total) {
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!(sorted[i] >= -kNegativeTol)) {
      throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i) + " is negative");
    }
    if (i > 0 && sorted[i] > sorted[i - 1] + kNegativeTol) {
      throw Error(ErrorKind::InvalidArgument,
                  "entries are not non-increasing at index " + std::to_string(i));
    }
    sum += sorted[i];
  }
  if (!(std::abs(sum - total) <= kSumTol)) {
    throw Error(ErrorKind::SumMismatch, "entries sum to " + std::to_string(sum) +
                                            ", expected " + std::to_string(total));
  }
  return ProbVector(std::vector<double>(sorted.begin(), sorted.end()), total);
}

ProbVector ProbVector::from_prefix_sums(std::span<const double> prefix, double total) {
  if (prefix.empty()) throw Error(ErrorKind::EmptySet, "empty prefix-sum sequence");
  std::vector<double> inc(prefix.size() - 1);
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    inc[k - 1] = prefix[k] - prefix[k - 1];
  }
  return from_unsorted(inc, total);
}

std::vector<double> ProbVector::prefix_sums(std::size_t length) const {
  length = std::max(length, entries_.size());
  std::vector<double> out(length + 1, 0.0);
  for (std::size_t k = 0; k < length; ++k) {
    out[k + 1] = k < entries_.size() ? out[k] + entries_[k] : total_;
  }
  return out;
}

bool is_majorized_by(const ProbVector& a, const ProbVector& b, double tol) {
  check_totals(a.total(), b.total());
  const std::size_t len = std::max(a.size(), b.size());
  const auto la = a.prefix_sums(len);
  const auto lb = b.prefix_sums(len);
  for (std::size_t k = 1; k <= len; ++k) {
    if (la[k] > lb[k] + tol) return false;
  }
  return true;
}

ProbVector meet_all(std::span<const ProbVector> set) {
  const auto lower = combine_prefix(set, [](double x, double y) { return std::min(x, y); });
  return ProbVector::from_prefix_sums(lower, set.front().total());
}

ProbVector meet(const ProbVector& a, const ProbVector& b) {
  const ProbVector pair[] = {a, b};
  return meet_all(pair);
}

ProbVector join_all(std::span<const ProbVector> set) {
  const auto upper = combine_prefix(set, [](double x, double y) { return std::max(x, y); });
  return ProbVector::from_prefix_sums(least_concave_majorant(upper), set.front().total());
}

ProbVector join(const ProbVector& a, const ProbVector& b) {
  const ProbVector pair[] = {a, b};
  return join_all(pair);
}

ProbVector direct_sum(std::span<const ProbVector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::EmptySet, "direct sum of nothing");
  std::vector<double> all;
  for (const auto& v : vectors) {
    check_totals(v.total(), 1.0);
    all.insert(all.end(), v.entries().begin(), v.entries().end());
  }
  return ProbVector::from_unsorted(all, static_cast<double>(vectors.size()));
}

LorenzCurve lorenz(const ProbVector& p) {
  return LorenzCurve{p.prefix_sums(), p.total()};
}

std::vector<double> least_concave_majorant(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) return {values.begin(), values.end()};
  // Upper hull by monotone chain; x coordinates are the indices.
  std::vector<std::size_t> hull;
  hull.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = static_cast<double>(b - a) * (values[c] - values[a]) -
                           (values[b] - values[a]) * static_cast<double>(c - a);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }
  std::vector<double> out(n);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t a = hull[h];
    const std::size_t b = hull[h + 1];
    const double slope = (values[b] - values[a]) / static_cast<double>(b - a);
    for (std::size_t k = a; k < b; ++k) {
      out[k] = values[a] + slope * static_cast<double>(k - a);
    }
  }
  out[n - 1] = values[n - 1];
  // The hull never dips below the data; keep exact values where they touch.
  for (std::size_t k = 0; k < n; ++k) out[k] = std::max(out[k], values[k]);
  return out;
}

double shannon_entropy(std::span<const double> p, LogBase base) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * log_in(x, base);
  }
  return h;
}

double shannon_entropy(const ProbVector& p, LogBase base) {
  return shannon_entropy(p.entries(), base);
}

double relative_entropy_term(const ProbVector& t, const ProbVector& P, LogBase base) {
  return kl_divergence(t, P, base);
}

double kl_divergence(const ProbVector& p, const ProbVector& q, LogBase base) {
  check_totals(p.total(), q.total());
  const std::size_t len = std::max(p.size(), q.size());
  double d = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double pi = i < p.size() ? p[i] : 0.0;
    const double qi = i < q.size() ? q[i] : 0.0;
    if (pi <= 0.0) continue;
    if (qi <= 0.0) {
      throw Error(ErrorKind::SupportMismatch,
                  "weight " + std::to_string(pi) + " at index " + std::to_string(i) +
                      " has no support in the reference vector");
    }
    d += pi * log_in(pi / qi, base);
  }
  return d;
}

}  // namespace uqcr::majorization
