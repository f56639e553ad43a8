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

// Shared helpers for the unit tests: random probability vectors and an
// independent brute-force minimizer over the qubit Bloch ball.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "uqcr/majorization.hpp"
#include "uqcr/quantum.hpp"

namespace uqcr::testing {

// Dirichlet(1,...,1) scaled to `total`; with probability `zero_rate` an entry
// is forced to zero so supports vary.
inline majorization::ProbVector random_prob(std::mt19937_64& rng, std::size_t len,
                                            double total = 1.0, double zero_rate = 0.1) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> raw(len);
  double sum = 0.0;
  for (auto& x : raw) {
    x = u(rng) < zero_rate ? 0.0 : expo(rng);
    sum += x;
  }
  if (sum == 0.0) {
    raw[0] = 1.0;
    sum = 1.0;
  }
  for (auto& x : raw) x *= total / sum;
  return majorization::ProbVector::from_unsorted(raw, total);
}

inline double top_n(std::vector<double> p, std::size_t n) {
  std::sort(p.begin(), p.end(), std::greater<>());
  double s = 0.0;
  for (std::size_t i = 0; i < n && i < p.size(); ++i) s += p[i];
  return s;
}

// Sum of the n largest Born probabilities over all observables, computed
// directly from the Bloch vector (no choice operators involved).
inline double qubit_topn(std::span<const quantum::ProjectiveObservable> obs, const quantum::Vec3& r,
                         std::size_t n) {
  const auto rho = quantum::bloch_to_density(r);
  std::vector<double> all;
  for (const auto& o : obs) {
    const auto p = quantum::born_probabilities(o, rho);
    all.insert(all.end(), p.begin(), p.end());
  }
  return top_n(all, n);
}

// Grid over (theta, phi) at radius r followed by shrinking pattern search.
inline double brute_min_on_sphere(const std::function<double(const quantum::Vec3&)>& f, double r,
                                  int grid = 120) {
  const auto point = [r](double th, double ph) {
    return quantum::Vec3(r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                         r * std::cos(th));
  };
  double best = 1e300, bt = 0.0, bp = 0.0;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j < 2 * grid; ++j) {
      const double th = std::numbers::pi * i / grid;
      const double ph = std::numbers::pi * j / grid;
      const double v = f(point(th, ph));
      if (v < best) {
        best = v;
        bt = th;
        bp = ph;
      }
    }
  }
  for (double h = std::numbers::pi / grid; h > 1e-13; h *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
          const double v = f(point(bt + a * h, bp + b * h));
          if (v < best - 1e-16) {
            best = v;
            bt += a * h;
            bp += b * h;
            moved = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace uqcr::testing
