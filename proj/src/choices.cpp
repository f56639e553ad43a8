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

#include <algorithm>
#include <numeric>
#include <string>

#include "uqcr/bounds.hpp"
#include "uqcr/error.hpp"

namespace uqcr::bounds {
namespace {

constexpr double kMaxChoices = 2e6;

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

std::vector<ChoiceOperator> enumerate_choices(std::span<const ProjectiveObservable> observables,
                                              std::size_t n) {
  if (observables.empty()) throw Error(ErrorKind::EmptySet, "no observables");
  const int dim = observables.front().dim();
  std::vector<std::pair<std::size_t, std::size_t>> pool;  // (observable, outcome)
  for (std::size_t a = 0; a < observables.size(); ++a) {
    if (observables[a].dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "observables act on different dimensions");
    }
    for (std::size_t i = 0; i < observables[a].outcome_count(); ++i) pool.emplace_back(a, i);
  }
  const std::size_t total = pool.size();
  if (n < 1 || n + 1 > total) {
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(n) + " outside 1.." +
                                                std::to_string(total == 0 ? 0 : total - 1));
  }
  if (binomial(total, n) > kMaxChoices) {
    throw Error(ErrorKind::InvalidArgument,
                "level " + std::to_string(n) + " has too many choice operators to enumerate");
  }

  std::vector<ChoiceOperator> out;
  out.reserve(static_cast<std::size_t>(binomial(total, n)));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ChoiceOperator c;
    c.level = n;
    c.subsets.resize(observables.size());
    c.op = Matrix::Zero(dim, dim);
    for (std::size_t k : idx) {
      const auto [a, i] = pool[k];
      c.subsets[a].push_back(i);
      c.op += observables[a].projectors()[i];
    }
    out.push_back(std::move(c));
    // next combination in lexicographic order
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == total - n + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

double top_n_sum(const ProbVector& P, std::size_t n) {
  if (n < 1 || n > P.size()) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(n) + " outside 1.." + std::to_string(P.size()));
  }
  return std::accumulate(P.entries().begin(), P.entries().begin() + static_cast<long>(n), 0.0);
}

}  // namespace uqcr::bounds
