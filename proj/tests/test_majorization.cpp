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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "testing.hpp"
#include "uqcr/error.hpp"
#include "uqcr/majorization.hpp"

namespace uqcr::majorization {
namespace {

using uqcr::testing::random_prob;

ProbVector pv(std::vector<double> v, double total = 1.0) { return ProbVector::from_unsorted(v, total); }

void expect_entries(const ProbVector& p, const std::vector<double>& want, double tol = 1e-12) {
  ASSERT_EQ(p.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(p[i], want[i], tol) << "entry " << i;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(ProbVector, SortsAndKeepsTotal) {
  expect_entries(pv({0.3, 0.7}), {0.7, 0.3});
  expect_entries(pv({0.25, 0.25, 0.25, 0.25}), {0.25, 0.25, 0.25, 0.25});
  expect_entries(pv({0.5, 0.1, 0.4}), {0.5, 0.4, 0.1});
  EXPECT_EQ(pv({0.5, 0.5, 0.5, 0.5}, 2.0).total(), 2.0);
}

TEST(ProbVector, ClampsRoundOff) {
  const auto p = pv({1.0 + 5e-13, -5e-13});
  EXPECT_EQ(p[1], 0.0);
  EXPECT_NEAR(p[0], 1.0, 1e-15);
}

TEST(ProbVector, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { pv({1.1, -0.1}); }), ErrorKind::NegativeEntry);
  EXPECT_EQ(kind_of([] { pv({0.5, 0.6}); }), ErrorKind::SumMismatch);
  const std::vector<double> unsorted = {0.3, 0.7};
  EXPECT_THROW(ProbVector::from_sorted(unsorted, 1.0), Error);
}

TEST(ProbVector, PrefixSumsPad) {
  const auto L = pv({0.7, 0.3}).prefix_sums(4);
  ASSERT_EQ(L.size(), 5u);
  EXPECT_EQ(L[0], 0.0);
  EXPECT_DOUBLE_EQ(L[1], 0.7);
  EXPECT_DOUBLE_EQ(L[4], 1.0);
}

TEST(Order, Examples) {
  EXPECT_TRUE(is_majorized_by(pv({0.5, 0.5}), pv({1, 0})));
  EXPECT_FALSE(is_majorized_by(pv({1, 0}), pv({0.5, 0.5})));
  const auto a = pv({0.6, 0.3, 0.1});
  const auto b = pv({0.5, 0.45, 0.05});
  EXPECT_FALSE(is_majorized_by(a, b));
  EXPECT_FALSE(is_majorized_by(b, a));
}

TEST(Order, PadsShorterVector) {
  EXPECT_FALSE(is_majorized_by(pv({0.5, 0.5}), pv({0.6, 0.3, 0.1})));
  EXPECT_TRUE(is_majorized_by(pv({0.4, 0.3, 0.3}), pv({0.5, 0.5})));
}

TEST(Order, TotalMismatch) {
  EXPECT_EQ(kind_of([] { is_majorized_by(pv({0.5, 0.5}), pv({1, 1}, 2.0)); }),
            ErrorKind::TotalMismatch);
}

TEST(Meet, Examples) {
  expect_entries(meet(pv({0.8, 0.2}), pv({0.6, 0.4})), {0.6, 0.4});
  expect_entries(meet(pv({0.6, 0.3, 0.1}), pv({0.5, 0.45, 0.05})), {0.5, 0.4, 0.1});
  const auto a = pv({0.45, 0.35, 0.2});
  expect_entries(meet(a, a), a.entries());
}

TEST(Meet, SetForm) {
  const std::vector<ProbVector> one = {pv({0.7, 0.3})};
  expect_entries(meet_all(one), {0.7, 0.3});
  const std::vector<ProbVector> chain = {pv({0.8, 0.2}), pv({0.6, 0.4}), pv({0.7, 0.3})};
  expect_entries(meet_all(chain), {0.6, 0.4});
  const std::vector<ProbVector> three = {pv({0.6, 0.3, 0.1}), pv({0.5, 0.45, 0.05}),
                                         pv({0.55, 0.3, 0.15})};
  // prefix sums (0.6, 0.9), (0.5, 0.95), (0.55, 0.85): joint minima (0.5, 0.85, 1)
  expect_entries(meet_all(three), {0.5, 0.35, 0.15});
  EXPECT_EQ(kind_of([] { meet_all(std::vector<ProbVector>{}); }), ErrorKind::EmptySet);
}

TEST(Join, Examples) {
  expect_entries(join(pv({0.6, 0.3, 0.1}), pv({0.5, 0.45, 0.05})), {0.6, 0.35, 0.05});
  // prefix maxima (0.7, 0.8, 1, 1) are not concave; the majorant is (0.7, 0.85, 1, 1)
  expect_entries(join(pv({0.7, 0.1, 0.1, 0.1}), pv({0.4, 0.4, 0.2, 0.0})), {0.7, 0.15, 0.15, 0.0});
  const auto a = pv({0.45, 0.35, 0.2});
  expect_entries(join(a, a), a.entries());
  EXPECT_EQ(kind_of([] { join_all(std::vector<ProbVector>{}); }), ErrorKind::EmptySet);
}

TEST(LeastConcaveMajorant, FlattensDips) {
  const std::vector<double> y = {0.0, 0.7, 0.8, 1.0, 1.0};
  const auto h = least_concave_majorant(y);
  const std::vector<double> want = {0.0, 0.7, 0.85, 1.0, 1.0};
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(h[i], want[i], 1e-15);
}

TEST(DirectSum, Examples) {
  const std::vector<ProbVector> two = {pv({0.7, 0.3}), pv({0.6, 0.4})};
  const auto d = direct_sum(two);
  expect_entries(d, {0.7, 0.6, 0.4, 0.3});
  EXPECT_EQ(d.total(), 2.0);
  const std::vector<ProbVector> mixed = {pv({1, 0}), pv({0.5, 0.5})};
  expect_entries(direct_sum(mixed), {1, 0.5, 0.5, 0});
  const std::vector<ProbVector> uniform(3, pv({0.5, 0.5}));
  const auto u = direct_sum(uniform);
  expect_entries(u, std::vector<double>(6, 0.5));
  EXPECT_EQ(u.total(), 3.0);
}

TEST(Lorenz, Examples) {
  EXPECT_EQ(lorenz(pv({0.7, 0.3})).points, (std::vector<double>{0, 0.7, 1.0}));
  EXPECT_EQ(lorenz(pv({0.5, 0.5, 0.5, 0.5}, 2.0)).points, (std::vector<double>{0, 0.5, 1.0, 1.5, 2.0}));
  EXPECT_EQ(lorenz(pv({1, 0})).points, (std::vector<double>{0, 1, 1}));
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(shannon_entropy(pv({0.5, 0.5})), 1.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(pv({1, 0})), 0.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(pv({0.25, 0.25, 0.25, 0.25})), 2.0);
  EXPECT_NEAR(shannon_entropy(pv({0.5, 0.5}), LogBase::Nats), std::log(2.0), 1e-15);
}

TEST(RelativeEntropyTerm, Examples) {
  const auto t = pv({0.5, 0.5});
  EXPECT_EQ(relative_entropy_term(t, t), 0.0);
  EXPECT_EQ(kind_of([&] { relative_entropy_term(t, pv({1, 0})); }), ErrorKind::SupportMismatch);
  // 0.5 log2(2/3) + 0.5 log2(2)
  EXPECT_NEAR(relative_entropy_term(t, pv({0.75, 0.25})), 0.20751874963942190, 1e-15);
}

TEST(RelativeEntropyTerm, NonNegative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t len = 2 + trial % 7;
    const auto t = random_prob(rng, len, 1.0, 0.0);
    const auto P = random_prob(rng, len, 1.0, 0.0);
    EXPECT_GE(relative_entropy_term(t, P), -1e-12);
  }
}

// Lattice laws on random vectors; tolerance is on prefix sums.
class LatticeLaws : public ::testing::TestWithParam<std::size_t> {};

bool same(const ProbVector& a, const ProbVector& b) {
  return is_majorized_by(a, b, 1e-10) && is_majorized_by(b, a, 1e-10);
}

TEST_P(LatticeLaws, Hold) {
  const std::size_t len = GetParam();
  std::mt19937_64 rng(1000 + len);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_prob(rng, len);
    const auto b = random_prob(rng, len);
    const auto c = random_prob(rng, len);
    const auto m = meet(a, b);
    const auto j = join(a, b);
    ASSERT_TRUE(is_majorized_by(m, a));
    ASSERT_TRUE(is_majorized_by(m, b));
    ASSERT_TRUE(is_majorized_by(a, j));
    ASSERT_TRUE(is_majorized_by(b, j));
    // greatest lower / least upper bound against a random third vector
    if (is_majorized_by(c, a) && is_majorized_by(c, b)) ASSERT_TRUE(is_majorized_by(c, m));
    if (is_majorized_by(a, c) && is_majorized_by(b, c)) ASSERT_TRUE(is_majorized_by(j, c));
    ASSERT_TRUE(same(meet(a, b), meet(b, a)));
    ASSERT_TRUE(same(join(a, b), join(b, a)));
    ASSERT_TRUE(same(meet(meet(a, b), c), meet(a, meet(b, c))));
    ASSERT_TRUE(same(join(join(a, b), c), join(a, join(b, c))));
    ASSERT_TRUE(same(meet(a, join(a, b)), a));
    ASSERT_TRUE(same(join(a, meet(a, b)), a));
    // outputs are valid: non-increasing entries
    for (std::size_t i = 1; i < len; ++i) {
      ASSERT_LE(m[i], m[i - 1] + 1e-12);
      ASSERT_LE(j[i], j[i - 1] + 1e-12);
    }
    const std::vector<double> flat(len, 1.0 / static_cast<double>(len));
    std::vector<double> point(len, 0.0);
    point[0] = 1.0;
    ASSERT_TRUE(is_majorized_by(ProbVector::from_unsorted(flat, 1.0), a));
    ASSERT_TRUE(is_majorized_by(a, ProbVector::from_unsorted(point, 1.0)));
  }
}

TEST_P(LatticeLaws, EntropyIsSchurConcave) {
  const std::size_t len = GetParam();
  std::mt19937_64 rng(2000 + len);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_prob(rng, len);
    const auto b = random_prob(rng, len);
    // meet(a, b) < a is a guaranteed comparable pair
    const auto m = meet(a, b);
    EXPECT_GE(shannon_entropy(m), shannon_entropy(a) - 1e-12);
    if (is_majorized_by(a, b)) EXPECT_GE(shannon_entropy(a), shannon_entropy(b) - 1e-12);
  }
}

TEST_P(LatticeLaws, MeetAllMatchesFold) {
  const std::size_t len = GetParam();
  std::mt19937_64 rng(3000 + len);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ProbVector> set;
    for (int k = 0; k < 5; ++k) set.push_back(random_prob(rng, len));
    ProbVector folded = set[0];
    for (std::size_t k = 1; k < set.size(); ++k) folded = meet(folded, set[k]);
    ASSERT_TRUE(same(meet_all(set), folded));
    ProbVector joined = set[0];
    for (std::size_t k = 1; k < set.size(); ++k) joined = join(joined, set[k]);
    ASSERT_TRUE(same(join_all(set), joined));
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, LatticeLaws, ::testing::Range<std::size_t>(2, 9));

TEST(DirectSum, LorenzEndpoints) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ProbVector> parts;
    const int m = 1 + trial % 4;
    for (int k = 0; k < m; ++k) parts.push_back(random_prob(rng, 3));
    const auto L = lorenz(direct_sum(parts));
    EXPECT_EQ(L.points.front(), 0.0);
    EXPECT_NEAR(L.points.back(), m, 1e-12);
  }
}

}  // namespace
}  // namespace uqcr::majorization
