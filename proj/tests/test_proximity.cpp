#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bmatrix/errors.hpp"
#include "bmatrix/proximity.hpp"
#include "proximity_fixtures.hpp"

namespace {

using bmatrix::OrderStrategy;
using bmatrix::ProximityMatrix;
using bmatrix::UpdateOrder;

std::vector<std::size_t> one_based(const UpdateOrder& o) {
  std::vector<std::size_t> out;
  for (auto v : o.positions()) out.push_back(v + 1);
  return out;
}

ProximityMatrix random_symmetric(std::size_t n, std::mt19937_64& rng, int levels) {
  std::uniform_int_distribution<int> d(1, levels);
  std::vector<double> p(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p[i * n + j] = p[j * n + i] = d(rng);
  return ProximityMatrix(n, std::move(p));
}

TEST(FairProximity, CanonicalChainFromNeuronOne) {
  for (std::uint64_t seed : {1u, 2u, 77u}) {
    bmatrix::Rng rng(seed);
    const auto p = bmatrix::generate_fair_proximity(6, rng);
    EXPECT_EQ(one_based(update_order(p, 0)), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  }
}

TEST(FairProximity, ChainValuesNearHalfN) {
  bmatrix::Rng rng(3);
  const auto p = bmatrix::generate_fair_proximity(6, rng);
  EXPECT_DOUBLE_EQ(p.at(0, 1), 3.0);
  EXPECT_NEAR(p.at(0, 5), 3.0 + 4.0 / 6.0, 1e-12);
  for (std::size_t j = 1; j < 6; ++j) {
    EXPECT_GE(p.at(0, j), 3.0);
    EXPECT_LT(p.at(0, j), 4.0);
  }
}

TEST(FairProximity, StructureAndBounds) {
  bmatrix::Rng rng(12345);
  const std::size_t n = 1024;
  const auto p = bmatrix::generate_fair_proximity(n, rng);
  double lo = 1e300, hi = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    ASSERT_EQ(p.at(i, i), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ASSERT_EQ(p.at(i, j), p.at(j, i));
      lo = std::min(lo, p.at(i, j));
      hi = std::max(hi, p.at(i, j));
    }
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1023.0);
}

TEST(FairProximity, SmallestNetworkAndSizing) {
  bmatrix::Rng rng(1);
  const auto p = bmatrix::generate_fair_proximity(2, rng);
  EXPECT_EQ(p.at(0, 1), 1.0);
  EXPECT_THROW(bmatrix::generate_fair_proximity(1, rng), bmatrix::SizingError);
}

TEST(FairProximity, IdentityOrderForEverySeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    bmatrix::Rng rng(seed);
    const std::size_t n = 3 + seed % 40;
    const auto p = bmatrix::generate_fair_proximity(n, rng);
    EXPECT_EQ(update_order(p, 0), UpdateOrder::identity(n)) << "seed " << seed;
  }
}

TEST(UpdateOrder, SixNeuronExample) {
  const auto p = testing_support::six_neuron_example();
  EXPECT_EQ(one_based(update_order(p, 1, OrderStrategy::row_sort)),
            (std::vector<std::size_t>{2, 5, 3, 1, 4, 6}));
}

TEST(UpdateOrder, TiesBreakBySmallerIndex) {
  std::vector<double> p(36, 2.0);
  for (std::size_t i = 0; i < 6; ++i) p[i * 6 + i] = 0.0;
  const ProximityMatrix flat(6, std::move(p));
  EXPECT_EQ(one_based(update_order(flat, 2)), (std::vector<std::size_t>{3, 1, 2, 4, 5, 6}));
  EXPECT_EQ(one_based(update_order(flat, 2, OrderStrategy::greedy_chain)),
            (std::vector<std::size_t>{3, 1, 2, 4, 5, 6}));
}

TEST(UpdateOrder, GreedyChainFollowsNearestNeighbour) {
  // Path 1-3-2-4 at distance 1, everything else far.
  std::vector<double> p(16, 9.0);
  for (std::size_t i = 0; i < 4; ++i) p[i * 4 + i] = 0.0;
  auto link = [&](std::size_t a, std::size_t b) { p[a * 4 + b] = p[b * 4 + a] = 1.0; };
  link(0, 2);
  link(2, 1);
  link(1, 3);
  const ProximityMatrix m(4, std::move(p));
  EXPECT_EQ(one_based(update_order(m, 0, OrderStrategy::greedy_chain)),
            (std::vector<std::size_t>{1, 3, 2, 4}));
  // Row sort from 1 only sees direct distances.
  EXPECT_EQ(one_based(update_order(m, 0, OrderStrategy::row_sort)),
            (std::vector<std::size_t>{1, 3, 2, 4}));
  EXPECT_EQ(one_based(update_order(m, 3, OrderStrategy::greedy_chain)),
            (std::vector<std::size_t>{4, 2, 3, 1}));
}

TEST(UpdateOrder, Errors) {
  const auto p = testing_support::six_neuron_example();
  EXPECT_THROW(update_order(p, 6), bmatrix::IndexError);
  EXPECT_THROW(update_order(p, 0, static_cast<OrderStrategy>(9)), bmatrix::ConfigError);
  EXPECT_THROW(bmatrix::parse_order_strategy("spiral"), bmatrix::ConfigError);
  EXPECT_EQ(bmatrix::parse_order_strategy("greedy-chain"), OrderStrategy::greedy_chain);
  EXPECT_THROW(UpdateOrder({0, 0, 1}), bmatrix::PermutationError);
  EXPECT_THROW(UpdateOrder({0, 3, 1}), bmatrix::PermutationError);
}

TEST(ProximityMatrix, RejectsInvalid) {
  EXPECT_THROW(ProximityMatrix(2, {0, 1, 2, 0}), bmatrix::InvariantError);
  EXPECT_THROW(ProximityMatrix(2, {1, 1, 1, 0}), bmatrix::InvariantError);
  EXPECT_THROW(ProximityMatrix(2, {0, -1, -1, 0}), bmatrix::InvariantError);
  EXPECT_THROW(ProximityMatrix(2, {0, 1, 1}), bmatrix::SizingError);
}

// Permutation starting at `start`, for random matrices with many ties,
// every start and both strategies; repeated calls agree.
TEST(UpdateOrderProperty, ValidPermutationAndDeterministic) {
  std::mt19937_64 rng(8);
  for (int c = 0; c < 60; ++c) {
    const std::size_t n = 2 + c % 30;
    const auto p = random_symmetric(n, rng, c % 2 ? 3 : 1000);
    for (auto strategy : {OrderStrategy::row_sort, OrderStrategy::greedy_chain}) {
      for (std::size_t s = 0; s < n; ++s) {
        const auto o = update_order(p, s, strategy);
        ASSERT_EQ(o.start(), s);
        std::vector<std::size_t> sorted(o.positions().begin(), o.positions().end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(sorted[i], i);
        ASSERT_EQ(o, update_order(p, s, strategy));
      }
    }
  }
}

}  // namespace
