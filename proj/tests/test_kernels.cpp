#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "bmatrix/errors.hpp"
#include "bmatrix/kernels.hpp"
#include "support.hpp"

namespace {

using bmatrix::OrderStrategy;
using bmatrix::PolarityPolicy;
using bmatrix::ScanOptions;
using bmatrix::Sign;
using testing_support::random_bipolar;

bmatrix::ProximityMatrix fair(std::size_t n, std::uint64_t seed) {
  bmatrix::Rng rng(seed);
  return bmatrix::generate_fair_proximity(n, rng);
}

TEST(SpreadFused, AgreesWithReferenceComposition) {
  std::mt19937 rng(21);
  for (int c = 0; c < 30; ++c) {
    const std::size_t n = 2 + (c * 7) % 70;
    const auto t = bmatrix::train(n, random_bipolar(n, 1 + c % 25, rng));
    const auto p = fair(n, c);
    std::vector<bmatrix::Weight> field(n);
    std::vector<Sign> out(n);
    for (auto strategy : {OrderStrategy::row_sort, OrderStrategy::greedy_chain}) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto order = update_order(p, k, strategy);
        for (Sign s : {Sign{1}, Sign{-1}}) {
          bmatrix::spread_fused(t, order, s, field, out);
          const auto expected = bmatrix::retrieve_along(t, order, s);
          ASSERT_TRUE(std::equal(out.begin(), out.end(), expected.values().begin()))
              << "n=" << n << " start=" << k;
        }
      }
    }
  }
}

TEST(ScanGenerators, AgreesWithReference) {
  std::mt19937 rng(22);
  for (int c = 0; c < 24; ++c) {
    const std::size_t n = 4 + c * 2;
    const auto fed = random_bipolar(n, 1 + c % 6, rng);
    const auto t = bmatrix::train(n, fed);
    const auto p = fair(n, 100 + c);
    ScanOptions o;
    o.strategy = c % 2 ? OrderStrategy::greedy_chain : OrderStrategy::row_sort;
    o.polarity = static_cast<PolarityPolicy>(c % 3);
    o.match_complement = c % 4 == 0;
    EXPECT_EQ(scan_generators(t, p, fed, o), scan_generators_reference(t, p, fed, o));
  }
}

TEST(ScanGenerators, IndependentOfThreadCount) {
  std::mt19937 rng(23);
  const auto fed = random_bipolar(96, 6, rng);
  const auto t = bmatrix::train(96, fed);
  const auto p = fair(96, 5);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto serial = scan_generators(t, p, fed);
  omp_set_num_threads(5);
  const auto parallel = scan_generators(t, p, fed);
  omp_set_num_threads(saved);
  EXPECT_EQ(serial, parallel);
}

TEST(ScanGenerators, ValidatesInputs) {
  std::mt19937 rng(24);
  const auto fed = random_bipolar(6, 2, rng);
  const auto t = bmatrix::train(6, fed);
  EXPECT_THROW(scan_generators(t, fair(7, 1), fed), bmatrix::SizingError);
  auto orders = bmatrix::all_update_orders(fair(6, 1), OrderStrategy::row_sort);
  std::swap(orders[0], orders[1]);
  EXPECT_THROW(scan_generators(t, orders, fed, {}), bmatrix::PermutationError);
  const auto other = random_bipolar(5, 1, rng);
  EXPECT_THROW(scan_generators(t, fair(6, 1), other), bmatrix::SizingError);
}

TEST(ScanGenerators, SingleMemoryCompleteness) {
  std::mt19937 rng(25);
  for (std::size_t n = 2; n <= 64; n += 3) {
    const auto fed = random_bipolar(n, 1, rng);
    const auto map = scan_generators(bmatrix::train(n, fed), fair(n, n), fed);
    EXPECT_DOUBLE_EQ(map.non_generator_fraction(), 0.0);
    EXPECT_EQ(map.retrieved_count(), 1u);
  }
}

}  // namespace
