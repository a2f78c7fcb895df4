#include <gtest/gtest.h>

#include <omp.h>

#include "bmatrix/errors.hpp"
#include "bmatrix/experiment.hpp"

namespace {

using bmatrix::Backend;
using bmatrix::ExperimentConfig;

ExperimentConfig small(std::size_t n, std::size_t m, std::size_t it, std::uint64_t seed) {
  ExperimentConfig c;
  c.neurons = n;
  c.memories = m;
  c.iterations = it;
  c.master_seed = seed;
  return c;
}

TEST(Config, Validation) {
  EXPECT_THROW(small(1, 3, 1, 0).validate(), bmatrix::ConfigError);
  EXPECT_THROW(small(4, 0, 1, 0).validate(), bmatrix::ConfigError);
  EXPECT_THROW(small(4, 3, 0, 0).validate(), bmatrix::ConfigError);
  EXPECT_NO_THROW(small(2, 1, 1, 0).validate());
}

TEST(Config, DefaultMemories) {
  EXPECT_EQ(ExperimentConfig::default_memories(64), 39u);
  EXPECT_EQ(ExperimentConfig::default_memories(2), 2u);
  EXPECT_EQ(ExperimentConfig::default_memories(10), 6u);
}

TEST(RandomMemory, BothSignsAppear) {
  bmatrix::Rng rng(1);
  const auto v = bmatrix::random_memory(200, rng);
  long long sum = 0;
  for (auto s : v.values()) sum += s;
  EXPECT_LT(std::abs(sum), 60);
}

TEST(RunTrial, FirstMemoryIsStoredAndRetrieved) {
  for (std::size_t n : {2u, 3u, 17u, 64u}) {
    const auto r = run_trial(small(n, 5, 1, 9), 0);
    EXPECT_EQ(r.stored[0], 1u);
    EXPECT_EQ(r.retrieved[0], 1u);
  }
}

TEST(RunTrial, CountsBoundedByFed) {
  for (std::uint64_t trial = 0; trial < 8; ++trial) {
    const auto r = run_trial(small(24, 30, 1, 3), trial);
    ASSERT_EQ(r.stored.size(), 30u);
    for (std::size_t k = 0; k < 30; ++k) {
      EXPECT_LE(r.stored[k], k + 1);
      EXPECT_LE(r.retrieved[k], k + 1);
    }
  }
}

TEST(RunTrial, DeterministicAndBackendIndependent) {
  const auto c = small(20, 12, 1, 77);
  const auto a = run_trial(c, 3);
  EXPECT_EQ(a, run_trial(c, 3));
  EXPECT_EQ(a, run_trial(c, 3, Backend::reference));
  EXPECT_NE(run_trial(c, 3), run_trial(c, 4));
}

TEST(RunExperiment, SingleIterationEqualsTrial) {
  const auto c = small(16, 10, 1, 5);
  const auto curves = run_experiment(c);
  const auto r = run_trial(c, 0);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(curves.stored_avg[k], static_cast<double>(r.stored[k]));
    EXPECT_EQ(curves.retrieved_avg[k], static_cast<double>(r.retrieved[k]));
  }
}

TEST(RunExperiment, MeanMatchesSerialReference) {
  const auto c = small(14, 10, 9, 21);
  const auto parallel = run_experiment(c);
  EXPECT_EQ(parallel, run_experiment_serial(c, Backend::reference));
  // Explicit per-trial mean.
  std::vector<double> stored(10, 0.0);
  for (std::size_t t = 0; t < 9; ++t) {
    const auto r = run_trial(c, t);
    for (std::size_t k = 0; k < 10; ++k) stored[k] += static_cast<double>(r.stored[k]);
  }
  for (std::size_t k = 0; k < 10; ++k) EXPECT_NEAR(parallel.stored_avg[k], stored[k] / 9.0, 1e-12);
}

TEST(RunExperiment, ScheduleIndependent) {
  const auto c = small(32, 20, 7, 4);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = run_experiment(c);
  omp_set_num_threads(4);
  const auto four = run_experiment(c);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(GeneratorSnapshot, SingleMemoryAllGenerators) {
  const auto s = bmatrix::generator_snapshot(12, 1, 2);
  EXPECT_DOUBLE_EQ(s.map.non_generator_fraction(), 0.0);
  EXPECT_EQ(s.memories.size(), 1u);
}

TEST(GeneratorSnapshot, MatchesTrialZeroDraw) {
  const auto s = bmatrix::generator_snapshot(16, 4, 8);
  const auto draw = bmatrix::draw_trial(16, 4, 8, 0);
  EXPECT_EQ(s.memories, draw.memories);
  EXPECT_EQ(s.proximity, draw.proximity);
  EXPECT_EQ(s.map.retrieved_count(), run_trial(small(16, 4, 1, 8), 0).retrieved.back());
  const auto f = s.map.per_memory_generator_fractions();
  ASSERT_EQ(f.size(), 4u);
  for (double x : f) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
}

}  // namespace
