#include "bmatrix/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <omp.h>

#include "bmatrix/errors.hpp"
#include "bmatrix/kernels.hpp"

namespace bmatrix {

void ExperimentConfig::validate() const {
  if (neurons < kMinNeurons) {
    throw ConfigError("--neurons must be >= 2, got " + std::to_string(neurons));
  }
  if (memories < 1) throw ConfigError("--memories must be >= 1");
  if (iterations < 1) throw ConfigError("--iterations must be >= 1");
}

std::size_t ExperimentConfig::default_memories(std::size_t neurons) {
  const auto m = static_cast<std::size_t>(std::ceil(0.6 * static_cast<double>(neurons)));
  return std::max<std::size_t>(1, std::min(m, 2 * neurons));
}

BipolarVector random_memory(std::size_t n, Rng& rng) {
  std::vector<Sign> v(n);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) bits = rng();
    v[i] = (bits & 1u) ? Sign{1} : Sign{-1};
    bits >>= 1;
  }
  return BipolarVector(std::move(v));
}

std::vector<BipolarVector> random_memories(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<BipolarVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_memory(n, rng));
  return out;
}

TrialDraw draw_trial(std::size_t n, std::size_t memories, std::uint64_t master_seed,
                     std::uint64_t trial_index) {
  Rng rng = trial_stream(master_seed, trial_index);
  ProximityMatrix p = generate_fair_proximity(n, rng);
  return TrialDraw{std::move(p), random_memories(n, memories, rng)};
}

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index,
                      Backend backend) {
  config.validate();
  const std::size_t n = config.neurons;
  const TrialDraw draw = draw_trial(n, config.memories, config.master_seed, trial_index);
  const std::span<const BipolarVector> all(draw.memories);

  std::vector<UpdateOrder> orders;
  if (backend == Backend::fused) orders = all_update_orders(draw.proximity, config.scan.strategy);

  TrialRecord record;
  record.stored.reserve(config.memories);
  record.retrieved.reserve(config.memories);
  TMatrix t(n);
  for (std::size_t k = 1; k <= config.memories; ++k) {
    t = accumulate_memory(t, all[k - 1]);
    const auto fed = all.first(k);
    record.stored.push_back(count_stored(t, fed));
    const GeneratorMap map = backend == Backend::fused
                                 ? scan_generators(t, orders, fed, config.scan)
                                 : scan_generators_reference(t, draw.proximity, fed, config.scan);
    record.retrieved.push_back(map.retrieved_count());
  }
  return record;
}

namespace {

CapacityCurves mean_of(const std::vector<std::uint64_t>& stored,
                       const std::vector<std::uint64_t>& retrieved, std::size_t iterations) {
  CapacityCurves curves;
  const auto denom = static_cast<double>(iterations);
  for (std::size_t k = 0; k < stored.size(); ++k) {
    curves.stored_avg.push_back(static_cast<double>(stored[k]) / denom);
    curves.retrieved_avg.push_back(static_cast<double>(retrieved[k]) / denom);
  }
  return curves;
}

}  // namespace

CapacityCurves run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto trials = static_cast<std::int64_t>(config.iterations);
  std::vector<TrialRecord> records(config.iterations);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    records[static_cast<std::size_t>(trial)] =
        run_trial(config, static_cast<std::uint64_t>(trial), Backend::fused);
  }

  std::vector<std::uint64_t> stored(config.memories, 0), retrieved(config.memories, 0);
  for (const auto& r : records) {
    for (std::size_t k = 0; k < config.memories; ++k) {
      stored[k] += r.stored[k];
      retrieved[k] += r.retrieved[k];
    }
  }
  return mean_of(stored, retrieved, config.iterations);
}

CapacityCurves run_experiment_serial(const ExperimentConfig& config, Backend backend) {
  config.validate();
  std::vector<std::uint64_t> stored(config.memories, 0), retrieved(config.memories, 0);
  for (std::size_t trial = 0; trial < config.iterations; ++trial) {
    const TrialRecord r = run_trial(config, trial, backend);
    for (std::size_t k = 0; k < config.memories; ++k) {
      stored[k] += r.stored[k];
      retrieved[k] += r.retrieved[k];
    }
  }
  return mean_of(stored, retrieved, config.iterations);
}

GeneratorSnapshot generator_snapshot(std::size_t n, std::size_t memories, std::uint64_t seed,
                                     const ScanOptions& options) {
  if (n < kMinNeurons) throw SizingError("network needs at least 2 neurons");
  TrialDraw draw = draw_trial(n, memories, seed, 0);
  TMatrix t = train(n, draw.memories);
  GeneratorMap map = scan_generators(t, draw.proximity, draw.memories, options);
  return GeneratorSnapshot{std::move(draw.memories), std::move(draw.proximity), std::move(t),
                           std::move(map)};
}

}  // namespace bmatrix
