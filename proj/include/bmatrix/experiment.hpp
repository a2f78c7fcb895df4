#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bmatrix/hebbian.hpp"
#include "bmatrix/proximity.hpp"
#include "bmatrix/retrieval.hpp"
#include "bmatrix/rng.hpp"

namespace bmatrix {

struct ExperimentConfig {
  std::size_t neurons = 64;
  std::size_t memories = 40;
  std::size_t iterations = 100;
  std::uint64_t master_seed = 0;
  ScanOptions scan;

  // Throws ConfigError on n < 2, M < 1 or iterations < 1.
  void validate() const;

  // ceil(0.6 n), capped at 2n.
  static std::size_t default_memories(std::size_t neurons);
};

// Which retrieval path a trial uses. `reference` runs the literal
// composition serially and exists for cross-checking the fused kernel.
enum class Backend { fused, reference };

// Counts after each memory is fed; entry k-1 is for k memories fed.
struct TrialRecord {
  std::vector<std::size_t> stored;
  std::vector<std::size_t> retrieved;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct CapacityCurves {
  std::vector<double> stored_avg;
  std::vector<double> retrieved_avg;

  std::size_t size() const noexcept { return stored_avg.size(); }
  bool empty() const noexcept { return stored_avg.empty(); }

  friend bool operator==(const CapacityCurves&, const CapacityCurves&) = default;
};

BipolarVector random_memory(std::size_t n, Rng& rng);
std::vector<BipolarVector> random_memories(std::size_t n, std::size_t count, Rng& rng);

// Everything drawn for one trial: its proximity matrix, then its memories.
struct TrialDraw {
  ProximityMatrix proximity;
  std::vector<BipolarVector> memories;
};
TrialDraw draw_trial(std::size_t n, std::size_t memories, std::uint64_t master_seed,
                     std::uint64_t trial_index);

TrialRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index,
                      Backend backend = Backend::fused);

// Trials run concurrently; integer totals are reduced in trial order, so the
// result is identical for any thread count.
CapacityCurves run_experiment(const ExperimentConfig& config);

// Serial accumulation over trials 0..iterations-1 with the chosen backend.
CapacityCurves run_experiment_serial(const ExperimentConfig& config,
                                     Backend backend = Backend::reference);

struct GeneratorSnapshot {
  std::vector<BipolarVector> memories;
  ProximityMatrix proximity;
  TMatrix network;
  GeneratorMap map;
};

// Trains one network on M memories (the draw of trial 0 under `seed`) and
// scans every generator.
GeneratorSnapshot generator_snapshot(std::size_t n, std::size_t memories, std::uint64_t seed,
                                     const ScanOptions& options = {});

}  // namespace bmatrix
