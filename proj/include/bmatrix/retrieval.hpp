#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bmatrix/hebbian.hpp"
#include "bmatrix/proximity.hpp"

namespace bmatrix {

// Relabels T so that row/column a is neuron order[a].
TMatrix permute_T(const TMatrix& t, const UpdateOrder& order);

struct SpreadProbe {
  // Set when some step took sgn(0).
  bool saw_zero_sum = false;
  // Called with the assigned prefix after every step (lengths 1..n).
  std::function<void(std::span<const Sign>)> on_step;
};

// Grows the fragment one neuron at a time: f_1 = start, then
// f_i = sgn(sum_{j<i} B[i][j] f_j). Assigned components are never revisited.
BipolarVector spread(const BMatrix& b, Sign start_polarity, SpreadProbe* probe = nullptr);

// update_order -> permute_T -> lower_triangular -> spread, mapped back to the
// original neuron labels. This is the reference composition; the scanners use
// the fused kernel in kernels.hpp.
BipolarVector retrieve_along(const TMatrix& t, const UpdateOrder& order, Sign polarity);
BipolarVector retrieve_from(const TMatrix& t, const ProximityMatrix& p, std::size_t neuron,
                            Sign polarity, OrderStrategy strategy = OrderStrategy::row_sort);

enum class PolarityPolicy { positive, negative, both };

PolarityPolicy parse_polarity_policy(std::string_view name);
std::string_view to_string(PolarityPolicy policy);
bool polarity_enabled(PolarityPolicy policy, Sign polarity) noexcept;

struct ScanOptions {
  OrderStrategy strategy = OrderStrategy::row_sort;
  PolarityPolicy polarity = PolarityPolicy::both;
  // Credit a generator whose output is the complement of a fed memory.
  bool match_complement = false;
};

// Index of the first fed memory equal to `output` (or to its complement when
// allowed and no exact match exists).
std::optional<std::size_t> match_memory(std::span<const Sign> output,
                                        std::span<const BipolarVector> fed,
                                        bool match_complement);

// Which fed memory (if any) each (neuron, start polarity) pair generates.
class GeneratorMap {
 public:
  GeneratorMap(std::size_t n, std::size_t memory_count, PolarityPolicy policy);

  std::size_t size() const noexcept { return n_; }
  std::size_t memory_count() const noexcept { return memory_count_; }
  PolarityPolicy policy() const noexcept { return policy_; }

  std::optional<std::size_t> record(std::size_t neuron, Sign polarity) const;
  void set_record(std::size_t neuron, Sign polarity, std::optional<std::size_t> memory);

  bool is_generator(std::size_t neuron) const;
  // Memory shown for a neuron: the +1 record first, then the -1 record.
  std::optional<std::size_t> display_memory(std::size_t neuron) const;

  // Distinct fed memories with at least one generator.
  std::size_t retrieved_count() const;
  double non_generator_fraction() const;
  // Per fed memory: neurons generating it under any enabled polarity, over n.
  std::vector<double> per_memory_generator_fractions() const;

  friend bool operator==(const GeneratorMap&, const GeneratorMap&) = default;

 private:
  static std::size_t slot(std::size_t neuron, Sign polarity) noexcept {
    return 2 * neuron + (polarity > 0 ? 0 : 1);
  }

  std::size_t n_;
  std::size_t memory_count_;
  PolarityPolicy policy_;
  std::vector<std::optional<std::size_t>> records_;
};

// Serial scan through retrieve_from; the oracle for scan_generators.
GeneratorMap scan_generators_reference(const TMatrix& t, const ProximityMatrix& p,
                                       std::span<const BipolarVector> fed,
                                       const ScanOptions& options = {});

}  // namespace bmatrix
