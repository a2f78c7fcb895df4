#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmatrix/hebbian.hpp"
#include "bmatrix/proximity.hpp"
#include "bmatrix/retrieval.hpp"

namespace bmatrix {

// Fused activity spread. Instead of materializing the relabeled B, keeps a
// running field h[x] = sum over assigned neurons y of T[x][y] f_y, indexed by
// original label, and adds one contiguous row of T per step. `field` and
// `out` must both have length n; `out` receives the pattern in original labels.
void spread_fused(const TMatrix& t, const UpdateOrder& order, Sign polarity,
                  std::span<Weight> field, std::span<Sign> out);

// Activity orders for every start neuron.
std::vector<UpdateOrder> all_update_orders(const ProximityMatrix& p, OrderStrategy strategy);

// OpenMP scan over (neuron, polarity) pairs; each pair writes only its own
// record so the result does not depend on the schedule.
GeneratorMap scan_generators(const TMatrix& t, std::span<const UpdateOrder> orders,
                             std::span<const BipolarVector> fed, const ScanOptions& options);

GeneratorMap scan_generators(const TMatrix& t, const ProximityMatrix& p,
                             std::span<const BipolarVector> fed, const ScanOptions& options = {});

}  // namespace bmatrix
