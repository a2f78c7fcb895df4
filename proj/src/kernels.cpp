#include "bmatrix/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include <omp.h>

#include "bmatrix/errors.hpp"

namespace bmatrix {

void spread_fused(const TMatrix& t, const UpdateOrder& order, Sign polarity,
                  std::span<Weight> field, std::span<Sign> out) {
  const std::size_t n = t.size();
  std::fill(field.begin(), field.end(), 0);
  Weight* __restrict h = field.data();

  Sign s = polarity;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t neuron = order[step];
    if (step > 0) s = sgn(h[neuron]);
    out[neuron] = s;
    if (step + 1 == n) break;
    const Weight* __restrict row = t.row(neuron).data();
    if (s > 0) {
#pragma omp simd
      for (std::size_t x = 0; x < n; ++x) h[x] += row[x];
    } else {
#pragma omp simd
      for (std::size_t x = 0; x < n; ++x) h[x] -= row[x];
    }
  }
}

std::vector<UpdateOrder> all_update_orders(const ProximityMatrix& p, OrderStrategy strategy) {
  std::vector<UpdateOrder> orders;
  orders.reserve(p.size());
  for (std::size_t start = 0; start < p.size(); ++start) {
    orders.push_back(update_order(p, start, strategy));
  }
  return orders;
}

GeneratorMap scan_generators(const TMatrix& t, std::span<const UpdateOrder> orders,
                             std::span<const BipolarVector> fed, const ScanOptions& options) {
  const std::size_t n = t.size();
  if (orders.size() != n) throw SizingError("need one update order per neuron");
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i].size() != n || orders[i].start() != i) {
      throw PermutationError("update order " + std::to_string(i + 1) +
                             " does not start at its neuron");
    }
  }
  for (const auto& m : fed) {
    if (m.size() != n) throw SizingError("fed memory has the wrong dimension");
  }

  GeneratorMap map(n, fed.size(), options.polarity);
  if (fed.empty()) return map;

  const auto tasks = static_cast<std::int64_t>(2 * n);
  std::vector<std::optional<std::size_t>> results(2 * n);

#pragma omp parallel
  {
    std::vector<Weight> field(n);
    std::vector<Sign> out(n);
#pragma omp for schedule(static)
    for (std::int64_t task = 0; task < tasks; ++task) {
      const auto neuron = static_cast<std::size_t>(task / 2);
      const Sign s = (task % 2 == 0) ? Sign{1} : Sign{-1};
      if (!polarity_enabled(options.polarity, s)) continue;
      spread_fused(t, orders[neuron], s, field, out);
      results[static_cast<std::size_t>(task)] =
          match_memory(out, fed, options.match_complement);
    }
  }

  for (std::size_t neuron = 0; neuron < n; ++neuron) {
    map.set_record(neuron, 1, results[2 * neuron]);
    map.set_record(neuron, -1, results[2 * neuron + 1]);
  }
  return map;
}

GeneratorMap scan_generators(const TMatrix& t, const ProximityMatrix& p,
                             std::span<const BipolarVector> fed, const ScanOptions& options) {
  if (p.size() != t.size()) throw SizingError("proximity and network sizes differ");
  const auto orders = all_update_orders(p, options.strategy);
  return scan_generators(t, orders, fed, options);
}

}  // namespace bmatrix
