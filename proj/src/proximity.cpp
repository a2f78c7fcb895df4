#include "bmatrix/proximity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bmatrix/errors.hpp"
#include "bmatrix/hebbian.hpp"

namespace bmatrix {

ProximityMatrix::ProximityMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < kMinNeurons) throw SizingError("proximity matrix needs n >= 2");
  if (entries_.size() != n_ * n_) {
    throw SizingError("proximity matrix expects " + std::to_string(n_ * n_) + " values");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0) throw InvariantError("proximity diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != at(j, i)) throw InvariantError("proximity matrix must be symmetric");
      if (!(at(i, j) >= 0.0)) throw InvariantError("proximity values must be nonnegative");
    }
  }
}

OrderStrategy parse_order_strategy(std::string_view name) {
  if (name == "row-sort") return OrderStrategy::row_sort;
  if (name == "greedy-chain") return OrderStrategy::greedy_chain;
  throw ConfigError("unknown order strategy '" + std::string(name) + "'");
}

std::string_view to_string(OrderStrategy strategy) {
  switch (strategy) {
    case OrderStrategy::row_sort: return "row-sort";
    case OrderStrategy::greedy_chain: return "greedy-chain";
  }
  throw ConfigError("unknown order strategy");
}

UpdateOrder::UpdateOrder(std::vector<std::size_t> order) : order_(std::move(order)) {
  if (order_.empty()) throw PermutationError("empty update order");
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw PermutationError("update order is not a permutation of 1.." +
                             std::to_string(order_.size()));
    }
    seen[v] = true;
  }
}

UpdateOrder UpdateOrder::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return UpdateOrder(std::move(order));
}

ProximityMatrix generate_fair_proximity(std::size_t n, Rng& rng) {
  if (n < kMinNeurons) throw SizingError("proximity matrix needs n >= 2");
  const double nd = static_cast<double>(n);
  const double upper = nd - 1.0;
  std::vector<double> p(n * n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double v = nd / 2.0 + static_cast<double>(j - 1) / nd;
    p[j] = v;
    p[j * n] = v;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double u = 0.0;
      while (u == 0.0) u = unit_uniform(rng);
      const double v = u * upper;
      p[i * n + j] = v;
      p[j * n + i] = v;
    }
  }
  return ProximityMatrix(n, std::move(p));
}

UpdateOrder update_order(const ProximityMatrix& p, std::size_t start, OrderStrategy strategy) {
  const std::size_t n = p.size();
  if (start >= n) {
    throw IndexError("start neuron " + std::to_string(start + 1) + " outside 1.." +
                     std::to_string(n));
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  order.push_back(start);

  switch (strategy) {
    case OrderStrategy::row_sort: {
      const auto row = p.row(start);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != start) order.push_back(j);
      }
      std::stable_sort(order.begin() + 1, order.end(),
                       [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
      break;
    }
    case OrderStrategy::greedy_chain: {
      std::vector<bool> visited(n, false);
      visited[start] = true;
      for (std::size_t step = 1; step < n; ++step) {
        const auto row = p.row(order.back());
        std::size_t best = n;
        for (std::size_t j = 0; j < n; ++j) {
          if (visited[j]) continue;
          if (best == n || row[j] < row[best]) best = j;
        }
        visited[best] = true;
        order.push_back(best);
      }
      break;
    }
    default:
      throw ConfigError("unknown order strategy");
  }
  return UpdateOrder(std::move(order));
}

}  // namespace bmatrix
