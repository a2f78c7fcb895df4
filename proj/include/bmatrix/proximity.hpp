#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "bmatrix/rng.hpp"

namespace bmatrix {

// Symmetric, zero-diagonal geometric proximity values. Smaller value means a
// closer neuron.
class ProximityMatrix {
 public:
  // Validates shape, symmetry, zero diagonal and nonnegativity.
  ProximityMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  friend bool operator==(const ProximityMatrix&, const ProximityMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

enum class OrderStrategy { row_sort, greedy_chain };

OrderStrategy parse_order_strategy(std::string_view name);
std::string_view to_string(OrderStrategy strategy);

// Permutation of 0..n-1 (0-based internally) giving the activity order.
class UpdateOrder {
 public:
  // Throws PermutationError unless order is a bijection on 0..n-1.
  explicit UpdateOrder(std::vector<std::size_t> order);
  static UpdateOrder identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t start() const noexcept { return order_.front(); }
  std::size_t operator[](std::size_t position) const noexcept { return order_[position]; }
  std::span<const std::size_t> positions() const noexcept { return order_; }

  friend bool operator==(const UpdateOrder&, const UpdateOrder&) = default;

 private:
  std::vector<std::size_t> order_;
};

// Row 0 holds the canonical chain n/2 + (j-1)/n (0-based j), strictly
// increasing inside [n/2, n/2 + 1). All other off-diagonal pairs are uniform
// on the open interval (0, n-1) and mirrored.
ProximityMatrix generate_fair_proximity(std::size_t n, Rng& rng);

UpdateOrder update_order(const ProximityMatrix& p, std::size_t start,
                         OrderStrategy strategy = OrderStrategy::row_sort);

}  // namespace bmatrix
