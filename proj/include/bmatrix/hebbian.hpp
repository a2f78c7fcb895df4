#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bmatrix {

using Sign = std::int8_t;
using Weight = std::int32_t;

inline constexpr std::size_t kMinNeurons = 2;

// Signum with sgn(0) = +1. Never returns 0.
constexpr Sign sgn(std::int64_t k) noexcept { return k >= 0 ? Sign{1} : Sign{-1}; }

// A length-n pattern over {-1,+1}.
class BipolarVector {
 public:
  BipolarVector() = default;
  explicit BipolarVector(std::vector<Sign> values);
  BipolarVector(std::initializer_list<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  Sign operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const Sign> values() const noexcept { return values_; }

  BipolarVector negated() const;

  friend bool operator==(const BipolarVector&, const BipolarVector&) = default;

 private:
  std::vector<Sign> values_;
};

// Symmetric, zero-diagonal Hebbian interconnection matrix, row-major.
class TMatrix {
 public:
  explicit TMatrix(std::size_t n);

  // Builds from a dense matrix; validates symmetry and the zero diagonal.
  static TMatrix from_entries(std::size_t n, std::vector<Weight> entries,
                              std::size_t memory_count);

  std::size_t size() const noexcept { return n_; }
  std::size_t memory_count() const noexcept { return memory_count_; }
  Weight at(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  std::span<const Weight> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const Weight> entries() const noexcept { return entries_; }

  friend bool operator==(const TMatrix&, const TMatrix&) = default;

 private:
  TMatrix(std::size_t n, std::vector<Weight> entries, std::size_t memory_count);
  friend TMatrix accumulate_memory(const TMatrix&, const BipolarVector&);

  std::size_t n_ = 0;
  std::size_t memory_count_ = 0;
  std::vector<Weight> entries_;
};

// Strictly lower-triangular half of a TMatrix.
class BMatrix {
 public:
  explicit BMatrix(std::size_t n);
  // Validates strict lower triangularity.
  static BMatrix from_entries(std::size_t n, std::vector<Weight> entries);

  std::size_t size() const noexcept { return n_; }
  Weight at(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
  std::span<const Weight> entries() const noexcept { return entries_; }

  // B + B^t as a dense row-major matrix.
  std::vector<Weight> symmetrized() const;

 private:
  BMatrix(std::size_t n, std::vector<Weight> entries);
  friend BMatrix lower_triangular(const TMatrix&);
  friend BMatrix lower_triangular(std::size_t, std::span<const Weight>);

  std::size_t n_ = 0;
  std::vector<Weight> entries_;
};

TMatrix accumulate_memory(const TMatrix& t, const BipolarVector& x);
TMatrix train(std::size_t n, std::span<const BipolarVector> memories);

// sgn(T x) == x componentwise, single pass.
bool is_stored(const TMatrix& t, const BipolarVector& x);
std::size_t count_stored(const TMatrix& t, std::span<const BipolarVector> fed);

BMatrix lower_triangular(const TMatrix& t);
// Decomposes an unvalidated dense matrix; throws InvariantError unless it is
// symmetric with a zero diagonal.
BMatrix lower_triangular(std::size_t n, std::span<const Weight> dense);

}  // namespace bmatrix
