#include "bmatrix/hebbian.hpp"

#include <cstdlib>
#include <string>

#include "bmatrix/errors.hpp"

namespace bmatrix {

namespace {

void require_size(std::size_t n) {
  if (n < kMinNeurons) {
    throw SizingError("network needs at least 2 neurons, got " + std::to_string(n));
  }
}

void require_same_size(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw SizingError("dimension mismatch: expected " + std::to_string(expected) +
                      ", got " + std::to_string(got));
  }
}

void validate_symmetric_zero_diagonal(std::size_t n, std::span<const Weight> entries) {
  if (entries.size() != n * n) {
    throw SizingError("expected " + std::to_string(n * n) + " entries, got " +
                      std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i * n + i] != 0) {
      throw InvariantError("nonzero diagonal at neuron " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i * n + j] != entries[j * n + i]) {
        throw InvariantError("asymmetric entry at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")");
      }
    }
  }
}

}  // namespace

BipolarVector::BipolarVector(std::vector<Sign> values) : values_(std::move(values)) {
  require_size(values_.size());
  for (Sign v : values_) {
    if (v != 1 && v != -1) throw InvariantError("bipolar entries must be -1 or +1");
  }
}

BipolarVector::BipolarVector(std::initializer_list<int> values)
    : BipolarVector(std::vector<Sign>(values.begin(), values.end())) {}

BipolarVector BipolarVector::negated() const {
  std::vector<Sign> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Sign>(-values_[i]);
  return BipolarVector(std::move(out));
}

TMatrix::TMatrix(std::size_t n) : n_(n), entries_(n * n, 0) { require_size(n); }

TMatrix::TMatrix(std::size_t n, std::vector<Weight> entries, std::size_t memory_count)
    : n_(n), memory_count_(memory_count), entries_(std::move(entries)) {}

TMatrix TMatrix::from_entries(std::size_t n, std::vector<Weight> entries,
                              std::size_t memory_count) {
  require_size(n);
  validate_symmetric_zero_diagonal(n, entries);
  const auto m = static_cast<std::int64_t>(memory_count);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::int64_t w = entries[i * n + j];
      if (std::llabs(w) > m || (w + m) % 2 != 0) {
        throw InvariantError("entry at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ") inconsistent with " +
                             std::to_string(memory_count) + " memories");
      }
    }
  }
  return TMatrix(n, std::move(entries), memory_count);
}

BMatrix::BMatrix(std::size_t n) : n_(n), entries_(n * n, 0) { require_size(n); }

BMatrix::BMatrix(std::size_t n, std::vector<Weight> entries)
    : n_(n), entries_(std::move(entries)) {}

BMatrix BMatrix::from_entries(std::size_t n, std::vector<Weight> entries) {
  require_size(n);
  require_same_size(n * n, entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (entries[i * n + j] != 0) {
        throw InvariantError("B must be strictly lower triangular");
      }
    }
  }
  return BMatrix(n, std::move(entries));
}

std::vector<Weight> BMatrix::symmetrized() const {
  std::vector<Weight> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i * n_ + j] = entries_[i * n_ + j] + entries_[j * n_ + i];
    }
  }
  return out;
}

TMatrix accumulate_memory(const TMatrix& t, const BipolarVector& x) {
  const std::size_t n = t.size();
  require_same_size(n, x.size());
  std::vector<Weight> entries(t.entries().begin(), t.entries().end());
  for (std::size_t i = 0; i < n; ++i) {
    Weight* row = entries.data() + i * n;
    const Weight xi = x[i];
    for (std::size_t j = 0; j < n; ++j) row[j] += xi * x[j];
    row[i] = 0;
  }
  return TMatrix(n, std::move(entries), t.memory_count() + 1);
}

TMatrix train(std::size_t n, std::span<const BipolarVector> memories) {
  TMatrix t(n);
  for (const auto& m : memories) t = accumulate_memory(t, m);
  return t;
}

bool is_stored(const TMatrix& t, const BipolarVector& x) {
  const std::size_t n = t.size();
  require_same_size(n, x.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = t.row(i);
    std::int64_t field = 0;
    for (std::size_t j = 0; j < n; ++j) field += row[j] * x[j];
    if (sgn(field) != x[i]) return false;
  }
  return true;
}

std::size_t count_stored(const TMatrix& t, std::span<const BipolarVector> fed) {
  std::size_t count = 0;
  for (const auto& x : fed) count += is_stored(t, x) ? 1 : 0;
  return count;
}

BMatrix lower_triangular(const TMatrix& t) {
  const std::size_t n = t.size();
  std::vector<Weight> entries(n * n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto row = t.row(i);
    for (std::size_t j = 0; j < i; ++j) entries[i * n + j] = row[j];
  }
  return BMatrix(n, std::move(entries));
}

BMatrix lower_triangular(std::size_t n, std::span<const Weight> dense) {
  require_size(n);
  validate_symmetric_zero_diagonal(n, dense);
  std::vector<Weight> entries(n * n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) entries[i * n + j] = dense[i * n + j];
  }
  return BMatrix(n, std::move(entries));
}

}  // namespace bmatrix
