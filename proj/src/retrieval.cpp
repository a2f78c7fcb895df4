#include "bmatrix/retrieval.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bmatrix/errors.hpp"

namespace bmatrix {

namespace {

void require_sign(Sign s) {
  if (s != 1 && s != -1) throw InvariantError("polarity must be -1 or +1");
}

constexpr Sign kPolarities[] = {Sign{1}, Sign{-1}};

}  // namespace

TMatrix permute_T(const TMatrix& t, const UpdateOrder& order) {
  const std::size_t n = t.size();
  if (order.size() != n) {
    throw SizingError("update order has " + std::to_string(order.size()) +
                      " entries for a " + std::to_string(n) + "-neuron network");
  }
  std::vector<Weight> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto src = t.row(order[a]);
    for (std::size_t b = 0; b < n; ++b) out[a * n + b] = src[order[b]];
  }
  return TMatrix::from_entries(n, std::move(out), t.memory_count());
}

BipolarVector spread(const BMatrix& b, Sign start_polarity, SpreadProbe* probe) {
  require_sign(start_polarity);
  const std::size_t n = b.size();
  const auto entries = b.entries();
  std::vector<Sign> f;
  f.reserve(n);
  f.push_back(start_polarity);
  if (probe && probe->on_step) probe->on_step(f);
  for (std::size_t i = 1; i < n; ++i) {
    std::int64_t field = 0;
    for (std::size_t j = 0; j < i; ++j) field += entries[i * n + j] * f[j];
    if (field == 0 && probe) probe->saw_zero_sum = true;
    f.push_back(sgn(field));
    if (probe && probe->on_step) probe->on_step(f);
  }
  return BipolarVector(std::move(f));
}

BipolarVector retrieve_along(const TMatrix& t, const UpdateOrder& order, Sign polarity) {
  const BMatrix b = lower_triangular(permute_T(t, order));
  const BipolarVector permuted = spread(b, polarity);
  std::vector<Sign> out(t.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[order[a]] = permuted[a];
  return BipolarVector(std::move(out));
}

BipolarVector retrieve_from(const TMatrix& t, const ProximityMatrix& p, std::size_t neuron,
                            Sign polarity, OrderStrategy strategy) {
  if (p.size() != t.size()) throw SizingError("proximity and network sizes differ");
  return retrieve_along(t, update_order(p, neuron, strategy), polarity);
}

PolarityPolicy parse_polarity_policy(std::string_view name) {
  if (name == "+1" || name == "1") return PolarityPolicy::positive;
  if (name == "-1") return PolarityPolicy::negative;
  if (name == "both") return PolarityPolicy::both;
  throw ConfigError("unknown polarity '" + std::string(name) + "' (expected +1, -1 or both)");
}

std::string_view to_string(PolarityPolicy policy) {
  switch (policy) {
    case PolarityPolicy::positive: return "+1";
    case PolarityPolicy::negative: return "-1";
    case PolarityPolicy::both: return "both";
  }
  throw ConfigError("unknown polarity policy");
}

bool polarity_enabled(PolarityPolicy policy, Sign polarity) noexcept {
  switch (policy) {
    case PolarityPolicy::positive: return polarity > 0;
    case PolarityPolicy::negative: return polarity < 0;
    case PolarityPolicy::both: return true;
  }
  return false;
}

std::optional<std::size_t> match_memory(std::span<const Sign> output,
                                        std::span<const BipolarVector> fed,
                                        bool match_complement) {
  for (std::size_t k = 0; k < fed.size(); ++k) {
    const auto m = fed[k].values();
    if (m.size() == output.size() && std::equal(m.begin(), m.end(), output.begin())) return k;
  }
  if (match_complement) {
    for (std::size_t k = 0; k < fed.size(); ++k) {
      const auto m = fed[k].values();
      if (m.size() != output.size()) continue;
      bool all = true;
      for (std::size_t i = 0; i < m.size() && all; ++i) all = (m[i] == -output[i]);
      if (all) return k;
    }
  }
  return std::nullopt;
}

GeneratorMap::GeneratorMap(std::size_t n, std::size_t memory_count, PolarityPolicy policy)
    : n_(n), memory_count_(memory_count), policy_(policy), records_(2 * n) {}

std::optional<std::size_t> GeneratorMap::record(std::size_t neuron, Sign polarity) const {
  if (neuron >= n_) throw IndexError("neuron " + std::to_string(neuron + 1) + " out of range");
  return records_[slot(neuron, polarity)];
}

void GeneratorMap::set_record(std::size_t neuron, Sign polarity,
                              std::optional<std::size_t> memory) {
  if (neuron >= n_) throw IndexError("neuron " + std::to_string(neuron + 1) + " out of range");
  if (memory && *memory >= memory_count_) throw IndexError("memory index out of range");
  records_[slot(neuron, polarity)] = memory;
}

bool GeneratorMap::is_generator(std::size_t neuron) const {
  return display_memory(neuron).has_value();
}

std::optional<std::size_t> GeneratorMap::display_memory(std::size_t neuron) const {
  if (auto m = record(neuron, 1)) return m;
  return record(neuron, -1);
}

std::size_t GeneratorMap::retrieved_count() const {
  std::set<std::size_t> distinct;
  for (const auto& r : records_) {
    if (r) distinct.insert(*r);
  }
  return distinct.size();
}

double GeneratorMap::non_generator_fraction() const {
  std::size_t idle = 0;
  for (std::size_t i = 0; i < n_; ++i) idle += is_generator(i) ? 0 : 1;
  return static_cast<double>(idle) / static_cast<double>(n_);
}

std::vector<double> GeneratorMap::per_memory_generator_fractions() const {
  std::vector<std::size_t> counts(memory_count_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto plus = records_[slot(i, 1)];
    const auto minus = records_[slot(i, -1)];
    if (plus) ++counts[*plus];
    if (minus && minus != plus) ++counts[*minus];
  }
  std::vector<double> out(memory_count_);
  for (std::size_t k = 0; k < memory_count_; ++k) {
    out[k] = static_cast<double>(counts[k]) / static_cast<double>(n_);
  }
  return out;
}

GeneratorMap scan_generators_reference(const TMatrix& t, const ProximityMatrix& p,
                                       std::span<const BipolarVector> fed,
                                       const ScanOptions& options) {
  const std::size_t n = t.size();
  if (p.size() != n) throw SizingError("proximity and network sizes differ");
  for (const auto& m : fed) {
    if (m.size() != n) throw SizingError("fed memory has the wrong dimension");
  }
  GeneratorMap map(n, fed.size(), options.polarity);
  if (fed.empty()) return map;
  for (std::size_t neuron = 0; neuron < n; ++neuron) {
    for (Sign s : kPolarities) {
      if (!polarity_enabled(options.polarity, s)) continue;
      const auto out = retrieve_from(t, p, neuron, s, options.strategy);
      map.set_record(neuron, s, match_memory(out.values(), fed, options.match_complement));
    }
  }
  return map;
}

}  // namespace bmatrix
