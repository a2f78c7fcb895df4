#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bmatrix/experiment.hpp"
#include "bmatrix/retrieval.hpp"

namespace bmatrix {

// `fed,stored_avg,retrieved_avg` header, one row per k, 6 decimals, LF.
// Throws InvariantError on empty curves.
std::string format_capacity_csv(const CapacityCurves& curves);
void emit_capacity_csv(const CapacityCurves& curves, std::ostream& sink);
// Formats fully before touching the file, so a rejected input leaves no file.
void write_capacity_csv(const CapacityCurves& curves, const std::filesystem::path& path);

// Parses what format_capacity_csv writes.
CapacityCurves parse_capacity_csv(std::istream& in);

// Vertex i (0-based) sits at angle 2*pi*i/n on the unit circle.
struct PolygonLayout {
  std::size_t n = 0;
  double scale = 240.0;  // pixels per unit radius
  double margin = 24.0;

  struct Point {
    double x;
    double y;
  };
  Point unit_vertex(std::size_t i) const;
  Point canvas_vertex(std::size_t i) const;
  double canvas_size() const { return 2.0 * (scale + margin); }
};

// Fill colors indexed by memory feed order, cycling past the end.
inline constexpr std::array<std::string_view, 20> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
    "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080", "#ffe119"};

std::string_view palette_color(std::size_t memory_index) noexcept;

// Polygon graph with generator vertices filled by the color of the memory
// they generate; chords are drawn for n <= 64 only.
inline constexpr std::size_t kMaxChordNeurons = 64;
std::string format_generator_svg(const GeneratorMap& map, const PolygonLayout& layout);
void emit_generator_svg(const GeneratorMap& map, const PolygonLayout& layout, std::ostream& sink);

// JSON document: n, memory_count, polarity, retrieved_count,
// non_generator_fraction, per_memory_generator_fractions and per-neuron
// records. Neuron and memory indices are 1-based.
std::string format_generator_report(const GeneratorMap& map);
void emit_generator_report(const GeneratorMap& map, std::ostream& sink);

}  // namespace bmatrix
