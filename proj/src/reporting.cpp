#include "bmatrix/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bmatrix/errors.hpp"
#include "bmatrix/io.hpp"

namespace bmatrix {

namespace {

template <typename... Args>
void appendf(std::string& out, const char* fmt, Args... args) {
  char buf[256];
  const int len = std::snprintf(buf, sizeof buf, fmt, args...);
  out.append(buf, static_cast<std::size_t>(len));
}

void write_or_throw(std::ostream& sink, const std::string& text, std::string_view what) {
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  sink.flush();
  if (!sink) throw IoError("failed writing " + std::string(what));
}

}  // namespace

std::string format_capacity_csv(const CapacityCurves& curves) {
  if (curves.empty()) throw InvariantError("capacity curves are empty");
  if (curves.retrieved_avg.size() != curves.stored_avg.size()) {
    throw InvariantError("capacity curves have mismatched lengths");
  }
  std::string out = "fed,stored_avg,retrieved_avg\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    appendf(out, "%zu,%.6f,%.6f\n", k + 1, curves.stored_avg[k], curves.retrieved_avg[k]);
  }
  return out;
}

void emit_capacity_csv(const CapacityCurves& curves, std::ostream& sink) {
  write_or_throw(sink, format_capacity_csv(curves), "capacity CSV");
}

void write_capacity_csv(const CapacityCurves& curves, const std::filesystem::path& path) {
  write_text_file(path, format_capacity_csv(curves));
}

CapacityCurves parse_capacity_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "fed,stored_avg,retrieved_avg") {
    throw ParseError("capacity CSV: missing header");
  }
  CapacityCurves curves;
  std::size_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t fed = 0;
    double stored = 0.0, retrieved = 0.0;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &fed, &stored, &retrieved) != 3 ||
        fed != expected) {
      throw ParseError("capacity CSV: bad row '" + line + "'");
    }
    curves.stored_avg.push_back(stored);
    curves.retrieved_avg.push_back(retrieved);
    ++expected;
  }
  return curves;
}

PolygonLayout::Point PolygonLayout::unit_vertex(std::size_t i) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

PolygonLayout::Point PolygonLayout::canvas_vertex(std::size_t i) const {
  const Point u = unit_vertex(i);
  const double c = scale + margin;
  // SVG y grows downward; flip so neuron order runs counter-clockwise.
  return {c + scale * u.x, c - scale * u.y};
}

std::string_view palette_color(std::size_t memory_index) noexcept {
  return kPalette[memory_index % kPalette.size()];
}

std::string format_generator_svg(const GeneratorMap& map, const PolygonLayout& layout) {
  const std::size_t n = map.size();
  if (layout.n != n) {
    throw SizingError("layout has " + std::to_string(layout.n) + " vertices, map has " +
                      std::to_string(n) + " neurons");
  }
  const double size = layout.canvas_size();
  const double radius = std::clamp(layout.scale * 2.4 / static_cast<double>(n), 2.0, 12.0);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
          "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
          size, size, size, size);

  if (n <= kMaxChordNeurons) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = layout.canvas_vertex(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto b = layout.canvas_vertex(j);
        appendf(out,
                "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#d0d0d0\" "
                "stroke-width=\"0.5\"/>\n",
                a.x, a.y, b.x, b.y);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto p = layout.canvas_vertex(i);
    const auto memory = map.display_memory(i);
    const std::string fill = memory ? std::string(palette_color(*memory)) : "none";
    appendf(out, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"%s\" stroke=\"#000000\"/>\n",
            p.x, p.y, radius, fill.c_str());
  }
  out += "</svg>\n";
  return out;
}

void emit_generator_svg(const GeneratorMap& map, const PolygonLayout& layout,
                        std::ostream& sink) {
  write_or_throw(sink, format_generator_svg(map, layout), "generator SVG");
}

std::string format_generator_report(const GeneratorMap& map) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = map.size();
  doc["memory_count"] = map.memory_count();
  doc["polarity"] = std::string(to_string(map.policy()));
  doc["retrieved_count"] = map.retrieved_count();
  doc["non_generator_fraction"] = map.non_generator_fraction();
  doc["per_memory_generator_fractions"] = map.per_memory_generator_fractions();

  ordered_json records = ordered_json::array();
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (Sign s : {Sign{1}, Sign{-1}}) {
      if (!polarity_enabled(map.policy(), s)) continue;
      ordered_json r;
      r["neuron"] = i + 1;
      r["polarity"] = static_cast<int>(s);
      if (const auto m = map.record(i, s)) {
        r["memory"] = *m + 1;
      } else {
        r["memory"] = nullptr;
      }
      records.push_back(std::move(r));
    }
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

void emit_generator_report(const GeneratorMap& map, std::ostream& sink) {
  write_or_throw(sink, format_generator_report(map), "generator report");
}

}  // namespace bmatrix
