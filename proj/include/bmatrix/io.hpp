#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bmatrix/hebbian.hpp"
#include "bmatrix/proximity.hpp"

namespace bmatrix {

// Memory files: one memory per line as a string of '+' / '-' characters.
// Blank lines are skipped; every memory must have the same length.
std::vector<BipolarVector> parse_memories(std::istream& in);
std::vector<BipolarVector> read_memory_file(const std::filesystem::path& path);
std::string format_memory(const BipolarVector& memory);
void write_memories(std::ostream& out, const std::vector<BipolarVector>& memories);

// Proximity files: first line n, then n rows of n whitespace-separated
// decimals. Values are written in shortest round-trip form.
void write_proximity(std::ostream& out, const ProximityMatrix& p);
ProximityMatrix parse_proximity(std::istream& in);
ProximityMatrix read_proximity_file(const std::filesystem::path& path);

// Writes `contents` to `path` in one go, creating parent directories.
// Throws IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace bmatrix
