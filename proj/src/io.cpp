#include "bmatrix/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bmatrix/errors.hpp"

namespace bmatrix {

std::vector<BipolarVector> parse_memories(std::istream& in) {
  std::vector<BipolarVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Sign> v;
    v.reserve(line.size());
    for (char c : line) {
      if (c == '+') {
        v.push_back(1);
      } else if (c == '-') {
        v.push_back(-1);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unexpected character '" +
                         std::string(1, c) + "' in memory");
      }
    }
    if (!out.empty() && v.size() != out.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": memory length " +
                       std::to_string(v.size()) + " differs from " +
                       std::to_string(out.front().size()));
    }
    if (v.size() < kMinNeurons) {
      throw ParseError("line " + std::to_string(line_no) + ": memory shorter than 2 neurons");
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<BipolarVector> read_memory_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open memory file " + path.string());
  try {
    return parse_memories(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_memory(const BipolarVector& memory) {
  std::string s;
  s.reserve(memory.size());
  for (Sign v : memory.values()) s.push_back(v > 0 ? '+' : '-');
  return s;
}

void write_memories(std::ostream& out, const std::vector<BipolarVector>& memories) {
  for (const auto& m : memories) out << format_memory(m) << '\n';
}

void write_proximity(std::ostream& out, const ProximityMatrix& p) {
  const std::size_t n = p.size();
  out << n << '\n';
  char buf[32];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto res = std::to_chars(buf, buf + sizeof buf, p.at(i, j));
      if (j) out << ' ';
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

ProximityMatrix parse_proximity(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw ParseError("proximity file is empty");
  std::size_t n = 0;
  {
    const auto res = std::from_chars(token.data(), token.data() + token.size(), n);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw ParseError("proximity file: bad size '" + token + "'");
    }
  }
  if (n < kMinNeurons) throw ParseError("proximity file: n must be >= 2");
  std::vector<double> values;
  values.reserve(n * n);
  while (values.size() < n * n && in >> token) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw ParseError("proximity file: bad value '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.size() != n * n) {
    throw ParseError("proximity file: expected " + std::to_string(n * n) + " values, got " +
                     std::to_string(values.size()));
  }
  if (in >> token) throw ParseError("proximity file: trailing data '" + token + "'");
  try {
    return ProximityMatrix(n, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("proximity file: ") + e.what());
  }
}

ProximityMatrix read_proximity_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open proximity file " + path.string());
  return parse_proximity(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace bmatrix
