#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "chroma/color.hpp"
#include "chroma/common.hpp"

namespace chroma {

// Dual-resolution color histogram. Each segment (one per layout resolution)
// is a distribution: non-negative weights summing to 1 within 1e-6.
struct ColorProfile {
  std::vector<double> weights;
  BinLayout layout;

  ColorProfile() = default;
  explicit ColorProfile(BinLayout l)
      : weights(static_cast<std::size_t>(l.total_bins()), 0.0), layout(std::move(l)) {}

  int size() const { return static_cast<int>(weights.size()); }

  bool valid(double tol = 1e-6) const {
    if (static_cast<int>(weights.size()) != layout.total_bins()) return false;
    for (const double w : weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) return false;
    }
    const auto off = layout.segment_offsets();
    for (std::size_t s = 0; s + 1 < off.size(); ++s) {
      double sum = 0.0;
      for (int i = off[s]; i < off[s + 1]; ++i) sum += weights[static_cast<std::size_t>(i)];
      if (std::fabs(sum - 1.0) > tol) return false;
    }
    return true;
  }
};

inline double l2_distance(const ColorProfile& a, const ColorProfile& b) {
  if (a.layout != b.layout)
    throw DataError("color profile layout mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.weights.size(); ++i) {
    const double d = a.weights[i] - b.weights[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Profile store: header line `#chroma-profile v1 <bins>`, then one profile
// per line as space-separated decimal floats.
inline void write_profile_store(std::ostream& out, const std::vector<ColorProfile>& profiles,
                                const BinLayout& layout) {
  out << "#chroma-profile v1 " << layout.total_bins() << "\n";
  char buf[40];
  for (const auto& p : profiles) {
    if (p.layout != layout) throw DataError("profile store: layout mismatch");
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p.weights[i]);
      if (i) out << ' ';
      out << buf;
    }
    out << "\n";
  }
}

inline std::vector<ColorProfile> read_profile_store(std::istream& in, const BinLayout& layout,
                                                    const std::string& where = "profile store") {
  std::string header;
  if (!std::getline(in, header)) throw DataError(where + ": empty file");
  const std::string expect = "#chroma-profile v1 " + std::to_string(layout.total_bins());
  if (header != expect)
    throw DataError(where + ": bad header '" + header + "', expected '" + expect + "'");
  std::vector<ColorProfile> profiles;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ColorProfile p(layout);
    const char* s = line.data();
    const char* end = s + line.size();
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      while (s < end && *s == ' ') ++s;
      auto [next, ec] = std::from_chars(s, end, p.weights[i]);
      if (ec != std::errc())
        throw DataError(where + ": line " + std::to_string(lineno) + ": expected " +
                        std::to_string(p.weights.size()) + " floats");
      s = next;
    }
    while (s < end && *s == ' ') ++s;
    if (s != end)
      throw DataError(where + ": line " + std::to_string(lineno) + ": trailing data");
    profiles.push_back(std::move(p));
  }
  return profiles;
}

}  // namespace chroma
