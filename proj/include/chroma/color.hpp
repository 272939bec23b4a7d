#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "chroma/common.hpp"

namespace chroma {

// CIELAB color. Axis ranges are fixed: L in [0,100], a and b in [-128,127];
// values outside are clamped before binning.
struct LabColor {
  double L = 0.0;
  double a = 0.0;
  double b = 0.0;
};

inline constexpr double kLabLMin = 0.0;
inline constexpr double kLabLMax = 100.0;
inline constexpr double kLabAbMin = -128.0;
inline constexpr double kLabAbMax = 127.0;

inline LabColor clamp_lab(LabColor c) {
  c.L = std::clamp(c.L, kLabLMin, kLabLMax);
  c.a = std::clamp(c.a, kLabAbMin, kLabAbMax);
  c.b = std::clamp(c.b, kLabAbMin, kLabAbMax);
  return c;
}

struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
};

namespace detail {

inline double srgb_to_linear(double c) {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

inline double linear_to_srgb(double c) {
  return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

// D65 reference white.
inline constexpr double kXn = 0.95047;
inline constexpr double kYn = 1.00000;
inline constexpr double kZn = 1.08883;

inline double lab_f(double t) {
  constexpr double eps = 216.0 / 24389.0;   // (6/29)^3
  constexpr double kappa = 24389.0 / 27.0;  // (29/3)^3
  return t > eps ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

inline double lab_f_inv(double t) {
  constexpr double delta = 6.0 / 29.0;
  return t > delta ? t * t * t : 3.0 * delta * delta * (t - 4.0 / 29.0);
}

}  // namespace detail

// sRGB (8-bit, D65) -> CIELAB. Total function; output clamped into the
// declared axis ranges.
inline LabColor rgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = detail::srgb_to_linear(r8 / 255.0);
  const double g = detail::srgb_to_linear(g8 / 255.0);
  const double b = detail::srgb_to_linear(b8 / 255.0);

  const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

  const double fx = detail::lab_f(x / detail::kXn);
  const double fy = detail::lab_f(y / detail::kYn);
  const double fz = detail::lab_f(z / detail::kZn);

  LabColor lab;
  lab.L = 116.0 * fy - 16.0;
  lab.a = 500.0 * (fx - fy);
  lab.b = 200.0 * (fy - fz);
  return clamp_lab(lab);
}

inline Rgb8 lab_to_rgb(const LabColor& lab) {
  const double fy = (lab.L + 16.0) / 116.0;
  const double fx = fy + lab.a / 500.0;
  const double fz = fy - lab.b / 200.0;

  const double x = detail::kXn * detail::lab_f_inv(fx);
  const double y = detail::kYn * detail::lab_f_inv(fy);
  const double z = detail::kZn * detail::lab_f_inv(fz);

  const double r = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
  const double g = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
  const double b = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;

  auto to8 = [](double lin) {
    const double s = detail::linear_to_srgb(std::clamp(lin, 0.0, 1.0));
    return static_cast<std::uint8_t>(std::lround(std::clamp(s, 0.0, 1.0) * 255.0));
  };
  return Rgb8{to8(r), to8(g), to8(b)};
}

// One uniform subdivision of the LAB cube: nl x na x nb bins.
struct Resolution {
  int nl = 0;
  int na = 0;
  int nb = 0;

  int bins() const { return nl * na * nb; }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// The dual-resolution bin layout. The standard layout is (9,7,8) + (10,10,10),
// 504 + 1000 = 1504 bins; tests may construct reduced layouts.
struct BinLayout {
  std::vector<Resolution> resolutions;

  static BinLayout standard() { return BinLayout{{{9, 7, 8}, {10, 10, 10}}}; }

  int total_bins() const {
    int t = 0;
    for (const auto& r : resolutions) t += r.bins();
    return t;
  }

  // Segment boundaries: [0, 504, 1504] for the standard layout.
  std::vector<int> segment_offsets() const {
    std::vector<int> off{0};
    for (const auto& r : resolutions) off.push_back(off.back() + r.bins());
    return off;
  }

  friend bool operator==(const BinLayout&, const BinLayout&) = default;
};

namespace detail {

// Uniform axis binning. Boundary values fall into the lower bin; the first bin
// is closed on the left and the last on the right.
inline int axis_bin(double v, double lo, double hi, int n) {
  v = std::clamp(v, lo, hi);
  const double t = (v - lo) * static_cast<double>(n) / (hi - lo);
  const int idx = static_cast<int>(std::ceil(t)) - 1;
  return std::clamp(idx, 0, n - 1);
}

inline double axis_center(int idx, double lo, double hi, int n) {
  return lo + (hi - lo) * (idx + 0.5) / static_cast<double>(n);
}

}  // namespace detail

// Ordinal of the bin containing c, row-major over (L, a, b).
inline int bin_index(const LabColor& c, const Resolution& res) {
  const int il = detail::axis_bin(c.L, kLabLMin, kLabLMax, res.nl);
  const int ia = detail::axis_bin(c.a, kLabAbMin, kLabAbMax, res.na);
  const int ib = detail::axis_bin(c.b, kLabAbMin, kLabAbMax, res.nb);
  return (il * res.na + ia) * res.nb + ib;
}

inline LabColor bin_center(int ordinal, const Resolution& res) {
  const int ib = ordinal % res.nb;
  const int ia = (ordinal / res.nb) % res.na;
  const int il = ordinal / (res.na * res.nb);
  return LabColor{detail::axis_center(il, kLabLMin, kLabLMax, res.nl),
                  detail::axis_center(ia, kLabAbMin, kLabAbMax, res.na),
                  detail::axis_center(ib, kLabAbMin, kLabAbMax, res.nb)};
}

inline std::string rgb_to_hex(const Rgb8& c) {
  static const char* digits = "0123456789abcdef";
  std::string s = "#......";
  s[1] = digits[c.r >> 4];
  s[2] = digits[c.r & 15];
  s[3] = digits[c.g >> 4];
  s[4] = digits[c.g & 15];
  s[5] = digits[c.b >> 4];
  s[6] = digits[c.b & 15];
  return s;
}

}  // namespace chroma
