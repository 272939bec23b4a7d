#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "chroma/color.hpp"
#include "chroma/common.hpp"
#include "chroma/profile.hpp"

namespace chroma {

// Color summary: cluster centers in LAB with their mass fractions, ordered by
// descending mass.
struct Palette {
  struct Swatch {
    LabColor color;
    double mass = 0.0;
  };
  std::vector<Swatch> swatches;
};

namespace detail {

inline double lab_dist2(const LabColor& x, const LabColor& y) {
  const double dl = x.L - y.L, da = x.a - y.a, db = x.b - y.b;
  return dl * dl + da * da + db * db;
}

}  // namespace detail

// Weighted k-means over the occupied bins of the final (finest) layout
// segment. Deterministic: the first center is the heaviest bin, later centers
// are farthest-point picks, ties resolved by bin ordinal; at most 50 Lloyd
// iterations or until centers move < 1e-6.
inline Palette extract_palette(const ColorProfile& profile, int k) {
  if (k < 1) throw UsageError("extract_palette: swatch count must be >= 1");
  if (profile.layout.resolutions.empty()) throw DataError("extract_palette: empty layout");

  const Resolution res = profile.layout.resolutions.back();
  const auto offsets = profile.layout.segment_offsets();
  const int seg_begin = offsets[offsets.size() - 2];

  struct Point {
    LabColor pos;
    double mass;
  };
  std::vector<Point> points;
  for (int i = 0; i < res.bins(); ++i) {
    const double m = profile.weights[static_cast<std::size_t>(seg_begin + i)];
    if (m > 0.0) points.push_back({bin_center(i, res), m});
  }
  if (points.empty()) throw DataError("extract_palette: profile has no occupied bins");

  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), points.size());

  // Initial centers: heaviest bin, then farthest-point.
  std::vector<LabColor> centers;
  std::size_t first = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].mass > points[first].mass) first = i;
  centers.push_back(points[first].pos);
  std::vector<double> min_d2(points.size());
  while (centers.size() < kk) {
    std::size_t far = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double d2 = std::numeric_limits<double>::infinity();
      for (const auto& c : centers) d2 = std::min(d2, detail::lab_dist2(points[i].pos, c));
      min_d2[i] = d2;
      if (d2 > best) {
        best = d2;
        far = i;
      }
    }
    centers.push_back(points[far].pos);
  }

  std::vector<int> assign(points.size(), 0);
  for (int iter = 0; iter < 50; ++iter) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      int best_c = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < centers.size(); ++c) {
        const double d = detail::lab_dist2(points[i].pos, centers[c]);
        if (d < best_d) {
          best_d = d;
          best_c = static_cast<int>(c);
        }
      }
      assign[i] = best_c;
    }
    std::vector<double> mass(centers.size(), 0.0);
    std::vector<LabColor> sum(centers.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int c = assign[i];
      mass[static_cast<std::size_t>(c)] += points[i].mass;
      sum[static_cast<std::size_t>(c)].L += points[i].mass * points[i].pos.L;
      sum[static_cast<std::size_t>(c)].a += points[i].mass * points[i].pos.a;
      sum[static_cast<std::size_t>(c)].b += points[i].mass * points[i].pos.b;
    }
    double moved = 0.0;
    bool shrunk = false;
    std::vector<LabColor> next;
    next.reserve(centers.size());
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (mass[c] <= 0.0) {  // drop empty cluster
        shrunk = true;
        continue;
      }
      const LabColor nc{sum[c].L / mass[c], sum[c].a / mass[c], sum[c].b / mass[c]};
      moved = std::max(moved, std::sqrt(detail::lab_dist2(nc, centers[c])));
      next.push_back(nc);
    }
    centers = std::move(next);
    if (!shrunk && moved < 1e-6) break;
  }

  // Final assignment and per-cluster mass.
  std::vector<double> mass(centers.size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    int best_c = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double d = detail::lab_dist2(points[i].pos, centers[c]);
      if (d < best_d) {
        best_d = d;
        best_c = static_cast<int>(c);
      }
    }
    mass[static_cast<std::size_t>(best_c)] += points[i].mass;
  }

  Palette palette;
  for (std::size_t c = 0; c < centers.size(); ++c)
    if (mass[c] > 0.0) palette.swatches.push_back({centers[c], mass[c]});
  std::stable_sort(palette.swatches.begin(), palette.swatches.end(),
                   [](const Palette::Swatch& x, const Palette::Swatch& y) {
                     return x.mass > y.mass;
                   });
  // Merge coincident centers so swatches stay pairwise distinct.
  for (std::size_t i = 1; i < palette.swatches.size();) {
    bool merged = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (detail::lab_dist2(palette.swatches[i].color, palette.swatches[j].color) == 0.0) {
        palette.swatches[j].mass += palette.swatches[i].mass;
        palette.swatches.erase(palette.swatches.begin() + static_cast<std::ptrdiff_t>(i));
        merged = true;
        break;
      }
    }
    if (!merged) ++i;
  }
  return palette;
}

}  // namespace chroma
