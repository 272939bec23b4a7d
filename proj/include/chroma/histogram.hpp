#pragma once

#include <vector>

#include "chroma/color.hpp"
#include "chroma/common.hpp"
#include "chroma/image.hpp"
#include "chroma/profile.hpp"

namespace chroma {

// Attention-weighted dual-resolution histogram. Accumulation is double
// precision in row-major pixel order with one final normalization, so equal
// inputs produce bit-identical profiles.
inline ColorProfile image_histogram(const Image& img, const AttentionMap* attention,
                                    const BinLayout& layout = BinLayout::standard()) {
  if (img.width <= 0 || img.height <= 0 || img.pixels.empty())
    throw DataError("image_histogram: empty image");
  if (img.pixels.size() != img.pixel_count() * 3)
    throw DataError("image_histogram: pixel buffer size mismatch");
  if (attention) {
    if (attention->width != img.width || attention->height != img.height)
      throw DataError("image_histogram: attention map shape mismatch");
    for (const double w : attention->weights)
      if (!(w >= 0.0)) throw DataError("image_histogram: negative attention weight");
  }

  ColorProfile profile(layout);
  const auto offsets = layout.segment_offsets();
  double total = 0.0;
  const std::size_t n = img.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* px = img.pixels.data() + 3 * i;
    const double w = attention ? attention->weights[i] : 1.0;
    if (w == 0.0) {
      continue;
    }
    const LabColor lab = rgb_to_lab(px[0], px[1], px[2]);
    for (std::size_t s = 0; s < layout.resolutions.size(); ++s) {
      const int bin = bin_index(lab, layout.resolutions[s]);
      profile.weights[static_cast<std::size_t>(offsets[s] + bin)] += w;
    }
    total += w;
  }
  if (total == 0.0)
    throw DataError("image_histogram: attention map has zero total weight");
  for (double& w : profile.weights) w /= total;
  return profile;
}

inline ColorProfile image_histogram(const Image& img,
                                    const BinLayout& layout = BinLayout::standard()) {
  return image_histogram(img, nullptr, layout);
}

}  // namespace chroma
