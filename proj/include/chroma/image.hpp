#pragma once

#include <png.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "chroma/common.hpp"

namespace chroma {

// Decoded 8-bit sRGB image, row-major, 3 bytes per pixel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
  std::uint8_t* at(int x, int y) {
    return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
};

// Per-pixel non-negative weights, same spatial shape as the owning image.
struct AttentionMap {
  int width = 0;
  int height = 0;
  std::vector<double> weights;
};

namespace detail {

// Reads one PNM header token, skipping whitespace and '#' comments.
inline std::string pnm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(in.get()));
      }
      return tok;
    }
  }
  return tok;
}

inline int pnm_int(std::istream& in, const std::string& path, const char* what) {
  const std::string tok = pnm_token(in);
  try {
    const int v = std::stoi(tok);
    if (v <= 0) throw std::invalid_argument("non-positive");
    return v;
  } catch (const std::exception&) {
    throw DataError(path + ": bad PNM " + what + " field");
  }
}

}  // namespace detail

inline Image read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open");
  if (detail::pnm_token(in) != "P6") throw DataError(path + ": not a binary PPM (P6)");
  Image img;
  img.width = detail::pnm_int(in, path, "width");
  img.height = detail::pnm_int(in, path, "height");
  const int maxval = detail::pnm_int(in, path, "maxval");
  if (maxval > 255) throw DataError(path + ": 16-bit PPM not supported");
  in.get();  // single whitespace byte before raster
  const std::size_t n = img.pixel_count() * 3;
  img.pixels.resize(n);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw DataError(path + ": truncated raster");
  if (maxval != 255) {
    for (auto& v : img.pixels)
      v = static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
  }
  return img;
}

inline void write_ppm(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw DataError(path + ": write failed");
}

// PGM attention map; raw values divided by the header maxval, so results land
// in [0,1].
inline AttentionMap read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open");
  if (detail::pnm_token(in) != "P5") throw DataError(path + ": not a binary PGM (P5)");
  AttentionMap map;
  map.width = detail::pnm_int(in, path, "width");
  map.height = detail::pnm_int(in, path, "height");
  const int maxval = detail::pnm_int(in, path, "maxval");
  if (maxval > 255) throw DataError(path + ": 16-bit PGM not supported");
  in.get();
  const std::size_t n = static_cast<std::size_t>(map.width) * map.height;
  std::vector<std::uint8_t> raw(n);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw DataError(path + ": truncated raster");
  map.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.weights[i] = raw[i] / static_cast<double>(maxval);
  return map;
}

inline void write_pgm(const std::string& path, const AttentionMap& map) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << "P5\n" << map.width << " " << map.height << "\n255\n";
  std::vector<std::uint8_t> raw(map.weights.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double v = std::clamp(map.weights[i], 0.0, 1.0);
    raw[i] = static_cast<std::uint8_t>(v * 255.0 + 0.5);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw DataError(path + ": write failed");
}

namespace detail {

struct PngReader {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  explicit PngReader(const std::string& path) {
    fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw DataError(path + ": cannot open");
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
      cleanup();
      throw DataError(path + ": libpng init failed");
    }
  }
  ~PngReader() { cleanup(); }
  PngReader(const PngReader&) = delete;
  PngReader& operator=(const PngReader&) = delete;

  void cleanup() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
    fp = nullptr;
  }
};

}  // namespace detail

// Decodes any 8/16-bit PNG to 8-bit RGB (alpha dropped, palette expanded).
inline Image read_png_rgb(const std::string& path) {
  detail::PngReader r(path);
  if (setjmp(png_jmpbuf(r.png))) throw DataError(path + ": PNG decode error");
  png_init_io(r.png, r.fp);
  png_read_info(r.png, r.info);

  png_set_expand(r.png);
  png_set_strip_16(r.png);
  png_set_strip_alpha(r.png);
  png_set_gray_to_rgb(r.png);
  png_read_update_info(r.png, r.info);

  Image img;
  img.width = static_cast<int>(png_get_image_width(r.png, r.info));
  img.height = static_cast<int>(png_get_image_height(r.png, r.info));
  if (png_get_rowbytes(r.png, r.info) != static_cast<std::size_t>(img.width) * 3)
    throw DataError(path + ": unexpected PNG row size");
  img.pixels.resize(img.pixel_count() * 3);
  std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
  for (int y = 0; y < img.height; ++y) rows[static_cast<std::size_t>(y)] = img.at(0, y);
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return img;
}

// Decodes a PNG to a single channel (RGB collapsed via libpng's luminance
// transform), scaled to [0,1] by the 8-bit maximum.
inline AttentionMap read_png_gray(const std::string& path) {
  detail::PngReader r(path);
  if (setjmp(png_jmpbuf(r.png))) throw DataError(path + ": PNG decode error");
  png_init_io(r.png, r.fp);
  png_read_info(r.png, r.info);

  png_set_expand(r.png);
  png_set_strip_16(r.png);
  png_set_strip_alpha(r.png);
  const int color_type = png_get_color_type(r.png, r.info);
  if (color_type & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray(r.png, 1, -1.0, -1.0);
  png_read_update_info(r.png, r.info);

  AttentionMap map;
  map.width = static_cast<int>(png_get_image_width(r.png, r.info));
  map.height = static_cast<int>(png_get_image_height(r.png, r.info));
  if (png_get_rowbytes(r.png, r.info) != static_cast<std::size_t>(map.width))
    throw DataError(path + ": unexpected PNG row size for attention map");
  const std::size_t n = static_cast<std::size_t>(map.width) * map.height;
  std::vector<std::uint8_t> raw(n);
  std::vector<png_bytep> rows(static_cast<std::size_t>(map.height));
  for (int y = 0; y < map.height; ++y)
    rows[static_cast<std::size_t>(y)] = raw.data() + static_cast<std::size_t>(y) * map.width;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  map.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.weights[i] = raw[i] / 255.0;
  return map;
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline Image load_image(const std::string& path) {
  if (has_suffix(path, ".png") || has_suffix(path, ".PNG")) return read_png_rgb(path);
  if (has_suffix(path, ".ppm") || has_suffix(path, ".PPM")) return read_ppm(path);
  throw DataError(path + ": unsupported image format (need .png or .ppm)");
}

inline AttentionMap load_attention(const std::string& path) {
  if (has_suffix(path, ".png") || has_suffix(path, ".PNG")) return read_png_gray(path);
  if (has_suffix(path, ".pgm") || has_suffix(path, ".PGM")) return read_pgm(path);
  throw DataError(path + ": unsupported attention format (need .png or .pgm)");
}

}  // namespace chroma
