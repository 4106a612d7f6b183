#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace editar {

// H x W x 3 intensities in [0, 1], row-major with interleaved channels.
struct Image {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> pixels;

  Image() = default;
  Image(std::size_t h, std::size_t w, double fill = 0.0) : height(h), width(w), pixels(h * w * 3, fill) {}

  double& at(std::size_t y, std::size_t x, std::size_t c) { return pixels[(y * width + x) * 3 + c]; }
  double at(std::size_t y, std::size_t x, std::size_t c) const { return pixels[(y * width + x) * 3 + c]; }

  bool operator==(const Image&) const = default;
};

using Mask = std::vector<bool>;  // H*W, row-major

// 8-bit quantization used by PPM: round(255 x) after clamping.
std::uint8_t to_byte(double v);
double from_byte(std::uint8_t b);

std::string encode_ppm(const Image& img);
// Throws an io error on malformed data (only maxval 255 is accepted).
Image decode_ppm(const std::string& bytes);

Image read_ppm(const std::string& path);
void write_ppm(const std::string& path, const Image& img);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace editar
