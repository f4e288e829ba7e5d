#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mage {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

// 8-bit RGB image, row-major. Serialized as binary PPM (P6).
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, Rgb fill = {});

  int width() const { return width_; }
  int height() const { return height_; }

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
  void fill_rect(int x, int y, int w, int h, Rgb c);
  void fill_circle(double cx, double cy, double radius, Rgb c);
  void draw_rect_outline(int x, int y, int w, int h, Rgb c);

  // Pixel data without header.
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  std::vector<std::uint8_t> to_ppm() const;
  static Raster from_ppm(const std::vector<std::uint8_t>& bytes);

  bool operator==(const Raster&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

inline constexpr const char* kPpmMime = "image/x-portable-pixmap";

}  // namespace mage
