#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ssmguard::lidar {

enum class ChannelKind { range = 0, signal = 1, near_ir = 2, reflectivity = 3 };

const char* to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(std::string_view name);

// One 2D sensor channel, row-major. Pixels are stored as uint16 regardless of
// bit depth; the bit_depth field bounds the legal value range (v < 2^depth).
struct ChannelImage {
  int width = 0;
  int height = 0;
  int bit_depth = 16;  // 8 or 16
  ChannelKind kind = ChannelKind::range;
  std::vector<std::uint16_t> pixels;

  static ChannelImage filled(int width, int height, int bit_depth, ChannelKind kind,
                             std::uint16_t value = 0);

  std::uint16_t max_value() const { return bit_depth == 8 ? 255 : 65535; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  std::uint16_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  std::uint16_t& at(int row, int col) {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }

  std::span<const std::uint16_t> row(int r) const {
    return {pixels.data() + static_cast<std::size_t>(r) * width, static_cast<std::size_t>(width)};
  }
  std::span<std::uint16_t> row(int r) {
    return {pixels.data() + static_cast<std::size_t>(r) * width, static_cast<std::size_t>(width)};
  }

  // Throws Error (E_IMAGE_INVALID) when dimensions, pixel count, or value
  // range are inconsistent.
  void validate() const;
};

// Depth-wise stack of the three intensity channels. Channel order is fixed:
// plane 0 = reflectivity, plane 1 = signal, plane 2 = near_ir.
struct StackedImage {
  static constexpr int depth = 3;

  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> planes;  // planar, depth * width * height

  std::size_t plane_size() const { return static_cast<std::size_t>(width) * height; }
  std::span<const std::uint8_t> plane(int index) const {
    return {planes.data() + static_cast<std::size_t>(index) * plane_size(), plane_size()};
  }
};

}  // namespace ssmguard::lidar
