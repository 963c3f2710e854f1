#include "ssmguard/lidar/image.hpp"

#include <string>

#include "ssmguard/common/error.hpp"

namespace ssmguard::lidar {

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::range: return "range";
    case ChannelKind::signal: return "signal";
    case ChannelKind::near_ir: return "near_ir";
    case ChannelKind::reflectivity: return "reflectivity";
  }
  return "?";
}

ChannelKind channel_kind_from_string(std::string_view name) {
  if (name == "range") return ChannelKind::range;
  if (name == "signal") return ChannelKind::signal;
  if (name == "near_ir") return ChannelKind::near_ir;
  if (name == "reflectivity") return ChannelKind::reflectivity;
  throw Error("E_IMAGE_INVALID", "unknown channel kind: " + std::string(name));
}

ChannelImage ChannelImage::filled(int width, int height, int bit_depth, ChannelKind kind,
                                  std::uint16_t value) {
  ChannelImage img;
  img.width = width;
  img.height = height;
  img.bit_depth = bit_depth;
  img.kind = kind;
  img.pixels.assign(static_cast<std::size_t>(width) * height, value);
  return img;
}

void ChannelImage::validate() const {
  if (width <= 0 || height <= 0) {
    throw Error("E_IMAGE_INVALID", "image dimensions must be positive");
  }
  if (bit_depth != 8 && bit_depth != 16) {
    throw Error("E_IMAGE_INVALID", "bit depth must be 8 or 16");
  }
  if (pixels.size() != pixel_count()) {
    throw Error("E_IMAGE_INVALID", "pixel buffer size does not match width*height");
  }
  if (bit_depth == 8) {
    for (std::uint16_t v : pixels) {
      if (v > 255) {
        throw Error("E_IMAGE_INVALID", "8-bit image contains value > 255");
      }
    }
  }
}

}  // namespace ssmguard::lidar
