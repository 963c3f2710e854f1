#pragma once

#include <filesystem>
#include <vector>

#include "ssmguard/lidar/frame.hpp"
#include "ssmguard/lidar/image.hpp"

namespace ssmguard::lidar {

// Per-row beam angles (degrees) mapping destaggered pixels to directions.
struct BeamIntrinsics {
  std::vector<double> altitude_deg;
  std::vector<double> azimuth_deg;
};

// Sidecar metadata for a recorded sequence (meta.json).
struct SequenceMeta {
  std::vector<int> pixel_shift_by_row;
  std::vector<std::int64_t> frame_timestamps_ns;
  std::vector<std::vector<std::int64_t>> column_timestamps_ns;  // per frame
  BeamIntrinsics beam_intrinsics;
  double range_scale_m = 0.001;  // meters per range LSB
  bool staggered = true;
};

// Recording layout: one directory per sequence holding per-frame 16-bit
// grayscale PNGs named {index}_{channel}.png plus meta.json.
void write_sequence(const std::filesystem::path& dir, const std::vector<LidarFrame>& frames,
                    const BeamIntrinsics& intrinsics, double range_scale_m);
std::vector<LidarFrame> read_sequence(const std::filesystem::path& dir,
                                      SequenceMeta* meta_out = nullptr);

// Grayscale PNG helpers (bit depth follows ChannelImage::bit_depth).
void write_png(const std::filesystem::path& path, const ChannelImage& img);
ChannelImage read_png(const std::filesystem::path& path, ChannelKind kind);

// 8-bit RGB PNG of a stacked image (R=reflectivity, G=signal, B=near_ir).
void write_png_rgb(const std::filesystem::path& path, const StackedImage& img);

}  // namespace ssmguard::lidar
