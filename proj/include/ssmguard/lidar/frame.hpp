#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ssmguard/lidar/image.hpp"

namespace ssmguard::lidar {

// Synchronized quadruplet of channel images plus the sensor metadata needed
// to undo the staggered readout and to reconstruct 3D points.
//
// In a staggered frame every column holds pixels captured at one instant but
// at per-row azimuth offsets; destaggering cyclically shifts row r right by
// pixel_shift_by_row[r] so that a column corresponds to a single azimuth.
struct LidarFrame {
  std::array<ChannelImage, 4> channels;  // indexed by ChannelKind
  std::vector<std::int64_t> column_timestamps_ns;  // per column, non-decreasing
  std::vector<int> pixel_shift_by_row;             // per row
  std::int64_t frame_timestamp_ns = 0;
  bool staggered = true;

  int width() const { return channels[0].width; }
  int height() const { return channels[0].height; }

  const ChannelImage& channel(ChannelKind kind) const {
    return channels[static_cast<int>(kind)];
  }
  ChannelImage& channel(ChannelKind kind) { return channels[static_cast<int>(kind)]; }

  // Throws Error (E_FRAME_INVALID / E_FRAME_META) on inconsistent channel
  // dimensions, shift-table length, or non-monotonic column timestamps.
  void validate() const;
};

// Cyclic per-row shifts; destagger(restagger(f)) == f bit-exact.
// Preconditions on the staggered flag are enforced (E_FRAME_STATE), and a
// shift table whose length differs from the image height raises E_FRAME_META.
LidarFrame destagger(const LidarFrame& frame);
LidarFrame restagger(const LidarFrame& frame);

}  // namespace ssmguard::lidar
