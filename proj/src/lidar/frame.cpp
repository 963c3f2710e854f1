#include "ssmguard/lidar/frame.hpp"

#include <algorithm>

#include "ssmguard/common/error.hpp"

namespace ssmguard::lidar {

void LidarFrame::validate() const {
  for (const ChannelImage& c : channels) c.validate();
  const int w = width();
  const int h = height();
  for (const ChannelImage& c : channels) {
    if (c.width != w || c.height != h) {
      throw Error("E_FRAME_INVALID", "channel dimensions differ within frame");
    }
  }
  if (static_cast<int>(pixel_shift_by_row.size()) != h) {
    throw Error("E_FRAME_META", "pixel_shift_by_row length does not match image height");
  }
  if (static_cast<int>(column_timestamps_ns.size()) != w) {
    throw Error("E_FRAME_META", "column_timestamps_ns length does not match image width");
  }
  if (!std::is_sorted(column_timestamps_ns.begin(), column_timestamps_ns.end())) {
    throw Error("E_FRAME_META", "column timestamps must be non-decreasing");
  }
}

namespace {

// Cyclic right shift of each row by shift[r] (left when inverse).
LidarFrame shift_rows(const LidarFrame& frame, bool inverse) {
  const int w = frame.width();
  const int h = frame.height();
  if (static_cast<int>(frame.pixel_shift_by_row.size()) != h) {
    throw Error("E_FRAME_META", "pixel_shift_by_row length does not match image height");
  }

  LidarFrame out = frame;
  for (int ci = 0; ci < 4; ++ci) {
    const ChannelImage& src = frame.channels[ci];
    ChannelImage& dst = out.channels[ci];
    for (int r = 0; r < h; ++r) {
      const int raw = frame.pixel_shift_by_row[r] * (inverse ? -1 : 1);
      const int s = ((raw % w) + w) % w;
      if (s == 0) continue;
      auto in_row = src.row(r);
      auto out_row = dst.row(r);
      std::copy(in_row.begin(), in_row.end() - s, out_row.begin() + s);
      std::copy(in_row.end() - s, in_row.end(), out_row.begin());
    }
  }
  return out;
}

}  // namespace

LidarFrame destagger(const LidarFrame& frame) {
  if (!frame.staggered) {
    throw Error("E_FRAME_STATE", "destagger called on a frame that is already destaggered");
  }
  LidarFrame out = shift_rows(frame, /*inverse=*/false);
  out.staggered = false;
  return out;
}

LidarFrame restagger(const LidarFrame& frame) {
  if (frame.staggered) {
    throw Error("E_FRAME_STATE", "restagger called on a frame that is already staggered");
  }
  LidarFrame out = shift_rows(frame, /*inverse=*/true);
  out.staggered = true;
  return out;
}

}  // namespace ssmguard::lidar
