#pragma once

#include <array>

#include "ssmguard/lidar/frame.hpp"
#include "ssmguard/lidar/image.hpp"

namespace ssmguard::lidar {

// 16-bit -> 8-bit, v -> v >> 8 (order preserving). Calling it on an 8-bit
// image is a warned no-op; was_noop reports that when non-null.
ChannelImage downsample_bit_depth(const ChannelImage& img, bool* was_noop = nullptr);

// Vertical-only bilinear upscale with corner-aligned sampling: output row j
// samples source coordinate j*(h_in-1)/(h_out-1). Width is unchanged.
// new_height < height raises E_RESIZE_DOWNSCALE.
ChannelImage resize_bilinear(const ChannelImage& img, int new_height);

// Linear stretch between the lo/hi intensity percentiles (nearest-rank order
// statistics) to the full [0, 2^depth-1] range, clipping outside. A constant
// image is returned unchanged.
ChannelImage auto_expose(const ChannelImage& img, double lo_percentile = 0.01,
                         double hi_percentile = 0.99);

// CDF-based histogram equalization for 8-bit images:
// out(v) = round(cdf(v) * 255 / N). Rank order of pixel values is preserved;
// a constant image passes through unchanged.
ChannelImage equalize_histogram(const ChannelImage& img);

// Depth-wise stack in the fixed order (reflectivity, signal, near_ir).
// Inputs must be 8-bit and share dimensions; mismatches name the offending
// channel in the error message.
StackedImage stack_channels(const ChannelImage& reflectivity, const ChannelImage& signal,
                            const ChannelImage& near_ir);

// Bit-exact inverse of stack_channels for one plane.
ChannelImage extract_channel(const StackedImage& stacked, int plane);

// Mean structural similarity over all 8x8 uniform windows (stride 1), with
// the standard stabilizers c1=(0.01*L)^2, c2=(0.03*L)^2 for L=2^depth-1.
// ssim(a,a) == 1 and ssim(a,b) == ssim(b,a) exactly.
double ssim(const ChannelImage& a, const ChannelImage& b);

// Pairwise SSIM of (reflectivity, signal, near_ir); symmetric, unit diagonal.
// Requires a destaggered frame with 8-bit intensity channels.
std::array<std::array<double, 3>, 3> channel_ssim_matrix(const LidarFrame& frame);

}  // namespace ssmguard::lidar
