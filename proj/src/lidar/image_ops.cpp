#include "ssmguard/lidar/image_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "ssmguard/common/error.hpp"
#include "ssmguard/common/log.hpp"
#include "ssmguard/kernels/kernels.hpp"

namespace ssmguard::lidar {

ChannelImage downsample_bit_depth(const ChannelImage& img, bool* was_noop) {
  img.validate();
  if (img.bit_depth == 8) {
    SSMG_LOG_WARN("downsample_bit_depth: input is already 8-bit, returning unchanged");
    if (was_noop) *was_noop = true;
    return img;
  }
  if (was_noop) *was_noop = false;

  ChannelImage out = img;
  out.bit_depth = 8;
  kernels::active().downsample_shift8(img.pixels.data(), out.pixels.data(), img.pixels.size());
  return out;
}

ChannelImage resize_bilinear(const ChannelImage& img, int new_height) {
  img.validate();
  if (new_height < img.height) {
    throw Error("E_RESIZE_DOWNSCALE",
                "resize_bilinear only upscales: requested height " + std::to_string(new_height) +
                    " < input height " + std::to_string(img.height));
  }
  if (new_height == img.height) return img;

  ChannelImage out = img;
  out.height = new_height;
  out.pixels.assign(static_cast<std::size_t>(img.width) * new_height, 0);

  const auto& k = kernels::active();
  const std::size_t w = static_cast<std::size_t>(img.width);
  for (int j = 0; j < new_height; ++j) {
    double src;
    if (new_height == 1 || img.height == 1) {
      src = 0.0;
    } else {
      src = static_cast<double>(j) * (img.height - 1) / (new_height - 1);
    }
    int r0 = static_cast<int>(src);
    std::uint32_t w_q16 = static_cast<std::uint32_t>(std::lround((src - r0) * 65536.0));
    if (w_q16 == 65536u && r0 + 1 < img.height) {
      ++r0;
      w_q16 = 0;
    }
    const int r1 = std::min(r0 + 1, img.height - 1);
    k.lerp_rows_u16(img.pixels.data() + static_cast<std::size_t>(r0) * w,
                    img.pixels.data() + static_cast<std::size_t>(r1) * w,
                    out.pixels.data() + static_cast<std::size_t>(j) * w, w, w_q16);
  }
  return out;
}

namespace {

// Nearest-rank order statistic via histogram: value of the k-th smallest
// pixel (0-based rank).
std::uint16_t order_statistic(const std::vector<std::size_t>& hist, std::size_t rank) {
  std::size_t cum = 0;
  for (std::size_t v = 0; v < hist.size(); ++v) {
    cum += hist[v];
    if (cum > rank) return static_cast<std::uint16_t>(v);
  }
  return static_cast<std::uint16_t>(hist.size() - 1);
}

}  // namespace

ChannelImage auto_expose(const ChannelImage& img, double lo_percentile, double hi_percentile) {
  img.validate();
  if (!(lo_percentile >= 0.0 && lo_percentile < hi_percentile && hi_percentile <= 1.0)) {
    throw Error("E_PERCENTILE_RANGE", "auto_expose requires 0 <= lo < hi <= 1");
  }

  const std::size_t n = img.pixels.size();
  std::vector<std::size_t> hist(static_cast<std::size_t>(img.max_value()) + 1, 0);
  for (std::uint16_t v : img.pixels) ++hist[v];

  const std::size_t rank_lo =
      static_cast<std::size_t>(std::floor(lo_percentile * static_cast<double>(n - 1)));
  const std::size_t rank_hi =
      static_cast<std::size_t>(std::ceil(hi_percentile * static_cast<double>(n - 1)));
  const std::uint16_t lo = order_statistic(hist, rank_lo);
  const std::uint16_t hi = order_statistic(hist, rank_hi);
  if (lo == hi) return img;  // degenerate: constant (or near-constant) image

  ChannelImage out = img;
  const float scale = static_cast<float>(img.max_value()) / static_cast<float>(hi - lo);
  kernels::active().rescale_u16(img.pixels.data(), out.pixels.data(), n,
                                static_cast<float>(lo), scale, img.max_value());
  return out;
}

ChannelImage equalize_histogram(const ChannelImage& img) {
  img.validate();
  if (img.bit_depth != 8) {
    throw Error("E_PRECONDITION", "equalize_histogram requires an 8-bit image");
  }

  const auto [mn, mx] = std::minmax_element(img.pixels.begin(), img.pixels.end());
  if (*mn == *mx) return img;  // degenerate input passes through

  std::array<std::size_t, 256> hist{};
  for (std::uint16_t v : img.pixels) ++hist[v];

  const double n = static_cast<double>(img.pixels.size());
  std::array<std::uint16_t, 256> lut{};
  std::size_t cum = 0;
  for (int v = 0; v < 256; ++v) {
    cum += hist[v];
    lut[v] = static_cast<std::uint16_t>(std::lround(static_cast<double>(cum) * 255.0 / n));
  }

  ChannelImage out = img;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) out.pixels[i] = lut[img.pixels[i]];
  return out;
}

StackedImage stack_channels(const ChannelImage& reflectivity, const ChannelImage& signal,
                            const ChannelImage& near_ir) {
  const ChannelImage* inputs[3] = {&reflectivity, &signal, &near_ir};
  const char* names[3] = {"reflectivity", "signal", "near_ir"};
  for (int i = 0; i < 3; ++i) {
    inputs[i]->validate();
    if (inputs[i]->bit_depth != 8) {
      throw Error("E_STACK_BITDEPTH",
                  std::string("stack_channels requires 8-bit input: ") + names[i]);
    }
    if (inputs[i]->width != reflectivity.width || inputs[i]->height != reflectivity.height) {
      throw Error("E_STACK_DIMENSIONS",
                  std::string("stack_channels dimension mismatch on channel ") + names[i]);
    }
  }

  StackedImage out;
  out.width = reflectivity.width;
  out.height = reflectivity.height;
  out.planes.resize(out.plane_size() * StackedImage::depth);
  for (int p = 0; p < StackedImage::depth; ++p) {
    std::uint8_t* dst = out.planes.data() + static_cast<std::size_t>(p) * out.plane_size();
    const std::uint16_t* src = inputs[p]->pixels.data();
    for (std::size_t i = 0; i < out.plane_size(); ++i) dst[i] = static_cast<std::uint8_t>(src[i]);
  }
  return out;
}

ChannelImage extract_channel(const StackedImage& stacked, int plane) {
  if (plane < 0 || plane >= StackedImage::depth) {
    throw Error("E_STACK_PLANE", "plane index out of range");
  }
  static constexpr ChannelKind kinds[3] = {ChannelKind::reflectivity, ChannelKind::signal,
                                           ChannelKind::near_ir};
  ChannelImage out;
  out.width = stacked.width;
  out.height = stacked.height;
  out.bit_depth = 8;
  out.kind = kinds[plane];
  auto src = stacked.plane(plane);
  out.pixels.assign(src.begin(), src.end());
  return out;
}

namespace {

// Summed-area table with one row/column of zero padding at the front.
std::vector<double> integral_image(const ChannelImage& img, const ChannelImage* other) {
  const int w = img.width;
  const int h = img.height;
  std::vector<double> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0.0);
  for (int r = 0; r < h; ++r) {
    double row_sum = 0.0;
    for (int c = 0; c < w; ++c) {
      const double a = img.at(r, c);
      const double v = other ? a * static_cast<double>(other->at(r, c)) : a;
      row_sum += v;
      sat[static_cast<std::size_t>(r + 1) * (w + 1) + (c + 1)] =
          sat[static_cast<std::size_t>(r) * (w + 1) + (c + 1)] + row_sum;
    }
  }
  return sat;
}

double window_sum(const std::vector<double>& sat, int stride, int r, int c, int win) {
  const auto idx = [stride](int rr, int cc) { return static_cast<std::size_t>(rr) * stride + cc; };
  return sat[idx(r + win, c + win)] - sat[idx(r, c + win)] - sat[idx(r + win, c)] + sat[idx(r, c)];
}

}  // namespace

double ssim(const ChannelImage& a, const ChannelImage& b) {
  a.validate();
  b.validate();
  if (a.width != b.width || a.height != b.height) {
    throw Error("E_SSIM_DIMENSIONS", "ssim inputs must share dimensions");
  }

  constexpr int win = 8;
  const int w = a.width;
  const int h = a.height;
  if (w < win || h < win) {
    throw Error("E_SSIM_DIMENSIONS", "ssim requires images at least 8x8");
  }

  const double l = static_cast<double>(a.max_value());
  const double c1 = (0.01 * l) * (0.01 * l);
  const double c2 = (0.03 * l) * (0.03 * l);
  const double area = static_cast<double>(win) * win;

  const auto sa = integral_image(a, nullptr);
  const auto sb = integral_image(b, nullptr);
  const auto saa = integral_image(a, &a);
  const auto sbb = integral_image(b, &b);
  const auto sab = integral_image(a, &b);

  const int stride = w + 1;
  double total = 0.0;
  std::size_t windows = 0;
  for (int r = 0; r + win <= h; ++r) {
    for (int c = 0; c + win <= w; ++c) {
      const double mu_a = window_sum(sa, stride, r, c, win) / area;
      const double mu_b = window_sum(sb, stride, r, c, win) / area;
      const double var_a = window_sum(saa, stride, r, c, win) / area - mu_a * mu_a;
      const double var_b = window_sum(sbb, stride, r, c, win) / area - mu_b * mu_b;
      const double cov = window_sum(sab, stride, r, c, win) / area - mu_a * mu_b;
      const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
      const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
      total += num / den;
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

std::array<std::array<double, 3>, 3> channel_ssim_matrix(const LidarFrame& frame) {
  if (frame.staggered) {
    throw Error("E_PRECONDITION", "channel_ssim_matrix requires a destaggered frame");
  }
  const ChannelImage* chans[3] = {&frame.channel(ChannelKind::reflectivity),
                                  &frame.channel(ChannelKind::signal),
                                  &frame.channel(ChannelKind::near_ir)};
  for (const ChannelImage* c : chans) {
    if (c->bit_depth != 8) {
      throw Error("E_PRECONDITION", "channel_ssim_matrix requires 8-bit channels");
    }
  }

  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i) {
    m[i][i] = 1.0;
    for (int j = i + 1; j < 3; ++j) {
      const double s = ssim(*chans[i], *chans[j]);
      m[i][j] = s;
      m[j][i] = s;
    }
  }
  return m;
}

}  // namespace ssmguard::lidar
