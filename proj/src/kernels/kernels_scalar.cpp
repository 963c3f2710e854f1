#include <algorithm>
#include <cmath>

#include "ssmguard/kernels/kernels.hpp"

namespace ssmguard::kernels::scalar {

void downsample_shift8(const std::uint16_t* src, std::uint16_t* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint16_t>(src[i] >> 8);
  }
}

void rescale_u16(const std::uint16_t* src, std::uint16_t* dst, std::size_t n, float lo, float scale,
                 std::uint16_t out_max) {
  const float hi_f = static_cast<float>(out_max);
  for (std::size_t i = 0; i < n; ++i) {
    float y = (static_cast<float>(src[i]) - lo) * scale;
    y = std::min(std::max(y, 0.0f), hi_f);
    // nearbyintf rounds to nearest even in the default FP environment, the
    // same mode _mm256_cvtps_epi32 uses.
    dst[i] = static_cast<std::uint16_t>(std::nearbyintf(y));
  }
}

void lerp_rows_u16(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* dst,
                   std::size_t n, std::uint32_t w_q16) {
  const std::uint32_t wa = 65536u - w_q16;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t acc = a[i] * wa + b[i] * w_q16 + 32768u;
    dst[i] = static_cast<std::uint16_t>(acc >> 16);
  }
}

void sqdist_to_point(const float* xs, const float* ys, const float* zs, std::size_t n, float px,
                     float py, float pz, float* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const float dx = xs[i] - px;
    const float dy = ys[i] - py;
    const float dz = zs[i] - pz;
    out[i] = std::fmaf(dz, dz, std::fmaf(dy, dy, dx * dx));
  }
}

const Ops ops = {&downsample_shift8, &rescale_u16, &lerp_rows_u16, &sqdist_to_point, "scalar"};

}  // namespace ssmguard::kernels::scalar
