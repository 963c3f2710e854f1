// AVX2 kernel variants. This translation unit is compiled with -mavx2 -mfma;
// callers must check cpu_has_avx2() before routing work here.

#include "ssmguard/kernels/kernels.hpp"

#if defined(SSMGUARD_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace ssmguard::kernels::avx2 {

void downsample_shift8(const std::uint16_t* src, std::uint16_t* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_srli_epi16(v, 8));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<std::uint16_t>(src[i] >> 8);
  }
}

void rescale_u16(const std::uint16_t* src, std::uint16_t* dst, std::size_t n, float lo, float scale,
                 std::uint16_t out_max) {
  const __m256 lo_v = _mm256_set1_ps(lo);
  const __m256 scale_v = _mm256_set1_ps(scale);
  const __m256 zero_v = _mm256_setzero_ps();
  const __m256 max_v = _mm256_set1_ps(static_cast<float>(out_max));

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    const __m256i wide = _mm256_cvtepu16_epi32(raw);
    __m256 y = _mm256_mul_ps(_mm256_sub_ps(_mm256_cvtepi32_ps(wide), lo_v), scale_v);
    y = _mm256_min_ps(_mm256_max_ps(y, zero_v), max_v);
    const __m256i r = _mm256_cvtps_epi32(y);  // rounds to nearest even
    const __m256i packed = _mm256_packus_epi32(r, r);
    const __m256i ordered = _mm256_permute4x64_epi64(packed, 0xD8);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_castsi256_si128(ordered));
  }
  const float hi_f = static_cast<float>(out_max);
  for (; i < n; ++i) {
    float y = (static_cast<float>(src[i]) - lo) * scale;
    y = std::min(std::max(y, 0.0f), hi_f);
    dst[i] = static_cast<std::uint16_t>(std::nearbyintf(y));
  }
}

void lerp_rows_u16(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* dst,
                   std::size_t n, std::uint32_t w_q16) {
  const std::uint32_t wa = 65536u - w_q16;
  const __m256i wa_v = _mm256_set1_epi32(static_cast<int>(wa));
  const __m256i wb_v = _mm256_set1_epi32(static_cast<int>(w_q16));
  const __m256i half = _mm256_set1_epi32(32768);

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i av = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    const __m256i bv = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
    __m256i acc = _mm256_add_epi32(_mm256_mullo_epi32(av, wa_v), _mm256_mullo_epi32(bv, wb_v));
    acc = _mm256_srli_epi32(_mm256_add_epi32(acc, half), 16);
    const __m256i packed = _mm256_packus_epi32(acc, acc);
    const __m256i ordered = _mm256_permute4x64_epi64(packed, 0xD8);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_castsi256_si128(ordered));
  }
  for (; i < n; ++i) {
    const std::uint32_t acc = a[i] * wa + b[i] * w_q16 + 32768u;
    dst[i] = static_cast<std::uint16_t>(acc >> 16);
  }
}

void sqdist_to_point(const float* xs, const float* ys, const float* zs, std::size_t n, float px,
                     float py, float pz, float* out) {
  const __m256 px_v = _mm256_set1_ps(px);
  const __m256 py_v = _mm256_set1_ps(py);
  const __m256 pz_v = _mm256_set1_ps(pz);

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 dx = _mm256_sub_ps(_mm256_loadu_ps(xs + i), px_v);
    const __m256 dy = _mm256_sub_ps(_mm256_loadu_ps(ys + i), py_v);
    const __m256 dz = _mm256_sub_ps(_mm256_loadu_ps(zs + i), pz_v);
    __m256 acc = _mm256_mul_ps(dx, dx);
    acc = _mm256_fmadd_ps(dy, dy, acc);
    acc = _mm256_fmadd_ps(dz, dz, acc);
    _mm256_storeu_ps(out + i, acc);
  }
  for (; i < n; ++i) {
    const float dx = xs[i] - px;
    const float dy = ys[i] - py;
    const float dz = zs[i] - pz;
    out[i] = std::fmaf(dz, dz, std::fmaf(dy, dy, dx * dx));
  }
}

const Ops ops = {&downsample_shift8, &rescale_u16, &lerp_rows_u16, &sqdist_to_point, "avx2"};

}  // namespace ssmguard::kernels::avx2

#endif  // SSMGUARD_HAVE_AVX2
