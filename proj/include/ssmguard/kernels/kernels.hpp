#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ssmguard::kernels {

// Data-parallel inner loops shared by the image preprocessing chain and the
// point-cloud filters. Every kernel has a scalar reference implementation and
// an AVX2 variant; the two are required to produce identical output
// (bit-exact), which the kernel tests assert. Dispatch happens once at
// startup and can be overridden for testing via select_backend() or the CLI
// --simd flag.

// dst[i] = src[i] >> 8  (16-bit sample to 8-bit range)
using DownsampleShift8Fn = void (*)(const std::uint16_t* src, std::uint16_t* dst, std::size_t n);

// y = (float(src[i]) - lo) * scale, clamped to [0, out_max], rounded to
// nearest even. All arithmetic in float32 so scalar and SIMD agree exactly.
using RescaleU16Fn = void (*)(const std::uint16_t* src, std::uint16_t* dst, std::size_t n,
                              float lo, float scale, std::uint16_t out_max);

// Fixed-point row blend: dst[i] = (a[i]*(65536-w) + b[i]*w + 32768) >> 16,
// w in [0, 65536]. Backbone of the vertical bilinear resize.
using LerpRowsU16Fn = void (*)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* dst,
                               std::size_t n, std::uint32_t w_q16);

// out[i] = squared distance from (px,py,pz) to (xs[i],ys[i],zs[i]).
// Evaluation order is fixed (dx*dx, then fma dy, then fma dz) so scalar and
// FMA-based SIMD results are bit-identical.
using SqDistToPointFn = void (*)(const float* xs, const float* ys, const float* zs, std::size_t n,
                                 float px, float py, float pz, float* out);

struct Ops {
  DownsampleShift8Fn downsample_shift8;
  RescaleU16Fn rescale_u16;
  LerpRowsU16Fn lerp_rows_u16;
  SqDistToPointFn sqdist_to_point;
  const char* name;
};

namespace scalar {
void downsample_shift8(const std::uint16_t* src, std::uint16_t* dst, std::size_t n);
void rescale_u16(const std::uint16_t* src, std::uint16_t* dst, std::size_t n, float lo, float scale,
                 std::uint16_t out_max);
void lerp_rows_u16(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* dst,
                   std::size_t n, std::uint32_t w_q16);
void sqdist_to_point(const float* xs, const float* ys, const float* zs, std::size_t n, float px,
                     float py, float pz, float* out);
extern const Ops ops;
}  // namespace scalar

#if defined(SSMGUARD_HAVE_AVX2)
namespace avx2 {
void downsample_shift8(const std::uint16_t* src, std::uint16_t* dst, std::size_t n);
void rescale_u16(const std::uint16_t* src, std::uint16_t* dst, std::size_t n, float lo, float scale,
                 std::uint16_t out_max);
void lerp_rows_u16(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* dst,
                   std::size_t n, std::uint32_t w_q16);
void sqdist_to_point(const float* xs, const float* ys, const float* zs, std::size_t n, float px,
                     float py, float pz, float* out);
extern const Ops ops;
}  // namespace avx2
#endif

enum class Backend { auto_detect, scalar, avx2 };

// True when the running CPU can execute the AVX2 kernels.
bool cpu_has_avx2();

// Currently selected table. Defaults to the best supported backend.
const Ops& active();
Backend active_backend();

// Throws Error (E_SIMD_UNSUPPORTED) when the requested backend cannot run
// on this host/build.
void select_backend(Backend backend);
Backend backend_from_name(std::string_view name);

}  // namespace ssmguard::kernels
