#include <atomic>

#include "ssmguard/common/error.hpp"
#include "ssmguard/kernels/kernels.hpp"

namespace ssmguard::kernels {

bool cpu_has_avx2() {
#if defined(SSMGUARD_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

struct Selection {
  const Ops* ops;
  Backend backend;
};

Selection detect() {
#if defined(SSMGUARD_HAVE_AVX2)
  if (cpu_has_avx2()) return {&avx2::ops, Backend::avx2};
#endif
  return {&scalar::ops, Backend::scalar};
}

Selection& selection() {
  static Selection sel = detect();
  return sel;
}

}  // namespace

const Ops& active() { return *selection().ops; }

Backend active_backend() { return selection().backend; }

void select_backend(Backend backend) {
  switch (backend) {
    case Backend::auto_detect:
      selection() = detect();
      return;
    case Backend::scalar:
      selection() = {&scalar::ops, Backend::scalar};
      return;
    case Backend::avx2:
#if defined(SSMGUARD_HAVE_AVX2)
      if (cpu_has_avx2()) {
        selection() = {&avx2::ops, Backend::avx2};
        return;
      }
#endif
      throw Error("E_SIMD_UNSUPPORTED", "avx2 kernels are not available on this host");
  }
}

Backend backend_from_name(std::string_view name) {
  if (name == "auto") return Backend::auto_detect;
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  throw Error("E_SIMD_UNSUPPORTED", "unknown simd backend: " + std::string(name));
}

}  // namespace ssmguard::kernels
