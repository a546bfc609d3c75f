#include "scband/simd/kernels.hpp"

namespace scband::simd {

const Backend* avx2_backend_impl();  // defined in kernels_avx2.cpp

const Backend* avx2_backend() {
#if defined(__x86_64__) || defined(_M_X64)
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return avx2_backend_impl();
#else
  return nullptr;
#endif
}

namespace {
const Backend* g_override = nullptr;
}

const Backend& active_backend() {
  if (g_override) return *g_override;
  static const Backend* selected = [] {
    if (const Backend* b = avx2_backend()) return b;
    return &scalar_backend();
  }();
  return *selected;
}

void set_active_backend(const Backend* backend) { g_override = backend; }

}  // namespace scband::simd
