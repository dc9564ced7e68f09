#include "decontext/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace decontext::kernels {

#if defined(DECONTEXT_HAVE_AVX2)
const Backend* avx2_impl();
#endif

const Backend* avx2() {
#if defined(DECONTEXT_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return avx2_impl();
#endif
  return nullptr;
}

namespace {

const Backend* pick() {
  if (const char* req = std::getenv("DECONTEXT_KERNELS")) {
    const std::string_view want(req);
    if (want == "scalar") return &scalar();
    if (want == "avx2" && avx2()) return avx2();
    // unknown or unavailable request: fall through to auto
  }
  if (const Backend* v = avx2()) return v;
  return &scalar();
}

}  // namespace

const Backend& active() {
  static const Backend* chosen = pick();
  return *chosen;
}

std::string active_name() { return active().name; }

}  // namespace decontext::kernels
