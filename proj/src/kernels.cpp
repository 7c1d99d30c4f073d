#include "repet/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace repet::kernels {

#if defined(__x86_64__) || defined(__i386__)
extern const Ops kAvx2Ops;  // defined in kernels_avx2.cpp

const Ops* avx2() {
  if (__builtin_cpu_supports("avx2")) return &kAvx2Ops;
  return nullptr;
}
#else
const Ops* avx2() { return nullptr; }
#endif

const Ops& active() {
  static const Ops* chosen = [] {
    const char* forced = std::getenv("REPET_KERNELS");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
      return &scalar();
    }
    if (const Ops* simd = avx2()) return simd;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace repet::kernels
