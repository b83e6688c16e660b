#include "hesscalc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hesscalc::kernels {

namespace {

const Ops& select() {
  const char* env = std::getenv("HESSCALC_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
  if (env && std::strcmp(env, "avx2") == 0) {
    if (const Ops* k = avx2_ops()) return *k;
    return scalar_ops();
  }
  if (const Ops* k = avx2_ops()) return *k;
  return scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops& selected = select();
  return selected;
}

}  // namespace hesscalc::kernels
