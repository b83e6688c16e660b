#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hesscalc::kernels {

// Pair table for a truncated polynomial product: output slot k accumulates
// sum of a[lhs[i]] * b[rhs[i]] over i in [seg[k], seg[k+1]).
struct ConvTable {
  std::vector<std::uint32_t> lhs;
  std::vector<std::uint32_t> rhs;
  std::vector<std::uint32_t> seg;

  std::size_t out_size() const { return seg.empty() ? 0 : seg.size() - 1; }
};

// All kernels follow a fixed accumulation contract (4 strided partial sums
// combined as (s0+s1)+(s2+s3), then a scalar tail) so every backend produces
// bitwise-identical results. No FMA contraction on any path.
struct Ops {
  void (*axpy)(double a, const double* x, double* y, std::size_t m);
  void (*scale)(double a, double* x, std::size_t m);
  void (*add)(const double* a, const double* b, double* out, std::size_t m);
  void (*sub)(const double* a, const double* b, double* out, std::size_t m);
  double (*dot)(const double* a, const double* b, std::size_t m);
  void (*conv)(const double* a, const double* b, double* out,
               const ConvTable& table);
  // Adjacent-pair tree reduction; clobbers x. The tree shape depends only on
  // m, so the value is independent of how callers partitioned the fill.
  double (*pairwise_sum)(double* x, std::size_t m);
  const char* name;
};

// Backend selected once per process: HESSCALC_SIMD=scalar|avx2|auto (default
// auto picks AVX2 when the CPU supports it).
const Ops& ops();

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported

}  // namespace hesscalc::kernels
