#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace hesscalc {

// A strictly increasing multi-index over coordinates 0..n-1, packed as a
// bitmask (n <= 6 keeps everything in a byte).
using Mask = std::uint8_t;

inline int popcount(Mask m) { return std::popcount(unsigned(m)); }

// dx^A ∧ dx^B = sign · dx^{A|B}; 0 when the factors overlap
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int m = 0; m < 8; ++m) {
    if (b & (Mask(1) << m)) inversions += std::popcount(unsigned(a) >> (m + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// (-1)^{position of m within I}, 0-based; caller guarantees m in I
inline int removal_sign(Mask I, int m) {
  const int pos = std::popcount(unsigned(I) & ((1u << m) - 1u));
  return (pos % 2 == 0) ? 1 : -1;
}

// signature of the permutation (I, I^complement) of (0..n-1)
inline int complement_sign(Mask I, int n) {
  const Mask comp = Mask(((1u << n) - 1u) & ~unsigned(I));
  return wedge_sign(I, comp);  // disjoint by construction, never 0
}

// substitute index `from` (in I) by `to`; {0,0} when `to` collides
inline std::pair<Mask, int> replace_index(Mask I, int from, int to) {
  if (to == from) return {I, 1};
  const Mask without = Mask(I & ~(Mask(1) << from));
  if (without & (Mask(1) << to)) return {Mask(0), 0};
  const Mask out = Mask(without | (Mask(1) << to));
  return {out, removal_sign(I, from) * removal_sign(out, to)};
}

// Basis of strictly increasing index tuples of length p out of n, in
// lexicographic tuple order, with O(1) rank lookup by mask.
struct FormBasis {
  int n = 0;
  int p = 0;
  std::vector<Mask> keys;
  std::array<int, 64> rank{};  // -1 where absent

  int dim() const { return int(keys.size()); }
  int rank_of(Mask m) const { return rank[m]; }

  static const FormBasis& get(int n, int p);
};

inline int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return int(r);
}

}  // namespace hesscalc
