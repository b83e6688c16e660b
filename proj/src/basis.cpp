#include "hesscalc/basis.hpp"

#include <map>
#include <mutex>

namespace hesscalc {

const FormBasis& FormBasis::get(int n, int p) {
  static std::map<std::pair<int, int>, FormBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, p});
  if (it != cache.end()) return it->second;

  FormBasis b;
  b.n = n;
  b.p = p;
  b.rank.fill(-1);
  if (p >= 0 && p <= n) {
    // lexicographic on the increasing tuple == increasing numeric mask order
    // restricted to fixed popcount? Not in general; enumerate tuples directly.
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (int v : idx) m |= Mask(1) << v;
      b.rank[m] = int(b.keys.size());
      b.keys.push_back(m);
      if (p == 0) break;
      int i = p - 1;
      while (i >= 0 && idx[i] == n - p + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  auto [pos, inserted] = cache.emplace(std::make_pair(n, p), std::move(b));
  return pos->second;
}

}  // namespace hesscalc
