#include "hesscalc/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hesscalc {

namespace {

std::vector<std::array<std::uint8_t, kMaxJetDim>> enumerate_degrees(int n,
                                                                    int order) {
  // graded, lexicographic within each grade
  std::vector<std::array<std::uint8_t, kMaxJetDim>> out;
  std::array<std::uint8_t, kMaxJetDim> deg{};
  for (int total = 0; total <= order; ++total) {
    // enumerate compositions of `total` into n parts, lex order
    std::vector<int> k(n, 0);
    k[n - 1] = 0;
    // recursive enumeration via explicit stack
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
      if (pos == n - 1) {
        cur[pos] = rem;
        deg.fill(0);
        for (int i = 0; i < n; ++i) deg[i] = std::uint8_t(cur[i]);
        out.push_back(deg);
        return;
      }
      for (int v = rem; v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, rem - v);
      }
    };
    rec(rec, 0, total);
  }
  return out;
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

int JetSpace::index_of(std::span<const int> degree) const {
  int total = 0;
  for (int v : degree) total += v;
  if (total > order) return -1;
  const int start = (total == 0) ? 0 : size_at_order[total - 1];
  for (int i = start; i < size && totals[i] == total; ++i) {
    bool match = true;
    for (int d = 0; d < n; ++d) {
      if (degrees[i][d] != (d < int(degree.size()) ? degree[d] : 0)) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return -1;
}

const JetSpace& JetSpace::get(int n, int order) {
  require(n >= 1 && n <= kMaxJetDim, Errc::dimension_mismatch,
          "jet dimension out of range");
  require(order >= 0 && order <= kMaxJetOrder, Errc::order_exceeded,
          "jet order out of range");
  static std::map<std::pair<int, int>, JetSpace> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, order});
  if (it != cache.end()) return it->second;

  JetSpace s;
  s.n = n;
  s.order = order;
  s.degrees = enumerate_degrees(n, order);
  s.size = int(s.degrees.size());
  s.totals.resize(s.size);
  s.multifactorial.resize(s.size);
  for (int i = 0; i < s.size; ++i) {
    int total = 0;
    double mf = 1.0;
    for (int d = 0; d < n; ++d) {
      total += s.degrees[i][d];
      mf *= factorial(s.degrees[i][d]);
    }
    s.totals[i] = total;
    s.multifactorial[i] = mf;
  }
  for (int r = 0; r <= order + 1; ++r) {
    int count = 0;
    for (int i = 0; i < s.size; ++i)
      if (s.totals[i] <= std::min(r, order)) ++count;
    s.size_at_order[r] = count;
  }

  // slot lookup by packed degree
  auto slot_of = [&](const std::array<std::uint8_t, kMaxJetDim>& deg) -> int {
    for (int i = 0; i < s.size; ++i)
      if (s.degrees[i] == deg) return i;
    return -1;
  };

  // product table, segments ordered by output slot
  for (int k = 0; k < s.size; ++k) {
    s.conv.seg.push_back(std::uint32_t(s.conv.lhs.size()));
    for (int i = 0; i < s.size; ++i) {
      for (int j = 0; j < s.size; ++j) {
        if (s.totals[i] + s.totals[j] != s.totals[k]) continue;
        bool match = true;
        for (int d = 0; d < n; ++d) {
          if (s.degrees[i][d] + s.degrees[j][d] != s.degrees[k][d]) {
            match = false;
            break;
          }
        }
        if (match) {
          s.conv.lhs.push_back(std::uint32_t(i));
          s.conv.rhs.push_back(std::uint32_t(j));
        }
      }
    }
  }
  s.conv.seg.push_back(std::uint32_t(s.conv.lhs.size()));

  s.up_slot.assign(s.size, {});
  for (int i = 0; i < s.size; ++i) {
    for (int d = 0; d < kMaxJetDim; ++d) s.up_slot[i][d] = -1;
    for (int d = 0; d < n; ++d) {
      auto deg = s.degrees[i];
      deg[d] = std::uint8_t(deg[d] + 1);
      s.up_slot[i][d] = slot_of(deg);
    }
  }

  auto [pos, inserted] = cache.emplace(std::make_pair(n, order), std::move(s));
  return pos->second;
}

Jet Jet::constant(int n, int order, double value) {
  Jet j(JetSpace::get(n, order));
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(int n, int order, int axis, double value) {
  Jet j(JetSpace::get(n, order));
  j.c_[0] = value;
  if (order >= 1) {
    std::vector<int> deg(n, 0);
    deg[axis] = 1;
    j.c_[j.space_->index_of(deg)] = 1.0;
  }
  return j;
}

double Jet::extract(std::span<const int> degree) const {
  int total = 0;
  for (int v : degree) total += v;
  require(total <= order(), Errc::order_exceeded,
          "requested derivative exceeds jet order");
  int slot = space_->index_of(degree);
  return c_[slot] * space_->multifactorial[slot];
}

double Jet::extract1(int axis) const {
  std::vector<int> deg(n(), 0);
  deg[axis] = 1;
  return extract(deg);
}

double Jet::extract2(int a, int b) const {
  std::vector<int> deg(n(), 0);
  deg[a] += 1;
  deg[b] += 1;
  return extract(deg);
}

Jet Jet::truncated(int order) const {
  if (order >= this->order()) return *this;
  const JetSpace& target = JetSpace::get(n(), order);
  Jet out(target);
  std::copy(c_.begin(), c_.begin() + target.size, out.c_.begin());
  return out;
}

Jet Jet::derivative(int axis) const {
  require(order() >= 1, Errc::insufficient_jet_order,
          "cannot differentiate an order-0 jet");
  const JetSpace& target = JetSpace::get(n(), order() - 1);
  Jet out(target);
  for (int i = 0; i < target.size; ++i) {
    const int up = space_->up_slot[i][axis];
    // d/dx coefficient: (k_axis+1) * coeff(k + e_axis)
    out.c_[i] = c_[up] * double(space_->degrees[i][axis] + 1);
  }
  return out;
}

namespace {

// common (min-order) space; the graded layout makes truncation a prefix view
std::pair<const double*, const double*> aligned(const Jet& a, const Jet& b,
                                                const JetSpace*& space) {
  require(a.n() == b.n(), Errc::dimension_mismatch, "jet dimensions differ");
  const int ord = std::min(a.order(), b.order());
  space = &JetSpace::get(a.n(), ord);
  return {a.coeffs().data(), b.coeffs().data()};
}

}  // namespace

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& v : out.c_) v = -v;
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) { return *this = *this + rhs; }
Jet& Jet::operator-=(const Jet& rhs) { return *this = *this - rhs; }

Jet& Jet::operator+=(double rhs) {
  c_[0] += rhs;
  return *this;
}

Jet& Jet::operator-=(double rhs) {
  c_[0] -= rhs;
  return *this;
}

Jet& Jet::operator*=(double rhs) {
  kernels::ops().scale(rhs, c_.data(), c_.size());
  return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
  const JetSpace* space;
  auto [pa, pb] = aligned(a, b, space);
  Jet out(*space);
  kernels::ops().add(pa, pb, out.c_.data(), space->size);
  return out;
}

Jet operator-(const Jet& a, const Jet& b) {
  const JetSpace* space;
  auto [pa, pb] = aligned(a, b, space);
  Jet out(*space);
  kernels::ops().sub(pa, pb, out.c_.data(), space->size);
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  const JetSpace* space;
  auto [pa, pb] = aligned(a, b, space);
  Jet out(*space);
  kernels::ops().conv(pa, pb, out.c_.data(), space->conv);
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  require(b.value() != 0.0, Errc::division_by_zero_value,
          "jet division by zero value");
  // 1/b via the series of f(v)=1/v, then multiply
  const int ord = std::min(a.order(), b.order());
  const Jet bt = b.truncated(ord);
  std::vector<double> series(ord + 1);
  const double v = b.value();
  double pw = 1.0 / v;
  for (int k = 0; k <= ord; ++k) {
    series[k] = (k % 2 == 0 ? pw : -pw);
    pw /= v;
  }
  return a.truncated(ord) * jet_compose(bt, series);
}

Jet operator+(const Jet& a, double b) {
  Jet out = a;
  out.c_[0] += b;
  return out;
}
Jet operator-(const Jet& a, double b) {
  Jet out = a;
  out.c_[0] -= b;
  return out;
}
Jet operator*(const Jet& a, double b) {
  Jet out = a;
  kernels::ops().scale(b, out.c_.data(), out.c_.size());
  return out;
}
Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
Jet operator+(double a, const Jet& b) { return b + a; }
Jet operator-(double a, const Jet& b) { return (-b) + a; }
Jet operator*(double a, const Jet& b) { return b * a; }
Jet operator/(double a, const Jet& b) {
  return Jet::constant(b.n(), b.order(), a) / b;
}

Jet jet_compose(const Jet& a, std::span<const double> series) {
  // Horner in u = a - a(0); u has zero constant term so the truncation is
  // exact at a.order
  Jet u = a;
  u.c_[0] = 0.0;
  const int ord = a.order();
  Jet r = Jet::constant(a.n(), ord, series[ord]);
  for (int k = ord - 1; k >= 0; --k) {
    r = r * u;
    r.c_[0] += series[k];
  }
  return r;
}

Jet exp(const Jet& a) {
  std::vector<double> series(a.order() + 1);
  const double e = std::exp(a.value());
  double fac = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fac *= k;
    series[k] = e / fac;
  }
  return jet_compose(a, series);
}

Jet log(const Jet& a) {
  require(a.value() > 0.0, Errc::domain_violation,
          "log of non-positive jet value");
  std::vector<double> series(a.order() + 1);
  series[0] = std::log(a.value());
  double pw = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    pw /= a.value();
    series[k] = (k % 2 == 1 ? pw : -pw) / double(k);
  }
  return jet_compose(a, series);
}

Jet sqrt(const Jet& a) {
  require(a.value() > 0.0, Errc::domain_violation,
          "sqrt of non-positive jet value");
  return pow(a, 0.5);
}

Jet sin(const Jet& a) {
  std::vector<double> series(a.order() + 1);
  double fac = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fac *= k;
    switch (k % 4) {
      case 0: series[k] = std::sin(a.value()) / fac; break;
      case 1: series[k] = std::cos(a.value()) / fac; break;
      case 2: series[k] = -std::sin(a.value()) / fac; break;
      default: series[k] = -std::cos(a.value()) / fac; break;
    }
  }
  return jet_compose(a, series);
}

Jet pow(const Jet& a, double r) {
  if (r == std::floor(r) && std::abs(r) <= 64.0 && r >= 0.0)
    return powi(a, int(r));
  require(a.value() > 0.0, Errc::domain_violation,
          "pow of non-positive jet value with non-integer exponent");
  std::vector<double> series(a.order() + 1);
  const double v = a.value();
  double coeff = std::pow(v, r);
  series[0] = coeff;
  for (int k = 1; k <= a.order(); ++k) {
    coeff *= (r - double(k - 1)) / (double(k) * v);
    series[k] = coeff;
  }
  return jet_compose(a, series);
}

Jet powi(const Jet& a, int k) {
  require(k >= 0, Errc::domain_violation, "negative integer power");
  Jet result = Jet::constant(a.n(), a.order(), 1.0);
  Jet base = a;
  int e = k;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

}  // namespace hesscalc
