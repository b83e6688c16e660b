#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hesscalc/errors.hpp"
#include "hesscalc/kernels.hpp"

namespace hesscalc {

inline constexpr int kMaxJetOrder = 4;
inline constexpr int kMaxJetDim = 6;

// Interned coefficient layout for truncated Taylor expansions in n variables
// up to a total degree. Multi-degrees are stored in graded-lex order, so the
// first size_at_order[r] slots are exactly the degrees of total <= r and
// truncation is a prefix copy.
struct JetSpace {
  int n = 0;
  int order = 0;
  int size = 0;
  std::vector<std::array<std::uint8_t, kMaxJetDim>> degrees;
  std::vector<int> totals;                       // total degree per slot
  std::vector<double> multifactorial;            // prod_i (k_i!)
  std::array<int, kMaxJetOrder + 2> size_at_order{};
  kernels::ConvTable conv;                       // truncated product table
  // slot of degree+e_axis (-1 past order) and the chain factor (deg_axis+1)
  std::vector<std::array<int, kMaxJetDim>> up_slot;

  int index_of(std::span<const int> degree) const;  // -1 if absent

  static const JetSpace& get(int n, int order);
};

// Value plus partial derivatives at a point, encoded as Taylor coefficients
// (coeff = derivative / multi-factorial). Arithmetic truncates to the min
// operand order.
class Jet {
 public:
  Jet() = default;
  explicit Jet(const JetSpace& space) : space_(&space), c_(space.size, 0.0) {}

  static Jet constant(int n, int order, double value);
  // coordinate function x_axis: value plus unit linear coefficient
  static Jet variable(int n, int order, int axis, double value);

  bool empty() const { return space_ == nullptr; }
  int n() const { return space_->n; }
  int order() const { return space_->order; }
  int size() const { return space_ ? space_->size : 0; }
  const JetSpace& space() const { return *space_; }

  double value() const { return c_[0]; }
  double& raw(int slot) { return c_[slot]; }
  double raw(int slot) const { return c_[slot]; }
  const std::vector<double>& coeffs() const { return c_; }

  // derivative d^{|k|} f / dx^k  (coefficient times multi-factorial)
  double extract(std::span<const int> degree) const;
  // first partial along one axis, as a value
  double extract1(int axis) const;
  double extract2(int a, int b) const;

  Jet truncated(int order) const;
  Jet derivative(int axis) const;  // one order lower

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator+=(double rhs);
  Jet& operator-=(double rhs);
  Jet& operator*=(double rhs);

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(const Jet& a, double b);
  friend Jet operator-(const Jet& a, double b);
  friend Jet operator*(const Jet& a, double b);
  friend Jet operator/(const Jet& a, double b);
  friend Jet operator+(double a, const Jet& b);
  friend Jet operator-(double a, const Jet& b);
  friend Jet operator*(double a, const Jet& b);
  friend Jet operator/(double a, const Jet& b);

 private:
  const JetSpace* space_ = nullptr;
  std::vector<double> c_;

  friend Jet jet_compose(const Jet& a, std::span<const double> series);
};

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet pow(const Jet& a, double r);
Jet powi(const Jet& a, int k);  // integer power, no domain restriction

// f(a) from the series f^{(k)}(a.value)/k!, truncated at a.order
Jet jet_compose(const Jet& a, std::span<const double> series);

}  // namespace hesscalc
