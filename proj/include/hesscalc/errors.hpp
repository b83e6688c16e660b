#pragma once

#include <stdexcept>
#include <string>

namespace hesscalc {

enum class Errc {
  dimension_mismatch,
  division_by_zero_value,
  domain_violation,
  order_exceeded,
  outside_domain,
  not_positive_definite,
  non_positive_coordinate,
  degree_overflow,
  frame_mismatch,
  degree_mismatch,
  insufficient_jet_order,
  non_convex_iterate,
  newton_diverged,
  schedule_too_aggressive,
  support_leak,
  bound_not_applicable,
  not_closed,
  zero_degree_p,
  not_a_cone,
  config_invalid,
  internal_check,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hesscalc
