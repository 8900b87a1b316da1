#pragma once

#include <vector>

#include "seifertq/numeric.hpp"

namespace seifertq {

// Truncated power series sum_{n < order} c_n h^n over BigComplex.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order) {}
  PowerSeries(std::size_t order, const BigComplex& constant) : c_(order) { c_[0] = constant; }

  std::size_t order() const { return c_.size(); }
  BigComplex& operator[](std::size_t i) { return c_[i]; }
  const BigComplex& operator[](std::size_t i) const { return c_[i]; }

  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
  PowerSeries inverse() const;  // needs nonzero constant term

  // exp(a + b h) and the shifted quotient (exp(b h) - 1) / h.
  static PowerSeries exp_linear(std::size_t order, const BigComplex& a, const BigComplex& b);
  static PowerSeries expm1_linear_over_h(std::size_t order, const BigComplex& b);
  static PowerSeries exp_of(const PowerSeries& s);  // exp of a series with s[0] arbitrary

 private:
  std::vector<BigComplex> c_;
};

}  // namespace seifertq
