#include "seifertq/series.hpp"

#include "seifertq/errors.hpp"

namespace seifertq {

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0].re == 0 && c_[0].im == 0) throw DomainError("series inverse needs a nonzero constant term");
  std::size_t n = order();
  PowerSeries r(n);
  BigComplex inv0 = BigComplex(1) / c_[0];
  r.c_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    BigComplex s;
    for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
    r.c_[k] = -(s * inv0);
  }
  return r;
}

PowerSeries PowerSeries::exp_linear(std::size_t order, const BigComplex& a, const BigComplex& b) {
  PowerSeries r(order);
  BigComplex t = exp(a);
  for (std::size_t n = 0; n < order; ++n) {
    r.c_[n] = t;
    t = t * b / Real(static_cast<unsigned long>(n + 1));
  }
  return r;
}

PowerSeries PowerSeries::expm1_linear_over_h(std::size_t order, const BigComplex& b) {
  PowerSeries r(order);
  BigComplex t = b;
  for (std::size_t n = 0; n < order; ++n) {
    r.c_[n] = t;
    t = t * b / Real(static_cast<unsigned long>(n + 2));
  }
  return r;
}

PowerSeries PowerSeries::exp_of(const PowerSeries& s) {
  // E' = s' E
  std::size_t n = s.order();
  PowerSeries e(n);
  e.c_[0] = exp(s.c_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    BigComplex acc;
    for (std::size_t j = 1; j <= k; ++j) acc += s.c_[j] * e.c_[k - j] * Real(static_cast<unsigned long>(j));
    e.c_[k] = acc / Real(static_cast<unsigned long>(k));
  }
  return e;
}

}  // namespace seifertq
