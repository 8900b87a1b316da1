#pragma once

#include <vector>

#include "seifertq/hikami.hpp"
#include "seifertq/numeric.hpp"

namespace seifertq {

// Theta(tau; j, f, M) = sum_{n >= 1} n^j f(n) e^{i pi n^2 tau / M}
struct PartialThetaSpec {
  int j = 0;
  PeriodicSequence f;
  bool parity_flag = false;  // require j even <=> f odd

  long M() const { return f.period(); }
  void validate() const;
};

struct ThetaValue {
  BigComplex value;
  Real tail_bound;
  long terms = 0;
};

ThetaValue theta_eval(const PartialThetaSpec& spec, const BigComplex& tau);

// Formal power series in (tau - alpha). Coefficient p is coeffs[p] * pi^p,
// scaled by B^{-grade/2} as in PeriodicSequence.
struct FormalSeries {
  Rational alpha;
  std::vector<Cyclotomic> coeffs;
  int grade = 0;
  long grade_base = 1;

  BigComplex coefficient(std::size_t p) const;
  BigComplex partial_sum(const BigComplex& t, std::size_t n) const;  // sum_{p < n} c_p t^p
};

// sum_p L(-2p-j, f_{alpha/M}) (pi i / M)^p t^p / p!
FormalSeries theta_asymp(const PartialThetaSpec& spec, const Rational& alpha, std::size_t n_terms);

}  // namespace seifertq
