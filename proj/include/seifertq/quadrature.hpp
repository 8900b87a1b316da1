#pragma once

#include <functional>

#include "seifertq/numeric.hpp"

namespace seifertq {

struct QuadResult {
  BigComplex value;
  Real error;       // |I_h - I_{2h}| at the last level, plus truncation allowance
  int levels = 0;
  long evaluations = 0;
  bool converged = false;
};

using RealToComplex = std::function<BigComplex(const Real&)>;
using ComplexToComplex = std::function<BigComplex(const BigComplex&)>;

// Double-exponential rules with step halving. Convergence is declared when two
// successive levels agree to tol.
QuadResult tanh_sinh(const RealToComplex& f, const Real& a, const Real& b, const Real& tol, int max_levels = 12);
QuadResult exp_sinh(const RealToComplex& f, const Real& a, const Real& tol, int max_levels = 12);

// (1 / 2 pi i) times the contour integral of f over |z - c| = radius, by the
// trapezoid rule with node doubling.
QuadResult circle_residue(const ComplexToComplex& f, const BigComplex& center, const Real& radius,
                          const Real& tol, unsigned start_nodes = 32, unsigned max_nodes = 4096);

}  // namespace seifertq
