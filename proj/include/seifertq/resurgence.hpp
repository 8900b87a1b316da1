#pragma once

#include <map>
#include <optional>
#include <vector>

#include "seifertq/exact_arith.hpp"
#include "seifertq/numeric.hpp"
#include "seifertq/seifert.hpp"
#include "seifertq/theta.hpp"

namespace seifertq {

// P_0 = 1, P_1 = -x, P_j = (2x^2 - (j - 1)) P_{j-2} - x P'_{j-2}
struct StokesPolynomial {
  int j = 0;
  std::vector<Integer> coeffs;  // coeffs[nu] multiplies x^nu
  Integer at(int nu) const { return nu >= 0 && nu < static_cast<int>(coeffs.size()) ? coeffs[nu] : Integer(0); }
};

std::vector<StokesPolynomial> stokes_polynomials(int j_max);

struct LaplaceConfig {
  double epsilon = 0.39269908169872414;  // pi/8
  int max_levels = 14;
  unsigned guard_bits = 0;  // 0: chosen from the period and j
};

struct LateralValue {
  BigComplex value;
  Real error;
  long evaluations = 0;
};

// Laplace transform of the Borel transform of Theta~_{j,f,alpha,M} along
// arg xi = theta, evaluated at tau - alpha = t.
LateralValue lateral_sum(const PartialThetaSpec& spec, const Rational& alpha, const Real& theta, const BigComplex& t,
                         const LaplaceConfig& cfg = {});
// Average of the rays pi/2 - eps and pi/2 + eps.
LateralValue median_sum(const PartialThetaSpec& spec, const Rational& alpha, const BigComplex& t,
                        const LaplaceConfig& cfg = {});

struct StokesCheck {
  int sign = -1;  // -1: ray pi/2 - eps, +1: ray pi/2 + eps
  BigComplex theta;
  BigComplex lateral;
  BigComplex correction;  // the sum over nu, with the sign of the identity applied
  Real residual;
  Real quadrature_error;
};

StokesCheck stokes_check(const PartialThetaSpec& spec, const BigComplex& tau, int sign, const LaplaceConfig& cfg = {});

// gamma = (a b; c d) acting by tau -> (a tau + b) / (c tau + d)
struct ModularMatrix {
  long a = 1, b = 0, c = 0, d = 1;
};

struct DefectSample {
  BigComplex tau;
  BigComplex defect;   // Theta(tau) - eps(gamma) J^{-w} Theta(gamma tau)
  BigComplex lateral;  // lateral sum of Theta~_{j,f,-d/c,M} at tau + d/c
  Real residual;
};

struct DefectCheck {
  ModularMatrix gamma;
  int sign = -1;
  Rational weight;
  int kronecker = 0;
  long n0 = 0;
  std::vector<DefectSample> samples;
  Real max_residual;
};

// Samples the modularity defect at the given points. n0 is any element of the
// support of f. branch = +1 uses the principal J^{1/2}, -1 its negative; it
// must agree with the ray (sign -1: principal, sign +1: negative) or
// BranchMismatch is thrown. For c = 0 the defect is compared with zero.
DefectCheck modularity_defect(const PartialThetaSpec& spec, const ModularMatrix& gamma, long n0,
                              const std::vector<BigComplex>& grid, int sign, std::optional<int> branch = std::nullopt,
                              const LaplaceConfig& cfg = {});

// AEC assembly at level k.
struct AecTerm {
  std::vector<long> l;  // label in R
  Rational cs;          // S_l mod 1
  int t = 0;
  int degree = -1;      // deg H^l, -1 for the zero polynomial
  std::vector<BigComplex> H;  // coefficients of H^l(k) in k
  BigComplex contribution;    // e^{2 pi i k S} k^{3/2} E(1/k) H^l(k)
};

struct AecSTerm {
  Rational cs;
  int degree = -1;
  int dim = 0;  // largest dimension among components with this S
  BigComplex contribution;
};

struct AecResult {
  long k = 0;
  BigComplex lhs;            // WRT_k
  BigComplex rhs;
  BigComplex borel_term;     // (S^0 W_0)(1/k)
  Real residual;
  Real quadrature_error;
  std::vector<AecTerm> terms;
  std::vector<AecSTerm> by_cs;
  int vanishing_checked = 0;  // Lambda values checked to vanish exactly for l outside R
};

// E(tau) = (-1)^r tau e^{-i pi tau phi / 2} / (4 i sin(pi tau))
BigComplex aec_prefactor(const SeifertData& d, const BigComplex& tau);

// Q_{nu,s}(x) as coefficients: key (power of x, power m of (2P/(pi i))), value rational
// times e^{i pi/4}.
std::map<std::pair<int, int>, Rational> q_polynomial(const SeifertData& d, int nu, int s);

// Lambda_{nu,s,l} in the exact graded representation (times (2P)^{-1/2}).
struct LambdaValue {
  int nu = 0, s = 0;
  std::vector<long> l;
  Cyclotomic value;   // grade of the transform not applied
  BigComplex numeric;  // grade applied
};
std::vector<LambdaValue> lambda_values(const SeifertData& d);

AecResult aec_verify(const SeifertData& d, long k, const LaplaceConfig& cfg = {});

}  // namespace seifertq
