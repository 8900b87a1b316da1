#pragma once

#include <map>
#include <vector>

#include "seifertq/hikami.hpp"
#include "seifertq/seifert.hpp"
#include "seifertq/theta.hpp"

namespace seifertq {

// Coefficients of Z*(q) = sum_m chi~(m) q^{(m^2 - m0^2)/(4P)}.
struct LaurentCoefficients {
  long m_min = 0;
  long m_max = 0;
  std::map<long, Integer> coeffs;  // nonzero entries only

  Integer at(long m) const;
};

// Expansion of (z^{-P} - z^P)^{-(r-2)} prod_j (z^{p_hat_j} - z^{-p_hat_j}).
LaurentCoefficients laurent_chi_tilde(const SeifertData& d, long m_max);

// Closed form: binomial factor times eps_1...eps_r on the set S, zero elsewhere.
Integer chi_closed(const SeifertData& d, long m);
// chi~ from the closed form, including the two extra terms of the (2,3,5) case.
Integer chi_tilde_from_closed(const SeifertData& d, long m);
bool is_poincare(const SeifertData& d);

struct ChiDecomposition {
  std::vector<PeriodicSequence> chi;    // chi_j, j = 0..r-3
  std::vector<std::vector<Rational>> C;  // C[j][s]
  bool exceptional = false;
};

Rational chi_coefficient(const SeifertData& d, int j, int s);  // C_{j,s}
ChiDecomposition chi_decomposition(const SeifertData& d);

// Q(tau): -2 e^{i pi tau / 60} for (2,3,5), zero otherwise.
BigComplex q_correction(const SeifertData& d, const BigComplex& tau);

struct SeriesEvaluation {
  BigComplex value;
  BigComplex other_route;
  Real route_difference;
  Real tail_bound;
  long terms = 0;
};

// Psi(tau) = sum chi~(m) e^{i pi m^2 tau / (2P)}, second route Q + sum_j Theta(chi_j).
SeriesEvaluation evaluate_Psi(const SeifertData& d, const BigComplex& tau);
SeriesEvaluation evaluate_Z(const SeifertData& d, const BigComplex& q);

// Psi~_alpha: coefficient p is coeffs[p] * pi^p.
FormalSeries asymptotic_series(const SeifertData& d, const Rational& alpha, std::size_t n_terms);

struct RadialLimit {
  Rational alpha;
  Cyclotomic psi0;    // Psi_{alpha,0}
  Cyclotomic z_star;  // e^{-i pi m0^2 alpha / (2P)} Psi_{alpha,0}
};

RadialLimit radial_limit(const SeifertData& d, const Rational& alpha);
// Psi_{alpha,0} from floating-point L-values
BigComplex radial_limit_numeric(const SeifertData& d, const Rational& alpha);

// x in Q(zeta_N) lies in Q(zeta_k), k | N, iff every sigma_u with u = 1 mod k fixes it.
bool in_subfield(const Cyclotomic& x, unsigned long k);

}  // namespace seifertq
