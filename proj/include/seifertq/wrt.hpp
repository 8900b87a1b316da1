#pragma once

#include <optional>
#include <vector>

#include "seifertq/exact_arith.hpp"
#include "seifertq/numeric.hpp"
#include "seifertq/seifert.hpp"

namespace seifertq {

// gamma = (a c; b d), first column (a, b).
struct Mat2 {
  long a = 1, c = 0, b = 0, d = 1;
  long det() const { return a * d - b * c; }
};

inline Mat2 S_matrix() { return {0, -1, 1, 0}; }
inline Mat2 T_matrix() { return {1, 1, 0, 1}; }

Rational rademacher_phi(const Mat2& g);

struct WordLetter {
  bool is_S = false;
  long power = 0;  // for T letters
};
// gamma = w_1 w_2 ... w_n (up to the sign ambiguity of PSL(2, Z) resolved by S^2)
std::vector<WordLetter> st_word(const Mat2& g);

Real quantum_integer(long k, long m);
Cyclotomic quantum_integer_exact(long k, long m);  // in Q(zeta_{2k})

// rho_k(S), rho_k(T)^n as dense matrices over BigComplex (indices 1..k-1 stored at 0..k-2)
using ComplexMatrix = std::vector<std::vector<BigComplex>>;
ComplexMatrix rho_S(long k);
ComplexMatrix rho_T(long k, long n = 1);
ComplexMatrix rho_matrix(long k, const Mat2& g);
std::vector<BigComplex> rho_column(long k, const Mat2& g);

// Exact first column: entries are column[j] * (2/k)^{s_count/2}.
struct ExactColumn {
  std::vector<Cyclotomic> column;
  int s_count = 0;
};
ExactColumn rho_column_exact(long k, const Mat2& g);

unsigned long wrt_field_order(long k);  // lcm(8, 4k)

// Hub with 0/1 surgery, spokes with p_j/q_j; second columns of the B_j can be
// shifted by t_j times the first column.
struct SurgeryPresentation {
  std::vector<Mat2> B;
  Mat2 hub = S_matrix();
  int n_plus = 0;
  int n_minus = 0;
  Rational Phi;  // sum Phi(B_j) + Phi(hub) - 3 (n_+ - n_-)
};

SurgeryPresentation make_presentation(const SeifertData& d, const std::vector<long>& shifts = {});

struct WrtValue {
  long k = 0;
  std::optional<Cyclotomic> exact;  // in Q(zeta_{lcm(8,4k)})
  BigComplex value;
};

WrtValue wrt_level_k(const SeifertData& d, long k, bool exact = true, const std::vector<long>& shifts = {});
// full (k-1)^{r+1} coloring sum; numeric
BigComplex wrt_naive(const SeifertData& d, long k);
// value at e^{2 pi i l/k}, exact through the Galois action sigma_u with
// u = l mod k; lift = 0 picks the smallest admissible u
WrtValue wrt_at_root(const SeifertData& d, long l, long k, long lift = 0);
long galois_lift(long l, long k, unsigned long field_order);

// single framed unknot with rational surgery data B
BigComplex wrt_framed_unknot(long k, long framing, const Mat2& B, int n_plus, int n_minus);

Real gk0(long k);  // sqrt(2k) / (2 sin(pi/k))

struct LrCheck {
  BigComplex lhs;
  BigComplex integral;
  BigComplex residues;         // contour method
  BigComplex residues_laurent; // local expansion method
  Real residual = 0;
  Real residue_method_gap = 0;
  Real quadrature_error = 0;
};

LrCheck lr_check(const SeifertData& d, long k);

// B_0(xi) for the integral term, xi on any ray with arg in (-pi, pi)
BigComplex borel_b0(const SeifertData& d, const BigComplex& xi);
// int_0^infty e^{-k xi} B_0(xi) d xi
BigComplex borel_integral(const SeifertData& d, long k, Real* error = nullptr);

struct RadialCheck {
  Rational alpha;
  Cyclotomic lhs_exact;  // Psi_{alpha,0}
  Cyclotomic rhs_exact;  // 2 (-1)^r e^{i pi alpha phi/2} (e^{i pi alpha} - e^{-i pi alpha}) WRT
  bool exact_equal = false;
  BigComplex lhs, rhs;
  Real residual = 0;
};

RadialCheck verify_radial(const SeifertData& d, const Rational& alpha);

struct CassonCheck {
  long dedekind = 0;
  long radial = 0;
  std::vector<long> moduli;
  std::vector<long> residues;
};

// lambda from Dedekind sums and from the radial identity at primes k;
// throws OracleDisagreement if they differ.
CassonCheck casson_invariant(const SeifertData& d, const std::vector<long>& primes = {11, 13, 17, 19, 23});

}  // namespace seifertq
