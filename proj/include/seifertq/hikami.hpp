#pragma once

#include <map>
#include <optional>
#include <vector>

#include "seifertq/exact_arith.hpp"
#include "seifertq/flat_moduli.hpp"
#include "seifertq/seifert.hpp"

namespace seifertq {

enum class Parity { Even, Odd, None };
const char* to_string(Parity p);

// M-periodic sequence with values c(n) * B^{-grade/2}, c(n) in Q(zeta_N) for a
// common order N. B is the period at which the grade was created (a twist
// keeps it); a transform of a transform folds grade 2 back into 1/M.
class PeriodicSequence {
 public:
  PeriodicSequence() = default;
  PeriodicSequence(long period, std::vector<Cyclotomic> values, int grade = 0,
                   std::optional<Parity> declared = std::nullopt, long grade_base = 0);
  static PeriodicSequence from_integers(long period, const std::vector<long>& values,
                                        std::optional<Parity> declared = std::nullopt);
  static PeriodicSequence zero(long period);

  long period() const { return M_; }
  int grade() const { return grade_; }
  long grade_base() const { return base_; }
  PeriodicSequence folded() const;  // grade 0, with sqrt(B) embedded in the field
  unsigned long field_order() const { return order_; }
  const Cyclotomic& at(long n) const;  // grade not applied
  const std::vector<Cyclotomic>& values() const { return v_; }
  BigComplex complex_at(long n) const;  // grade applied

  bool has_parity(Parity p) const;
  Parity parity() const;
  std::vector<long> support() const;  // residues in [0, M)
  bool is_zero() const;
  Cyclotomic mean_value() const;  // grade not applied

  PeriodicSequence restricted(const std::vector<long>& residues) const;
  PeriodicSequence composed_shift(long c) const;  // n -> f(n + c)
  PeriodicSequence with_period(long period) const;  // period must be a multiple
  // f_{alpha/M}(n) = f(n) e^{i pi n^2 alpha / M}, period M den(alpha).
  PeriodicSequence twisted(const Rational& alpha) const;

  PeriodicSequence& operator+=(const PeriodicSequence& o);
  PeriodicSequence& operator-=(const PeriodicSequence& o);
  PeriodicSequence& operator*=(const Cyclotomic& c);
  bool operator==(const PeriodicSequence& o) const;
  bool operator!=(const PeriodicSequence& o) const { return !(*this == o); }

 private:
  void common_order();
  void check_compatible(const PeriodicSequence& o) const;

  long M_ = 1;
  std::vector<Cyclotomic> v_;
  int grade_ = 0;
  long base_ = 1;
  unsigned long order_ = 1;
};

inline PeriodicSequence operator+(PeriodicSequence a, const PeriodicSequence& b) { return a += b; }
inline PeriodicSequence operator-(PeriodicSequence a, const PeriodicSequence& b) { return a -= b; }
inline PeriodicSequence operator*(PeriodicSequence a, const Cyclotomic& c) { return a *= c; }

// f^(n) = M^{-1/2} sum_l f(l) e^{-2 pi i l n / M}
PeriodicSequence dft(const PeriodicSequence& f);

// L(-n, f) = -M^n/(n+1) sum_{m=1}^M B_{n+1}(m/M) f(m); same grade as f.
Cyclotomic l_value(const PeriodicSequence& f, unsigned n);

// sum_{m=1}^{M} m^a f(m) for a = 0..a_max; grade of f not applied.
std::vector<Cyclotomic> moment_sums(const PeriodicSequence& f, unsigned a_max);

struct HikamiTuple {
  std::vector<long> h;
  std::vector<int> J_h;  // indices with p_j | h_j
  int t_h = 0;
};

HikamiTuple hikami_tuple(const SeifertData& d, const std::vector<long>& h);

struct HikamiResidue {
  long residue = 0;       // N^h(eps) mod 2P
  std::vector<int> eps;   // signs; entries on J_h are reported as +1
  long n_star = 0;        // sum_j eps_j h_j p_hat_j for this eps
  int preimages = 0;      // always 2^{t_h}
};

std::vector<HikamiResidue> hikami_residues(const SeifertData& d, const HikamiTuple& h);
std::vector<long> hikami_set(const SeifertData& d, const HikamiTuple& h);

// value -pi(eps) (N*(eps))^s on the residues of N^h(E); requires t_h = 0
PeriodicSequence s_hikami(const SeifertData& d, int s, const HikamiTuple& h);
// value prod_{j in J} eps_j on the Hikami set; requires J disjoint from J_h
PeriodicSequence gen_hikami(const SeifertData& d, const HikamiTuple& h, const std::vector<int>& J);

// Both sides of the generating-function identities, compared exactly.
bool s_hikami_generating_identity(const SeifertData& d, int s, const HikamiTuple& h);
bool gen_hikami_generating_identity(const SeifertData& d, const HikamiTuple& h, const std::vector<int>& J);

// identity for odd r, f -> f(. - P) for even r
PeriodicSequence tau_shift(const SeifertData& d, const PeriodicSequence& f);
// (m^s f^1) o T_r
PeriodicSequence ms_f_one(const SeifertData& d, int s);

// Coefficients of f restricted to the Hikami set of h in the basis g_J^h,
// J ranging over subsets of the complement of J_h (as sorted index lists).
std::map<std::vector<int>, Cyclotomic> hikami_coefficients(const SeifertData& d, const HikamiTuple& h,
                                                           const PeriodicSequence& f);

struct DftPiece {
  std::vector<long> l;
  PeriodicSequence piece;
  std::map<std::vector<int>, Cyclotomic> coefficients;
};

struct DftDecomposition {
  int s = 0;
  PeriodicSequence transform;
  std::vector<DftPiece> pieces;
  std::vector<long> outside;  // residues outside every listed Hikami set
};

// Decomposes dft(ms_f_one(d, s)) over the Hikami sets of l in L with t_l <= s.
// Throws OracleDisagreement if a structural property fails.
DftDecomposition dft_decomposition(const SeifertData& d, int s);

bool admissible_J(const SeifertData& d, int s, const std::vector<int>& J, const HikamiTuple& h);

// Every generator g_J^l of V_s has a transform that decomposes into
// generators of V_s. Returns the number of generators checked.
int check_dft_closure(const SeifertData& d, int s);

}  // namespace seifertq
