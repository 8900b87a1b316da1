#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "seifertq/numeric.hpp"

namespace seifertq {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);  // "num/den" (or "num" when den = 1)
Rational parse_rational(const std::string& s);
Rational frac_part(const Rational& q);  // representative in [0, 1)
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);  // in [0, |b|)
long mod_floor(long a, long b);
Integer lcm(const Integer& a, const Integer& b);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
unsigned long euler_phi(unsigned long n);
unsigned long squarefree_part(unsigned long n);

// s(a,b) = sum_{k=1}^{b-1} ((k/b)) ((ka/b)).
Rational dedekind_sum(const Integer& a, const Integer& b);

// Kronecker symbol (a/|n|); agrees with the Jacobi symbol for odd n.
int kronecker_symbol(const Integer& a, const Integer& n);

Rational bernoulli_number(unsigned n);  // B_1 = -1/2

struct BernoulliPolynomial {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies x^i
  unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
  Rational operator()(const Rational& x) const;
};

BernoulliPolynomial bernoulli_polynomial(unsigned n);

// sigma(n,k): (l+1)...(l+n) = sum_k sigma(n,k) l^k.
std::vector<Rational> rising_factorial_coeffs(int n);

Integer binomial(long n, long k);
Integer factorial(long n);

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_N) stored as coefficients modulo Phi_N with one shared
// positive denominator.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned long order);
  Cyclotomic(unsigned long order, const Rational& c);
  static Cyclotomic zeta(unsigned long order, long exponent, const Rational& c = 1);
  static Cyclotomic from_coeffs(unsigned long order, const std::vector<Rational>& coeffs);

  unsigned long order() const { return n_; }
  std::size_t dimension() const { return num_.size(); }
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;
  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()

  Cyclotomic embed(unsigned long order) const;  // order must be a multiple
  Cyclotomic galois(long u) const;
  Cyclotomic conj() const { return galois(static_cast<long>(n_) - 1); }
  BigComplex to_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_json_string() const;

 private:
  friend class CyclotomicAccumulator;
  void normalize();
  void align(Cyclotomic& o);

  unsigned long n_;
  std::vector<Integer> num_;
  Integer den_;
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
inline Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
inline Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }

Cyclotomic galois_apply(long u, const Cyclotomic& x);

// Sums of c * zeta_N^e gathered in Q[x]/(x^N - 1), reduced once at the end.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(unsigned long order);
  void add(long exponent, const Rational& c);
  void add(const Cyclotomic& x, long shift = 0, const Rational& scale = 1);
  Cyclotomic reduce() const;
  unsigned long order() const { return n_; }

 private:
  unsigned long n_;
  std::vector<Rational> acc_;
};

// sqrt(m) inside Q(zeta_order) via the quadratic Gauss sum; requires
// 4 * squarefree_part(m) to divide order.
Cyclotomic cyclotomic_sqrt(unsigned long m, unsigned long order);

// Exact polynomial helpers over Q.
using RationalPoly = std::vector<Rational>;
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_shift_arg(const RationalPoly& p, const Rational& c);  // p(x + c)
void poly_trim(RationalPoly& p);

}  // namespace seifertq
