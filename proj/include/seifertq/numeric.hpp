#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace seifertq {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 192;

// Default working precision: SEIFERTQ_PRECISION if set, else 192 bits.
unsigned default_precision_bits();

unsigned digits10_for_bits(unsigned bits);
unsigned bits_for_digits10(unsigned digits);

// Current default precision of newly created Real values, in bits.
unsigned working_bits();

// RAII guard that switches the process-wide MPFR working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits_;
};

Real real_from(const mpq_class& q);
Real real_from(const mpz_class& z);
Real pi_real();
Real tolerance_from_exponent(int decimal_exponent);  // 10^e

// Arbitrary-precision complex scalar. Precision is a property of the parts;
// precision() reports the smaller of the two.
struct BigComplex {
  Real re;
  Real im;

  BigComplex() : re(0), im(0) {}
  BigComplex(int x) : re(x), im(0) {}  // NOLINT
  BigComplex(const Real& x) : re(x), im(0) {}  // NOLINT
  BigComplex(const Real& x, const Real& y) : re(x), im(y) {}

  unsigned precision() const;

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const Real& x) { re *= x; im *= x; return *this; }
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator/=(const Real& x) { re /= x; im /= x; return *this; }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator*(BigComplex a, const Real& b) { return a *= b; }
inline BigComplex operator*(const Real& b, BigComplex a) { return a *= b; }
inline BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
inline BigComplex operator/(BigComplex a, const Real& b) { return a /= b; }
inline BigComplex operator*(BigComplex a, int b) { return a *= Real(b); }
inline BigComplex operator*(int b, BigComplex a) { return a *= Real(b); }

const BigComplex& imag_unit();
Real abs(const BigComplex& z);
Real norm(const BigComplex& z);
Real arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex expm1(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex pow(const BigComplex& z, const Real& a);  // principal branch
BigComplex pow(const BigComplex& z, int n);
BigComplex sinh(const BigComplex& z);
BigComplex cosh(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex polar(const Real& r, const Real& theta);
// e^{i pi q} for rational q, evaluated with exact argument reduction.
BigComplex expipi(const mpq_class& q);
BigComplex expipi(const Real& x);

BigComplex parse_complex(const std::string& s);  // "x+yi", "x", "yi"
std::string to_string(const Real& x, int digits = 0);
std::string to_string(const BigComplex& z, int digits = 0);

}  // namespace seifertq
