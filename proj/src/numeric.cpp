#include "seifertq/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>

#include "seifertq/errors.hpp"

namespace seifertq {

unsigned default_precision_bits() {
  if (const char* env = std::getenv("SEIFERTQ_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32 && v <= 1 << 20) return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionBits;
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned bits_for_digits10(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623));
}

unsigned working_bits() { return bits_for_digits10(Real::default_precision()); }

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Real real_from(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real real_from(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

Real tolerance_from_exponent(int e) { return pow(Real(10), e); }

unsigned BigComplex::precision() const {
  return std::min(bits_for_digits10(re.precision()), bits_for_digits10(im.precision()));
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

const BigComplex& imag_unit() {
  thread_local BigComplex i;
  i = BigComplex(Real(0), Real(1));
  return i;
}

Real abs(const BigComplex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const BigComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex polar(const Real& r, const Real& t) { return {r * cos(t), r * sin(t)}; }

BigComplex exp(const BigComplex& z) { return polar(boost::multiprecision::exp(z.re), z.im); }

BigComplex expm1(const BigComplex& z) {
  // e^{a+ib} - 1 = expm1(a) cos b - 2 sin^2(b/2) + i e^a sin b
  Real s = sin(z.im / 2);
  Real em = boost::multiprecision::expm1(z.re);
  return {em * cos(z.im) - 2 * s * s, boost::multiprecision::exp(z.re) * sin(z.im)};
}

BigComplex log(const BigComplex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  if (z.re == 0 && z.im == 0) return {};
  Real m = abs(z);
  if (z.re >= 0) {
    Real t = boost::multiprecision::sqrt((m + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  Real t = boost::multiprecision::sqrt((m - z.re) / 2);
  if (z.im < 0) t = -t;
  return {z.im / (2 * t), t};
}

BigComplex pow(const BigComplex& z, const Real& a) {
  if (z.re == 0 && z.im == 0) return {};
  return polar(boost::multiprecision::pow(abs(z), a), a * arg(z));
}

BigComplex pow(const BigComplex& z, int n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex r(1), b = z;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigComplex sinh(const BigComplex& z) {
  return {boost::multiprecision::sinh(z.re) * cos(z.im), boost::multiprecision::cosh(z.re) * sin(z.im)};
}

BigComplex cosh(const BigComplex& z) {
  return {boost::multiprecision::cosh(z.re) * cos(z.im), boost::multiprecision::sinh(z.re) * sin(z.im)};
}

BigComplex sin(const BigComplex& z) {
  return {sin(z.re) * boost::multiprecision::cosh(z.im), cos(z.re) * boost::multiprecision::sinh(z.im)};
}

BigComplex expipi(const mpq_class& q) {
  // reduce q into (-1, 1] exactly before going to floating point
  mpz_class two_den = 2 * q.get_den();
  mpz_class n = q.get_num() % two_den;
  if (n < 0) n += two_den;
  if (n > q.get_den()) n -= two_den;
  mpq_class red(n, q.get_den());
  red.canonicalize();
  Real t = pi_real() * real_from(red);
  return polar(Real(1), t);
}

BigComplex expipi(const Real& x) { return polar(Real(1), pi_real() * x); }

BigComplex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::regex full(R"(^([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)([+-][0-9.]*(?:[eE][+-]?[0-9]+)?)[ij]$)");
  static const std::regex re_only(R"(^[+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?$)");
  static const std::regex im_only(R"(^([+-]?[0-9.]*(?:[eE][+-]?[0-9]+)?)[ij]$)");
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return Real(t);
  };
  std::smatch m;
  if (std::regex_match(s, m, full)) return {Real(m[1].str()), imag_part(m[2].str())};
  if (std::regex_match(s, re_only)) return {Real(s), Real(0)};
  if (std::regex_match(s, m, im_only)) return {Real(0), imag_part(m[1].str())};
  throw InvalidArgument("cannot parse complex number '" + raw + "'");
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits > 0 ? digits : static_cast<int>(x.precision()));
  os << x;
  return os.str();
}

std::string to_string(const BigComplex& z, int digits) {
  std::string im = to_string(z.im, digits);
  if (im[0] != '-') im = "+" + im;
  return to_string(z.re, digits) + im + "i";
}

}  // namespace seifertq
