#include <doctest.h>

#include "seifertq/exact_arith.hpp"
#include "seifertq/quadrature.hpp"
#include "seifertq/series.hpp"
#include "support.hpp"

using namespace seifertq;
using test::cx;
using test::near;

TEST_CASE("precision scope nests and restores") {
  unsigned before = working_bits();
  {
    PrecisionScope a(256);
    CHECK(working_bits() >= 256);
    {
      PrecisionScope b(96);
      CHECK(working_bits() < 256);
    }
    CHECK(working_bits() >= 256);
  }
  CHECK(working_bits() == before);
  CHECK(digits10_for_bits(192) >= 58);
}

TEST_CASE("complex elementary functions") {
  PrecisionScope ps(192);
  CHECK(near(expipi(Rational(1, 2)), cx("0", "1"), "1e-55"));
  CHECK(near(expipi(Rational(-7, 3)), expipi(Rational(-1, 3)), "1e-55"));
  CHECK(near(sqrt(cx("-1", "0")), cx("0", "1"), "1e-55"));
  BigComplex z = cx("0.3", "-1.7");
  CHECK(near(log(exp(z)), z, "1e-55"));
  CHECK(near(expm1(cx("1e-40", "0")), cx("1.00000000000000000000000000000000000000005e-40", "0"), "1e-95"));
  CHECK(near(sinh(z) * sinh(z) - cosh(z) * cosh(z), BigComplex(-1), "1e-50"));
  CHECK(near(pow(z, 5), z * z * z * z * z, "1e-50"));
  CHECK(near(polar(Real(2), pi_real() / 2), cx("0", "2"), "1e-55"));
  CHECK(near(arg(cx("-1", "0")), pi_real(), "1e-55"));
}

TEST_CASE("parse complex") {
  PrecisionScope ps(128);
  CHECK(near(parse_complex("0.07+0.21i"), cx("0.07", "0.21"), "1e-35"));
  CHECK(near(parse_complex("-2i"), cx("0", "-2"), "1e-35"));
  CHECK(near(parse_complex("3"), cx("3", "0"), "1e-35"));
  CHECK(near(parse_complex("-1e-3-4.5i"), cx("-0.001", "-4.5"), "1e-35"));
  CHECK_THROWS(parse_complex("abc"));
}

TEST_CASE("double exponential quadrature") {
  PrecisionScope ps(192);
  Real tol("1e-50");
  auto sq = tanh_sinh([](const Real& x) { return BigComplex(x * x); }, Real(0), Real(1), tol);
  CHECK(sq.converged);
  CHECK(near(sq.value, BigComplex(Real(1) / 3), "1e-50"));
  // integrable endpoint singularity
  auto inv = tanh_sinh([](const Real& x) { return BigComplex(1 / boost::multiprecision::sqrt(x)); }, Real(0), Real(1),
                       tol);
  CHECK(near(inv.value, BigComplex(2), "1e-45"));
  auto e = exp_sinh([](const Real& x) { return BigComplex(boost::multiprecision::exp(-x)); }, Real(0), tol);
  CHECK(near(e.value, BigComplex(1), "1e-50"));
  auto g = exp_sinh([](const Real& x) { return BigComplex(boost::multiprecision::exp(-x * x)); }, Real(0), tol);
  CHECK(near(g.value, BigComplex(boost::multiprecision::sqrt(pi_real()) / 2), "1e-50"));
}

TEST_CASE("circle residues") {
  PrecisionScope ps(192);
  Real tol("1e-50");
  auto r = circle_residue([](const BigComplex& z) { return BigComplex(1) / z; }, BigComplex(0), Real(1), tol);
  CHECK(near(r.value, BigComplex(1), "1e-50"));
  // residue of 1/sinh(z) at i pi is -1
  BigComplex c = cx("0", "0") + BigComplex(Real(0), pi_real());
  auto s = circle_residue([](const BigComplex& z) { return BigComplex(1) / sinh(z); }, c, Real(1), tol);
  CHECK(near(s.value, BigComplex(-1), "1e-45"));
}

TEST_CASE("truncated power series") {
  PrecisionScope ps(128);
  PowerSeries one_minus_h(8, BigComplex(1));
  one_minus_h[1] = BigComplex(-1);
  PowerSeries inv = one_minus_h.inverse();
  for (std::size_t i = 0; i < 8; ++i) CHECK(near(inv[i], BigComplex(1), "1e-35"));
  PowerSeries e = PowerSeries::exp_linear(6, BigComplex(0), BigComplex(2));
  CHECK(near(e[3], BigComplex(Real(8) / 6), "1e-35"));
  PowerSeries q = PowerSeries::expm1_linear_over_h(6, BigComplex(1));
  CHECK(near(q[0], BigComplex(1), "1e-35"));
  CHECK(near(q[2], BigComplex(Real(1) / 6), "1e-35"));
  PowerSeries lin(6);
  lin[1] = BigComplex(1);
  PowerSeries ex = PowerSeries::exp_of(lin);
  CHECK(near(ex[4], BigComplex(Real(1) / 24), "1e-35"));
}
