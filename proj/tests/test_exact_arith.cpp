#include <doctest.h>

#include <numeric>
#include <random>

#include "seifertq/errors.hpp"
#include "seifertq/exact_arith.hpp"
#include "support.hpp"

using namespace seifertq;

TEST_CASE("rational helpers") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(frac_part(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac_part(Rational(7, 2)) == Rational(1, 2));
  CHECK(mod_floor(-7L, 3L) == 2);
  CHECK(mod_floor(Integer(-120), Integer(60)) == 0);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(to_string(Rational(-49, 120)) == "-49/120");
  CHECK(to_string(Rational(2)) == "2");
  CHECK(euler_phi(120) == 32);
  CHECK(squarefree_part(72) == 2);
}

TEST_CASE("dedekind sums") {
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 5) == Rational(1, 5));
  // reciprocity on coprime pairs
  for (long a = 1; a < 30; ++a)
    for (long b = 1; b < 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      Rational lhs = dedekind_sum(a, b) + dedekind_sum(b, a);
      Rational rhs = Rational(-1, 4) + (Rational(a, b) + Rational(b, a) + Rational(1, a * b)) / 12;
      rhs.canonicalize();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker_symbol(2, 7) == 1);
  CHECK(kronecker_symbol(3, 7) == -1);
  CHECK(kronecker_symbol(-1, 7) == -1);
  CHECK(kronecker_symbol(2, 3) == -1);
  CHECK(kronecker_symbol(5, 8) == -1);
  CHECK(kronecker_symbol(6, 9) == 0);
  CHECK(kronecker_symbol(7200, 241) == 1);
}

TEST_CASE("bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  auto b2 = bernoulli_polynomial(2);
  CHECK(b2.coeffs == std::vector<Rational>{Rational(1, 6), -1, 1});
  CHECK(bernoulli_polynomial(3)(Rational(1, 2)) == 0);
  for (unsigned n = 1; n < 12; ++n) {
    auto b = bernoulli_polynomial(n);
    // B_n(x + 1) - B_n(x) = n x^{n-1} at x = 2/7
    Rational x(2, 7);
    Rational lhs = b(x + 1) - b(x);
    Rational rhs = n;
    for (unsigned i = 1; i < n; ++i) rhs *= x;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rising factorial and binomials") {
  auto c = rising_factorial_coeffs(3);
  CHECK(c == std::vector<Rational>{6, 11, 6, 1});
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(12) == 479001600);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
}

TEST_CASE("cyclotomic field arithmetic") {
  PrecisionScope ps(192);
  Cyclotomic z = Cyclotomic::zeta(5, 1);
  Cyclotomic p = Cyclotomic(5, 1);
  for (int i = 0; i < 5; ++i) p *= z;
  CHECK(p == Cyclotomic(5, 1));
  Cyclotomic s(5);
  for (int i = 0; i < 5; ++i) s += Cyclotomic::zeta(5, i);
  CHECK(s.is_zero());
  CHECK((z * z.conj()).is_rational());
  CHECK((z * z.conj()).to_rational() == 1);
  CHECK(test::near(z.to_complex(), expipi(Rational(2, 5)), "1e-50"));
  CHECK(z.galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(z.embed(20) == Cyclotomic::zeta(20, 4));
  Cyclotomic r5 = cyclotomic_sqrt(5, 20);
  CHECK(r5 * r5 == Cyclotomic(20, 5));
  Cyclotomic r3 = cyclotomic_sqrt(3, 12);
  CHECK(test::near(r3.to_complex(), BigComplex(boost::multiprecision::sqrt(Real(3))), "1e-50"));
}

TEST_CASE("accumulator agrees with direct sums") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> e(-100, 100), c(-5, 5);
  for (unsigned long n : {8UL, 12UL, 40UL, 120UL}) {
    CyclotomicAccumulator acc(n);
    Cyclotomic direct(n);
    for (int i = 0; i < 30; ++i) {
      long ex = e(rng);
      Rational co(c(rng), 3);
      acc.add(ex, co);
      direct += Cyclotomic::zeta(n, ex, co);
    }
    CHECK(acc.reduce() == direct);
  }
}

TEST_CASE("polynomial helpers") {
  RationalPoly a{1, 1}, b{-1, 1};
  CHECK(poly_mul(a, b) == RationalPoly{-1, 0, 1});
  CHECK(poly_shift_arg(RationalPoly{0, 0, 1}, 1) == RationalPoly{1, 2, 1});
  RationalPoly z = poly_sub(a, a);
  poly_trim(z);
  CHECK(z.size() <= 1);
}
