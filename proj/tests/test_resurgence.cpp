#include <doctest.h>

#include "seifertq/errors.hpp"
#include "seifertq/gppv.hpp"
#include "seifertq/resurgence.hpp"
#include "support.hpp"

using namespace seifertq;
using test::cx;
using test::near;

namespace {

PartialThetaSpec chi0_235() {
  SeifertData d = new_seifert({2, 3, 5});
  return PartialThetaSpec{0, chi_decomposition(d).chi[0], true};
}

}  // namespace

TEST_CASE("stokes polynomial table") {
  auto P = stokes_polynomials(12);
  REQUIRE(P.size() == 13);
  CHECK(P[0].coeffs == std::vector<Integer>{1});
  CHECK(P[2].coeffs == std::vector<Integer>{-1, 0, 2});
  CHECK(P[3].coeffs == std::vector<Integer>{0, 3, 0, -2});
  for (int j = 0; j <= 12; ++j) {
    CAPTURE(j);
    REQUIRE(static_cast<int>(P[j].coeffs.size()) == j + 1);
    Integer lead = Integer(1) << (j / 2);
    if (j % 2) lead = -lead;
    CHECK(P[j].coeffs[j] == lead);
    for (int nu = 0; nu <= j; ++nu)
      if ((j - nu) % 2) CHECK(P[j].at(nu) == 0);
    if (j >= 2) {
      // P_j = (2x^2 - (j-1)) P_{j-2} - x P'_{j-2}
      for (int nu = 0; nu <= j; ++nu) {
        Integer v = 2 * P[j - 2].at(nu - 2) - (j - 1) * P[j - 2].at(nu) - nu * P[j - 2].at(nu);
        CHECK(P[j].at(nu) == v);
      }
    }
  }
}

TEST_CASE("lateral sums against reference quadrature") {
  PrecisionScope ps(256);
  PartialThetaSpec spec = chi0_235();
  BigComplex tau = cx("0.07", "0.21");
  Real eps = pi_real() / 8;
  LateralValue minus = lateral_sum(spec, 0, pi_real() / 2 - eps, tau);
  LateralValue plus = lateral_sum(spec, 0, pi_real() / 2 + eps, tau);
  CHECK(near(minus.value, cx("1.30916093664763951270958555439732365899", "-0.7540951350020654176696642142838082011948"),
             "1e-38"));
  CHECK(near(plus.value, cx("1.155631028294985041601709279696603305441", "1.024858069970096978997622107987776364403"),
             "1e-38"));
  BigComplex theta = theta_eval(spec, tau).value;
  CHECK(near(theta, cx("1.232395982471312277155647417046963482216", "0.135381467484015780663978946851984081604"),
             "1e-38"));
  CHECK(abs(median_sum(spec, 0, tau).value - theta) < Real("1e-60"));
}

TEST_CASE("lateral sums do not depend on the ray offset") {
  PrecisionScope ps(192);
  PartialThetaSpec spec = chi0_235();
  BigComplex tau = cx("0.05", "0.2");
  BigComplex ref = lateral_sum(spec, 0, pi_real() / 2 - pi_real() / 8, tau).value;
  for (const char* e : {"0.2", "0.6", "1.1"}) {
    BigComplex v = lateral_sum(spec, 0, pi_real() / 2 - Real(e), tau).value;
    CHECK(near(v, ref, "1e-45"));
  }
}

TEST_CASE("stokes jumps for both signs") {
  PrecisionScope ps(192);
  PartialThetaSpec spec = chi0_235();
  for (int sign : {-1, 1}) {
    StokesCheck sc = stokes_check(spec, cx("0.05", "0.2"), sign);
    CHECK(sc.residual < Real("1e-40"));
  }
}

TEST_CASE("lateral sum error paths") {
  PrecisionScope ps(128);
  PartialThetaSpec spec = chi0_235();
  CHECK_THROWS_AS(lateral_sum(spec, 0, pi_real() / 2, cx("0.05", "0.2")), RayHitsPole);
  PartialThetaSpec wrong = spec;
  wrong.j = 1;
  CHECK_THROWS_AS(lateral_sum(wrong, 0, pi_real() / 3, cx("0.05", "0.2")), DomainError);
  ModularMatrix g{121, 243, 120, 241};
  std::vector<BigComplex> grid = {BigComplex(Real(-241) / 120 + Real("0.004"), Real("0.003"))};
  SeifertData d = new_seifert({2, 3, 5});
  CHECK_THROWS_AS(modularity_defect(spec, g, d.m0, grid, -1, -1), BranchMismatch);
  CHECK_THROWS_AS(modularity_defect(spec, g, d.m0, grid, 1, 1), BranchMismatch);
}

TEST_CASE("defect vanishes for translations") {
  PrecisionScope ps(128);
  PartialThetaSpec spec = chi0_235();
  SeifertData d = new_seifert({2, 3, 5});
  ModularMatrix t{1, 2, 0, 1};
  DefectCheck dc = modularity_defect(spec, t, d.m0, {cx("0.1", "0.05"), cx("-0.3", "0.02")}, -1);
  CHECK(dc.max_residual < Real("1e-30"));
}

TEST_CASE("derivative relation between asymptotic series") {
  PrecisionScope ps(192);
  SeifertData d = new_seifert({2, 3, 5});
  PeriodicSequence f = chi_decomposition(d).chi[0];
  PartialThetaSpec s0{0, f, true}, s2{2, f, true};
  Rational alpha(1, 5);
  FormalSeries a0 = theta_asymp(s0, alpha, 8), a2 = theta_asymp(s2, alpha, 7);
  BigComplex m_over_pi_i = BigComplex(Real(0), -Real(s0.M()) / pi_real());
  for (std::size_t p = 0; p + 1 < 8; ++p)
    CHECK(near(a2.coefficient(p), m_over_pi_i * Real(p + 1) * a0.coefficient(p + 1), "1e-35"));
}

TEST_CASE("AEC assembly") {
  PrecisionScope ps(256);
  SeifertData d = new_seifert({2, 3, 5});
  auto q = q_polynomial(d, 0, 0);
  REQUIRE(q.size() == 1);
  CHECK(q.begin()->first == std::pair<int, int>{0, 0});
  CHECK(q.begin()->second == 1);

  BigComplex tau = cx("0.2", "0.01");
  BigComplex direct = -tau * exp(-imag_unit() * pi_real() * tau * real_from(d.phi) / Real(2)) /
                      (imag_unit() * 4 * sin(tau * pi_real()));
  CHECK(near(aec_prefactor(d, tau), direct, "1e-60"));

  AecResult a = aec_verify(d, 10);
  CHECK(a.residual < Real("1e-60"));
  CHECK(a.vanishing_checked == 0);
  REQUIRE(a.terms.size() == 2);
  for (auto& t : a.terms) CHECK(t.degree == 0);

  SeifertData d7 = new_seifert({2, 3, 7});
  AecResult b = aec_verify(d7, 9);
  CHECK(near(b.lhs, cx("0.6133407984528387329058259040940462659366", "-5.448044025519810210553338679018291671062"),
             "1e-38"));
  CHECK(b.residual < Real("1e-50"));
  CHECK(b.vanishing_checked == 1);
}

TEST_CASE("AEC with four fibers") {
  PrecisionScope ps(192);
  SeifertData d = new_seifert({2, 3, 5, 7});
  AecResult a = aec_verify(d, 5);
  CHECK(a.residual < Real("1e-45"));
  CHECK(a.vanishing_checked == 7);
  for (auto& t : a.terms) CHECK(t.degree <= d.r - 3 - t.t);
  for (auto& s : a.by_cs) CHECK(2 * s.degree <= s.dim);
}
