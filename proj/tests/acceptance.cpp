// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seifertq/errors.hpp"
#include "seifertq/flat_moduli.hpp"
#include "seifertq/gppv.hpp"
#include "seifertq/hikami.hpp"
#include "seifertq/resurgence.hpp"
#include "seifertq/seifert.hpp"
#include "seifertq/wrt.hpp"

using namespace seifertq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string sci(const Real& x) { return to_string(x, 3); }

const std::vector<std::vector<long>> kTuples = {{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 3, 5, 7}};

const FlatLabel* find_label(const std::vector<FlatLabel>& v, const std::vector<long>& l) {
  for (const FlatLabel& f : v)
    if (f.l == l) return &f;
  return nullptr;
}

// 1. enumeration and Chern-Simons values
void criterion_enumeration(Outcome& o) {
  auto t0 = Clock::now();
  SeifertData a = new_seifert({2, 3, 5});
  auto Ra = enumerate_R(a);
  o.require(Ra.size() == 2 && Ra[0].l == std::vector<long>{1, 2, 2} && Ra[1].l == std::vector<long>{1, 2, 4},
            "R(2,3,5)");
  if (Ra.size() == 2)
    o.require(signed_cs(Ra[0].cs) == Rational(-49, 120) && signed_cs(Ra[1].cs) == Rational(-1, 120), "S(2,3,5)");
  o.require(enumerate_L(a).size() == 2, "L(2,3,5)");

  SeifertData b = new_seifert({2, 3, 7});
  auto Rb = enumerate_R(b);
  auto Lb = enumerate_L(b);
  const FlatLabel* b1 = find_label(Rb, {1, 2, 2});
  const FlatLabel* b2 = find_label(Rb, {1, 2, 4});
  const FlatLabel* b3 = find_label(Lb, {1, 2, 6});
  o.require(Rb.size() == 2 && b1 && b2, "R(2,3,7)");
  if (b1 && b2)
    o.require(signed_cs(b1->cs) == Rational(-25, 168) && signed_cs(b2->cs) == Rational(-121, 168), "S(2,3,7)");
  o.require(Lb.size() == 3 && b3 && !b3->in_R, "L(2,3,7)");
  if (b3) o.require(signed_cs(b3->cs) == Rational(-1, 168), "S(1,2,6)");

  SeifertData c = new_seifert({2, 3, 5, 7});
  std::size_t nr = enumerate_R(c).size(), nl = enumerate_L(c).size();
  o.require(nr == 22 && nl == 29, "|R|, |L| of (2,3,5,7)");
  double t = seconds_since(t0);
  o.require(t < 1.0, "time limit 1 s");
  o.detail << "|R(2,3,5,7)|=" << nr << " |L(2,3,5,7)|=" << nl << " in " << t << " s";
}

// 2. Laurent expansion against the closed form
void criterion_two_routes(Outcome& o) {
  auto t0 = Clock::now();
  long checked = 0;
  for (auto& p : kTuples) {
    SeifertData d = new_seifert(p);
    auto lc = laurent_chi_tilde(d, 10 * d.P);
    for (long m = d.m0; m <= 10 * d.P; ++m) {
      ++checked;
      if (lc.at(m) != chi_tilde_from_closed(d, m)) o.fail(d.label() + " m=" + std::to_string(m));
    }
  }
  double t = seconds_since(t0);
  o.require(t < 5.0, "time limit 5 s");
  o.detail << checked << " coefficients over 4 tuples in " << t << " s";
}

// 3. transform decompositions, vanishing moments, vanishing limits
void criterion_dft(Outcome& o) {
  auto t0 = Clock::now();
  long pieces = 0, moments = 0, vanishing = 0;
  for (auto& p : kTuples) {
    SeifertData d = new_seifert(p);
    for (int s = 0; s <= d.r - 3; ++s) {
      pieces += static_cast<long>(dft_decomposition(d, s).pieces.size());  // throws on any failed property
      check_dft_closure(d, s);
    }

    std::vector<long> h(d.r, 0);
    while (true) {
      Rational sum = 0;
      int nonintegral = 0;
      for (int j = 0; j < d.r; ++j) {
        sum += Rational(h[j], d.p[j]);
        if (h[j] % d.p[j] != 0) ++nonintegral;
      }
      if (nonintegral >= 3 && sum > 0 && sum < 1) {
        HikamiTuple ht = hikami_tuple(d, h);
        for (int s = 0; s <= d.r - 3; ++s)
          for (unsigned mask = 1; mask < (1u << d.r); ++mask) {
            std::vector<int> J;
            for (int j = 0; j < d.r; ++j)
              if (mask >> j & 1) J.push_back(j);
            if (!admissible_J(d, s, J, ht)) continue;
            ++moments;
            for (const Cyclotomic& m : moment_sums(gen_hikami(d, ht, J), static_cast<unsigned>(d.r - s - 1)))
              if (!m.is_zero()) o.fail("moment of g_J^h on " + d.label());
          }
      }
      int k = 0;
      while (k < d.r && h[k] == d.p[k]) h[k++] = 0;
      if (k == d.r) break;
      ++h[k];
    }

    auto R = enumerate_R(d);
    for (const LambdaValue& lv : lambda_values(d)) {
      if (find_label(R, sigma1(d, lv.l))) continue;
      ++vanishing;
      if (!lv.value.is_zero()) o.fail("Lambda outside R on " + d.label());
    }
  }
  double t = seconds_since(t0);
  o.require(t < 30.0, "time limit 30 s");
  o.detail << pieces << " pieces, " << moments << " moment identities, " << vanishing << " vanishing limits in " << t
           << " s";
}

// 4. radial limits
void criterion_radial(Outcome& o) {
  PrecisionScope ps(256);
  Real worst = 0;
  double slowest = 0;
  for (auto p : {std::vector<long>{2, 3, 5}, {2, 3, 7}})
    for (auto a : {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2, 5), Rational(1, 7), Rational(3, 7)}) {
      auto t0 = Clock::now();
      SeifertData d = new_seifert(p);
      RadialCheck c = verify_radial(d, a);
      double t = seconds_since(t0);
      slowest = std::max(slowest, t);
      worst = std::max(worst, c.residual);
      o.require(c.residual < Real("1e-40"), d.label() + " alpha=" + to_string(a));
      o.require(t < 10.0, "time limit 10 s per case");
    }
  o.detail << "max residual " << sci(worst) << ", slowest case " << slowest << " s";
}

// 5. integral plus residues
void criterion_lr(Outcome& o) {
  PrecisionScope ps(256);
  SeifertData d = new_seifert({2, 3, 5});
  Real worst = 0;
  double slowest = 0;
  for (long k = 3; k <= 8; ++k) {
    auto t0 = Clock::now();
    LrCheck c = lr_check(d, k);
    double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    worst = std::max(worst, c.residual);
    o.require(c.residual < Real("1e-25"), "k=" + std::to_string(k));
    o.require(t < 30.0, "time limit 30 s per case");
  }
  o.detail << "max residual " << sci(worst) << ", slowest k " << slowest << " s";
}

// 6. median sums and Stokes jumps
void criterion_stokes(Outcome& o) {
  PrecisionScope ps(256);
  SeifertData a = new_seifert({2, 3, 5});
  SeifertData b = new_seifert({2, 3, 7});
  HikamiTuple h = hikami_tuple(b, {1, 1, 1});
  std::vector<std::pair<std::string, PartialThetaSpec>> specs = {
      {"chi_0(2,3,5)", PartialThetaSpec{0, chi_decomposition(a).chi[0], true}},
      {"g_{2,3}^(1,1,1)(2,3,7)", PartialThetaSpec{1, gen_hikami(b, h, {1, 2}), true}},
  };
  const std::vector<BigComplex> taus = {BigComplex(Real("0.07"), Real("0.21")), BigComplex(Real("0.05"), Real("0.2")),
                                        BigComplex(Real("-0.04"), Real("0.15"))};
  Real worst_median = 0, worst_stokes = 0;
  for (auto& [name, spec] : specs) {
    o.require(spec.f.has_parity(spec.j % 2 == 0 ? Parity::Odd : Parity::Even), name + " parity");
    for (const BigComplex& tau : taus) {
      BigComplex th = theta_eval(spec, tau).value;
      Real med = abs(median_sum(spec, 0, tau).value - th);
      worst_median = std::max(worst_median, med);
      o.require(med < Real("1e-25"), name + " median at " + to_string(tau, 4));
      for (int sign : {-1, 1}) {
        StokesCheck sc = stokes_check(spec, tau, sign);
        worst_stokes = std::max(worst_stokes, sc.residual);
        o.require(sc.residual < Real("1e-20"), name + " stokes at " + to_string(tau, 4));
      }
    }
  }
  o.detail << "max median residual " << sci(worst_median) << ", max Stokes residual " << sci(worst_stokes);
}

// 7. exact asymptotic expansion
void criterion_aec(Outcome& o) {
  PrecisionScope ps(256);
  SeifertData d = new_seifert({2, 3, 5});
  Real worst = 0;
  double slowest = 0;
  for (long k : {5L, 10L, 20L}) {
    auto t0 = Clock::now();
    AecResult a = aec_verify(d, k);  // throws DegreeViolation on a failed degree bound
    double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    worst = std::max(worst, a.residual);
    o.require(a.residual < Real("1e-12"), "k=" + std::to_string(k));
    o.require(t < 120.0, "time limit 2 min per k");
    for (const AecTerm& term : a.terms) o.require(term.degree <= d.r - 3 - term.t, "deg H^l");
    for (const AecSTerm& s : a.by_cs) o.require(2 * s.degree <= s.dim, "deg H_S");
  }
  o.detail << "max residual " << sci(worst) << ", slowest k " << slowest << " s";
}

// 8. property suites
void criterion_properties(Outcome& o) {
  std::mt19937 rng(8);
  // Stokes polynomials
  auto P = stokes_polynomials(12);
  for (int j = 0; j <= 12; ++j) {
    Integer lead = Integer(1) << (j / 2);
    if (j % 2) lead = -lead;
    o.require(static_cast<int>(P[j].coeffs.size()) == j + 1 && P[j].coeffs[j] == lead, "P_j leading coefficient");
    if (j >= 2)
      for (int nu = 0; nu <= j; ++nu)
        o.require(P[j].at(nu) == 2 * P[j - 2].at(nu - 2) - (j - 1 + nu) * P[j - 2].at(nu), "P_j recursion");
  }
  // Fourier inversion
  std::uniform_int_distribution<long> val(-4, 4), per(2, 40);
  for (int trial = 0; trial < 100; ++trial) {
    long m = per(rng);
    std::vector<long> w(m);
    for (auto& x : w) x = val(rng);
    PeriodicSequence f = PeriodicSequence::from_integers(m, w);
    PeriodicSequence ff = dft(dft(f)).folded();
    for (long n = 0; n < m; ++n)
      o.require(ff.at(n) == f.at(mod_floor(-n, m)).embed(ff.field_order()), "Fourier inversion");
  }
  // mean values of twisted building blocks
  std::uniform_int_distribution<long> den(1, 20), num(-200, 200);
  std::vector<SeifertData> ds;
  for (auto& p : kTuples) ds.push_back(new_seifert(p));
  for (int trial = 0; trial < 50; ++trial) {
    Rational alpha(num(rng), den(rng));
    alpha.canonicalize();
    for (const SeifertData& d : ds)
      for (const PeriodicSequence& c : chi_decomposition(d).chi)
        o.require(c.twisted(alpha).mean_value().is_zero(), "mean value at alpha=" + to_string(alpha));
  }
  // phi / lambda / m0 / n* identity on random tuples
  const std::vector<long> pool = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37};
  int tuples = 0;
  while (tuples < 50) {
    int r = std::uniform_int_distribution<int>(3, 6)(rng);
    std::vector<long> shuffled = pool, p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (long x : shuffled)
      if (static_cast<int>(p.size()) < r && std::all_of(p.begin(), p.end(), [&](long y) { return std::gcd(x, y) == 1; }))
        p.push_back(x);
    if (static_cast<int>(p.size()) != r) continue;
    SeifertData d = new_seifert(p);
    o.require(consistency_residual(d) == 0, "identity on " + d.label());
    ++tuples;
  }
  // rho_k(S)^2 = 1: exact column of S^2 = -I and the dense product
  {
    PrecisionScope ps(256);
    for (long k = 2; k <= 40; ++k) {
      ExactColumn col = rho_column_exact(k, Mat2{-1, 0, 0, -1});
      Rational scale = 1;
      for (int i = 0; i < col.s_count / 2; ++i) scale *= Rational(2, k);
      bool ok = col.s_count % 2 == 0;
      for (std::size_t j = 0; ok && j < col.column.size(); ++j) {
        Cyclotomic v = col.column[j] * scale;
        ok = j == 0 ? v == Cyclotomic(v.order(), 1) : v.is_zero();
      }
      o.require(ok, "exact rho_k(S)^2 column at k=" + std::to_string(k));
      ComplexMatrix s = rho_S(k);
      const std::size_t n = s.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          BigComplex v;
          for (std::size_t m = 0; m < n; ++m) v += s[i][m] * s[m][j];
          if (i == j) v -= BigComplex(1);
          o.require(abs(v) < Real("1e-60"), "rho_k(S)^2 at k=" + std::to_string(k));
        }
    }
  }
  // surgery presentation independence
  {
    PrecisionScope ps(192);
    for (auto p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}}) {
      SeifertData d = new_seifert(p);
      std::vector<long> perm(p.size());
      perm[0] = p[1];  // even fiber moved off the front, odd ones reversed
      perm[1] = p[0];
      std::reverse_copy(p.begin() + 2, p.end(), perm.begin() + 2);
      SeifertData dr = new_seifert(perm);
      for (long k : {3L, 5L, 8L}) {
        Cyclotomic base = *wrt_level_k(d, k, true).exact;
        std::vector<long> shifts(d.r);
        for (auto& x : shifts) x = std::uniform_int_distribution<long>(-3, 3)(rng);
        o.require(*wrt_level_k(d, k, true, shifts).exact == base, "second-column change on " + d.label());
        o.require(*wrt_level_k(dr, k, true).exact == base, "permutation of " + d.label());
      }
    }
  }
  o.detail << "P_j j<=12, 100 inversions, 50 twists x 4 tuples, 50 random tuples, k<=40, 9 surgery checks";
}

// 9. modularity defect near -d/c
void criterion_defect(Outcome& o) {
  PrecisionScope ps(128);
  SeifertData d = new_seifert({2, 3, 5});
  PartialThetaSpec spec{0, chi_decomposition(d).chi[0], true};
  ModularMatrix g{121, 243, 120, 241};
  const double pts[][2] = {{0.004, 0.003},   {-0.003, 0.002},   {0.002, 0.002},  {-0.002, 0.0015}, {0.003, 0.004},
                           {-0.004, 0.003},  {0.0015, 0.001},   {-0.001, 0.001}, {0.001, 0.0008},  {-0.0008, 0.0008}};
  std::vector<BigComplex> grid;
  for (auto& p : pts) grid.push_back(BigComplex(Real(-241) / 120 + Real(p[0]), Real(p[1])));
  Real worst = 0;
  for (int sign : {-1, 1}) {
    DefectCheck dc = modularity_defect(spec, g, d.m0, grid, sign);
    worst = std::max(worst, dc.max_residual);
    o.require(dc.max_residual < Real("1e-18"), "sign " + std::to_string(sign));
  }
  o.detail << "gamma=(121 243; 120 241), 10 points x 2 signs, max residual " << sci(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"enumeration and CS spectra", criterion_enumeration},
      {"two-route chi~", criterion_two_routes},
      {"DFT decomposition and vanishing", criterion_dft},
      {"radial limits", criterion_radial},
      {"integral plus residues", criterion_lr},
      {"median and Stokes identities", criterion_stokes},
      {"exact asymptotic expansion", criterion_aec},
      {"property suites", criterion_properties},
      {"modularity defect", criterion_defect},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu (%s): %s [%.1f s] %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
