#include "seifertq/gppv.hpp"

#include <algorithm>

#include "seifertq/errors.hpp"

namespace seifertq {

Integer LaurentCoefficients::at(long m) const {
  if (m > m_max) throw DomainError("coefficient beyond the computed range");
  auto it = coeffs.find(m);
  return it == coeffs.end() ? Integer(0) : it->second;
}

bool is_poincare(const SeifertData& d) {
  auto p = d.p;
  std::sort(p.begin(), p.end());
  return p == std::vector<long>{2, 3, 5};
}

LaurentCoefficients laurent_chi_tilde(const SeifertData& d, long m_max) {
  if (m_max < d.m0) throw InvalidArgument("m_max must be at least m0 = " + std::to_string(d.m0));
  std::map<long, Integer> num{{0, Integer(1)}};
  for (long ph : d.p_hat) {
    std::map<long, Integer> next;
    for (auto& [e, c] : num) {
      next[e + ph] += c;
      next[e - ph] -= c;
    }
    num.swap(next);
  }
  LaurentCoefficients out;
  out.m_min = d.m0;
  out.m_max = m_max;
  const long base = (d.r - 2) * d.P;
  for (auto& [e, c] : num) {
    if (c == 0) continue;
    for (long n = 0;; ++n) {
      long m = e + base + 2 * d.P * n;
      if (m > m_max) break;
      out.coeffs[m] += c * binomial(n + d.r - 3, d.r - 3);
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

Integer chi_closed(const SeifertData& d, long m) {
  const long P2 = 2 * d.P;
  for (unsigned mask = 0; mask < (1u << d.r); ++mask) {
    long nstar = 0;
    int sign = 1;
    for (int j = 0; j < d.r; ++j) {
      int e = (mask >> j) & 1 ? -1 : 1;
      nstar += e * d.p_hat[j];
      sign *= e;
    }
    if (mod_floor(m - d.r * d.P - nstar, P2) != 0) continue;
    long l = (m - (d.r - 2) * d.P - nstar) / P2;
    Integer v = 1;
    for (long i = 1; i <= d.r - 3; ++i) v *= l + i;
    return sign * (v / factorial(d.r - 3));
  }
  return 0;
}

Integer chi_tilde_from_closed(const SeifertData& d, long m) {
  Integer v = m >= 1 ? chi_closed(d, m) : Integer(0);
  if (is_poincare(d) && (m == 1 || m == -1)) v -= 1;
  return v;
}

Rational chi_coefficient(const SeifertData& d, int j, int s) {
  const int r = d.r;
  if (j < 0 || s < 0 || j + s > r - 3) return 0;
  std::vector<Rational> sigma = r == 3 ? std::vector<Rational>{Rational(1)} : rising_factorial_coeffs(r - 3);
  Rational tot = 0;
  for (int t = 0; t <= r - 3 - j - s; ++t) {
    int K = j + s + t;
    Integer num = factorial(K);
    Integer rp;
    mpz_pow_ui(rp.get_mpz_t(), Integer(r - 2).get_mpz_t(), static_cast<unsigned long>(t));
    num *= rp;
    Integer den = factorial(r - 3) * factorial(j) * factorial(s) * factorial(t);
    Integer two_k, pjs;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(K));
    mpz_pow_ui(pjs.get_mpz_t(), Integer(d.P).get_mpz_t(), static_cast<unsigned long>(j + s));
    den *= two_k * pjs;
    Rational term = sigma.at(K) * Rational(num, den);
    if ((s + t + 1) % 2 != 0) term = -term;
    tot += term;
  }
  tot.canonicalize();
  return tot;
}

ChiDecomposition chi_decomposition(const SeifertData& d) {
  ChiDecomposition out;
  out.exceptional = is_poincare(d);
  const int r = d.r;
  const long P2 = 2 * d.P;
  std::vector<PeriodicSequence> ms;
  for (int s = 0; s <= r - 3; ++s) ms.push_back(ms_f_one(d, s));
  out.C.assign(r - 2, std::vector<Rational>(r - 2, Rational(0)));
  for (int j = 0; j <= r - 3; ++j) {
    PeriodicSequence chi = PeriodicSequence::zero(P2);
    for (int s = 0; s + j <= r - 3; ++s) {
      out.C[j][s] = chi_coefficient(d, j, s);
      if ((j + s + r) % 2 == 0) {
        if (out.C[j][s] != 0) throw OracleDisagreement("C_{j,s} nonzero with j + s + r even");
        continue;
      }
      chi += ms[s] * Cyclotomic(1, out.C[j][s]);
    }
    if (!chi.has_parity(j % 2 == 0 ? Parity::Odd : Parity::Even))
      throw OracleDisagreement("chi_j has the wrong parity");
    Integer m0sq = Integer(d.m0) * d.m0;
    for (long n : chi.support())
      if (mod_floor(Integer(n) * n - m0sq, Integer(2 * P2)) != 0)
        throw OracleDisagreement("support condition n^2 = m0^2 mod 4P fails");
    out.chi.push_back(std::move(chi));
  }
  for (long m = 1; m <= P2; ++m) {
    Rational s = 0;
    Integer mj = 1;
    for (int j = 0; j <= r - 3; ++j, mj *= m) s += Rational(mj) * out.chi[j].at(m).to_rational();
    if (s != Rational(chi_closed(d, m))) throw OracleDisagreement("sum_j m^j chi_j(m) differs from chi(m)");
  }
  return out;
}

BigComplex q_correction(const SeifertData& d, const BigComplex& tau) {
  if (!is_poincare(d)) return BigComplex();
  return exp(imag_unit() * pi_real() * tau / Real(60)) * Real(-2);
}

namespace {

// crude bound for |chi~(m)|
Real coefficient_bound(const SeifertData& d, long m) {
  Real l = Real(std::max(m, 0L)) / Real(2 * d.P) + Real(d.r);
  return pow(Real(2), d.r) * pow(l, d.r - 3);
}

// smallest m_max past which the tail is below eps, plus the tail bound
std::pair<long, Real> truncation(const SeifertData& d, const Real& y, const Real& eps) {
  const Real c = pi_real() * y / Real(2 * d.P);
  for (long m = std::max(d.m0, 1L);; ++m) {
    Real mm = Real(m + 1);
    Real b = coefficient_bound(d, m + 1) * exp(-c * mm * mm);
    Real ratio = coefficient_bound(d, m + 2) / coefficient_bound(d, m + 1) * exp(-c * (2 * mm + 1));
    if (ratio < Real(0.5) && b < eps) return {m, 2 * b};
  }
}

Real route_tolerance(const BigComplex& v, const Real& tails) {
  Real scale = std::max(Real(1), abs(v));
  return scale * pow(Real(2), -static_cast<int>(working_bits()) + 24) + 4 * tails;
}

}  // namespace

SeriesEvaluation evaluate_Psi(const SeifertData& d, const BigComplex& tau) {
  if (tau.im <= 0) throw DomainError("Psi needs Im tau > 0");
  SeriesEvaluation out;
  const unsigned bits = working_bits();
  Real eps = pow(Real(2), -static_cast<int>(bits) - 10);
  auto [m_max, tail] = truncation(d, tau.im, eps);
  auto lc = laurent_chi_tilde(d, m_max);
  BigComplex s;
  {
    PrecisionScope guard(bits + 24);
    BigComplex t(Real(tau.re), Real(tau.im));
    BigComplex w = imag_unit() * pi_real() * t / Real(2 * d.P);
    for (auto& [m, c] : lc.coeffs) s += exp(w * Real(m) * Real(m)) * real_from(c);
  }
  out.value = BigComplex(Real(s.re), Real(s.im));
  out.terms = m_max - d.m0 + 1;
  out.tail_bound = tail;

  ChiDecomposition cd = chi_decomposition(d);
  BigComplex alt = q_correction(d, tau);
  Real tails = tail;
  for (int j = 0; j <= d.r - 3; ++j) {
    PartialThetaSpec spec{j, cd.chi[j], true};
    ThetaValue tv = theta_eval(spec, tau);
    alt += tv.value;
    tails += tv.tail_bound;
  }
  out.other_route = alt;
  out.route_difference = abs(out.value - alt);
  if (out.route_difference > route_tolerance(out.value, tails))
    throw OracleDisagreement("Psi routes differ by " + to_string(out.route_difference, 10));
  return out;
}

SeriesEvaluation evaluate_Z(const SeifertData& d, const BigComplex& q) {
  Real aq = abs(q);
  if (aq >= 1) throw DomainError("Z* needs |q| < 1");
  SeriesEvaluation out;
  if (aq == 0) {
    out.value = out.other_route = real_from(laurent_chi_tilde(d, d.m0).at(d.m0));
    out.route_difference = 0;
    out.tail_bound = 0;
    out.terms = 1;
    return out;
  }
  BigComplex tau = log(q) / (imag_unit() * pi_real() * Real(2));
  SeriesEvaluation psi = evaluate_Psi(d, tau);
  const unsigned bits = working_bits();
  Real eps = pow(Real(2), -static_cast<int>(bits) - 10);
  auto [m_max, tail] = truncation(d, tau.im, eps);
  auto lc = laurent_chi_tilde(d, m_max);
  BigComplex s;
  Integer m0sq = Integer(d.m0) * d.m0;
  for (auto& [m, c] : lc.coeffs) {
    Integer e = (Integer(m) * m - m0sq) / (4 * d.P);
    s += pow(q, static_cast<int>(e.get_si())) * real_from(c);
  }
  out.value = s;
  BigComplex phase = exp(-imag_unit() * pi_real() * tau * Real(d.m0) * Real(d.m0) / Real(2 * d.P));
  out.other_route = phase * psi.value;
  out.tail_bound = tail * abs(phase);
  out.terms = m_max - d.m0 + 1;
  out.route_difference = abs(out.value - out.other_route);
  if (out.route_difference > route_tolerance(out.value, out.tail_bound + psi.tail_bound * abs(phase)))
    throw OracleDisagreement("Z* routes differ by " + to_string(out.route_difference, 10));
  return out;
}

FormalSeries asymptotic_series(const SeifertData& d, const Rational& alpha, std::size_t n_terms) {
  ChiDecomposition cd = chi_decomposition(d);
  FormalSeries out;
  out.alpha = alpha;
  out.coeffs.assign(n_terms, Cyclotomic(1));
  for (int j = 0; j <= d.r - 3; ++j) {
    FormalSeries t = theta_asymp(PartialThetaSpec{j, cd.chi[j], true}, alpha, n_terms);
    for (std::size_t p = 0; p < n_terms; ++p) out.coeffs[p] += t.coeffs[p];
  }
  if (cd.exceptional) {
    // -2 e^{i pi (alpha + t)/60}: coefficient p is -2 e^{i pi alpha/60} (i/60)^p / p!
    Rational a = alpha;
    a.canonicalize();
    long b = a.get_den().get_si();
    Cyclotomic c = Cyclotomic::zeta(static_cast<unsigned long>(120 * b), mod_floor(Integer(a.get_num()), Integer(120 * b)).get_si(), Rational(-2));
    Cyclotomic i_60 = Cyclotomic::zeta(4, 1, Rational(1, 60));
    for (std::size_t p = 0; p < n_terms; ++p) {
      if (p > 0) c = c * i_60 * Rational(1, static_cast<long>(p));
      out.coeffs[p] += c;
    }
  }
  return out;
}

RadialLimit radial_limit(const SeifertData& d, const Rational& alpha) {
  RadialLimit out;
  out.alpha = alpha;
  out.alpha.canonicalize();
  out.psi0 = asymptotic_series(d, out.alpha, 1).coeffs[0];
  long b = out.alpha.get_den().get_si();
  long N = 4 * d.P * b;
  Integer e = -Integer(d.m0) * d.m0 * out.alpha.get_num();
  out.z_star = out.psi0 * Cyclotomic::zeta(static_cast<unsigned long>(N), mod_floor(e, Integer(N)).get_si());
  return out;
}

bool in_subfield(const Cyclotomic& x, unsigned long k) {
  unsigned long N = static_cast<unsigned long>(lcm_long(static_cast<long>(x.order()), static_cast<long>(k)));
  Cyclotomic y = x.order() == N ? x : x.embed(N);
  for (unsigned long u = 1; u < N; u += k)
    if (gcd_long(static_cast<long>(u), static_cast<long>(N)) == 1 && y.galois(static_cast<long>(u)) != y) return false;
  return true;
}

}  // namespace seifertq

namespace seifertq {

BigComplex radial_limit_numeric(const SeifertData& d, const Rational& alpha) {
  Rational a = alpha;
  a.canonicalize();
  const long b = a.get_den().get_si();
  const long M = 2 * d.P;
  const long T = M * b;
  ChiDecomposition cd = chi_decomposition(d);
  BigComplex total;
  PrecisionScope guard(working_bits() + 24);
  for (int j = 0; j <= d.r - 3; ++j) {
    BernoulliPolynomial B = bernoulli_polynomial(static_cast<unsigned>(j + 1));
    std::vector<Real> bc;
    for (auto& c : B.coeffs) bc.push_back(real_from(c));
    BigComplex s;
    for (long m = 1; m <= T; ++m) {
      Rational v = cd.chi[j].at(m).to_rational();
      if (v == 0) continue;
      Real x = Real(m) / Real(T), bx = 0;
      for (std::size_t i = bc.size(); i-- > 0;) bx = bx * x + bc[i];
      Rational e(Integer(m) * m * a.get_num(), Integer(b * M));
      s += expipi(e) * (bx * real_from(v));
    }
    total -= s * (pow(Real(T), j) / Real(j + 1));
  }
  if (cd.exceptional) total -= expipi(Rational(a / 60)) * Real(2);
  return total;
}

}  // namespace seifertq
