#include "seifertq/resurgence.hpp"

#include <algorithm>
#include <cmath>

#include "seifertq/errors.hpp"
#include "seifertq/quadrature.hpp"

namespace seifertq {

std::vector<StokesPolynomial> stokes_polynomials(int j_max) {
  if (j_max < 0) throw InvalidArgument("j_max must be non-negative");
  std::vector<StokesPolynomial> P;
  P.push_back({0, {Integer(1)}});
  if (j_max >= 1) P.push_back({1, {Integer(0), Integer(-1)}});
  for (int j = 2; j <= j_max; ++j) {
    const auto& a = P[j - 2].coeffs;
    std::vector<Integer> c(a.size() + 2, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      c[i + 2] += 2 * a[i];
      c[i] -= (j - 1) * a[i];
      c[i] -= static_cast<long>(i) * a[i];  // -x d/dx
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    P.push_back({j, c});
  }
  return P;
}

namespace {

// Borel kernel F_j(t) = sum_{n >= 1} n^j f(n) e^{-n t} of an M-periodic f
// with mean zero, held in floating point.
class BorelKernel {
 public:
  BorelKernel(int j, long M, std::vector<BigComplex> values, unsigned bits) : j_(j), M_(M), bits_(bits) {
    for (long l = 1; l <= M; ++l) {
      const BigComplex& v = values[l % M];
      if (!v.re.is_zero() || !v.im.is_zero()) direct_.emplace_back(l, v);
      const BigComplex& w = values[mod_floor(-l, M)];
      if (!w.re.is_zero() || !w.im.is_zero()) reflected_.emplace_back(l, w);
    }
    // x^i-sum numerators: sum_q q^i x^q = N_i(x) / (1 - x)^{i+1}
    numerators_.push_back({Integer(1)});
    for (int i = 1; i <= j_; ++i) {
      const auto& a = numerators_.back();
      std::vector<Integer> b(a.size() + 1, Integer(0));
      // x [N'(1 - x) + i N]
      for (std::size_t e = 0; e < a.size(); ++e) {
        b[e] += static_cast<long>(e) * a[e];
        b[e + 1] += (i - static_cast<long>(e)) * a[e];
      }
      numerators_.push_back(b);
    }
    for (int i = 0; i <= j_; ++i) binom_.push_back(binomial(j_, i));

    Real R = 2 * pi_real() / Real(M_);
    int drop = std::max(8, static_cast<int>(bits_) / 12);
    rho_ = R * pow(Real(2), -drop);
    std::size_t n_terms = static_cast<std::size_t>((bits_ + 16) / drop + 2);
    // c_n = (-1)^n L(-n-j, f) / n!
    for (std::size_t n = 0; n < n_terms; ++n) {
      unsigned deg = static_cast<unsigned>(n + j_ + 1);
      BernoulliPolynomial B = bernoulli_polynomial(deg);
      std::vector<Real> bc;
      for (auto& q : B.coeffs) bc.push_back(real_from(q));
      BigComplex s;
      for (auto& [l, v] : direct_) {
        Real x = Real(l) / Real(M_);
        Real b = bc.back();
        for (std::size_t i = bc.size() - 1; i-- > 0;) b = b * x + bc[i];
        s += v * b;
      }
      Real scale = -pow(Real(M_), static_cast<int>(deg - 1)) / Real(deg);
      Real nf = real_from(factorial(static_cast<long>(n)));
      BigComplex c = s * (scale / nf);
      if (n % 2 == 1) c = -c;
      taylor_.push_back(c);
    }
  }

  BigComplex operator()(const BigComplex& t) const {
    if (abs(t) < rho_) {
      BigComplex s, tp(1);
      for (auto& c : taylor_) {
        s += c * tp;
        tp *= t;
      }
      return s;
    }
    if (t.re >= 0) return direct(t, direct_);
    BigComplex v = direct(-t, reflected_);
    return j_ % 2 == 0 ? -v : v;
  }

 private:
  BigComplex direct(const BigComplex& t, const std::vector<std::pair<long, BigComplex>>& supp) const {
    BigComplex x = exp(-t * Real(M_));
    BigComplex om = -expm1(-t * Real(M_));
    std::vector<BigComplex> K;
    BigComplex omp = om;
    for (int i = 0; i <= j_; ++i) {
      BigComplex n;
      BigComplex xp(1);
      for (auto& c : numerators_[i]) {
        if (c != 0) n += xp * real_from(c);
        xp *= x;
      }
      K.push_back(n / omp);
      omp *= om;
    }
    // e^{-l t} = lo[l % B] hi[l / B]
    long B = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(M_ + 1))));
    std::vector<BigComplex> lo(B), hi(M_ / B + 2);
    BigComplex e1 = exp(-t);
    lo[0] = BigComplex(1);
    for (long a = 1; a < B; ++a) lo[a] = lo[a - 1] * e1;
    BigComplex eB = lo[B - 1] * e1;
    hi[0] = BigComplex(1);
    for (std::size_t q = 1; q < hi.size(); ++q) hi[q] = hi[q - 1] * eB;
    BigComplex sum;
    for (auto& [l, v] : supp) {
      BigComplex inner;
      Real lp = 1, Mp = 1;
      std::vector<Real> lpow(j_ + 1);
      for (int i = 0; i <= j_; ++i) {
        lpow[i] = lp;
        lp *= Real(l);
      }
      for (int i = 0; i <= j_; ++i) {
        inner += K[i] * (real_from(binom_[i]) * lpow[j_ - i] * Mp);
        Mp *= Real(M_);
      }
      sum += v * lo[l % B] * hi[l / B] * inner;
    }
    return sum;
  }

  int j_;
  long M_;
  unsigned bits_;
  std::vector<std::pair<long, BigComplex>> direct_, reflected_;
  std::vector<std::vector<Integer>> numerators_;
  std::vector<Integer> binom_;
  Real rho_;
  std::vector<BigComplex> taylor_;
};

unsigned kernel_guard(int j, long M, unsigned bits) {
  double lg = std::log2(static_cast<double>(M) / (2 * M_PI)) + std::max(8.0, bits / 12.0);
  return static_cast<unsigned>((j + 1) * lg + j * std::log2(static_cast<double>(M)) +
                               std::log2(static_cast<double>(M)) + 40);
}

void check_parity(const PartialThetaSpec& spec) {
  PartialThetaSpec s = spec;
  s.parity_flag = true;
  s.validate();
}

// f(n) e^{i pi n^2 alpha / M} on a period M den(alpha), as floating values
std::vector<BigComplex> twisted_values(const PeriodicSequence& f, const Rational& alpha, long& period) {
  const long M = f.period();
  const long b = alpha.get_den().get_si();
  period = M * b;
  std::vector<BigComplex> base(M);
  for (long n = 0; n < M; ++n) base[n] = f.complex_at(n);
  std::vector<BigComplex> out(period);
  for (long n = 0; n < period; ++n) {
    const BigComplex& v = base[n % M];
    if (v.re.is_zero() && v.im.is_zero()) continue;
    Rational e = Rational(Integer(n) * n) * alpha / M;
    e = e - 2 * floor_div(e.get_num(), 2 * e.get_den());
    out[n] = v * expipi(e);
  }
  return out;
}

}  // namespace

LateralValue lateral_sum(const PartialThetaSpec& spec, const Rational& alpha_in, const Real& theta,
                         const BigComplex& t_in, const LaplaceConfig& cfg) {
  check_parity(spec);
  Rational alpha = alpha_in;
  alpha.canonicalize();
  const unsigned bits = working_bits();
  if (abs(theta - pi_real() / 2) < pow(Real(2), -static_cast<int>(bits) / 2))
    throw RayHitsPole("the ray arg xi = pi/2 carries the Borel singularities");
  LateralValue out;
  BigComplex result;
  {
    long Mp = spec.M() * alpha.get_den().get_si();
    unsigned guard = cfg.guard_bits ? cfg.guard_bits : kernel_guard(spec.j, Mp, bits);
    PrecisionScope scope(bits + guard);
    std::vector<BigComplex> vals = twisted_values(spec.f, alpha, Mp);
    BigComplex mean;
    for (auto& v : vals) mean += v;
    if (abs(mean) > pow(Real(2), -static_cast<int>(bits) / 2) * Real(Mp))
      throw LimitDoesNotExist("twisted sequence has mean value " + to_string(mean / Real(Mp), 20));
    BorelKernel F(spec.j, Mp, vals, bits);
    BigComplex u = BigComplex(Real(t_in.re), Real(t_in.im)) * (Real(Mp) / Real(spec.M()));
    BigComplex eth = polar(Real(1), Real(theta));
    BigComplex a = eth / u;
    if (a.re <= 0) throw DomainError("tau lies outside the half-plane of convergence of the ray");
    BigComplex C = sqrt(Real(4) * pi_real() / Real(Mp)) * expipi(Rational(1, 4));
    BigComplex dir = C * polar(Real(1), Real(theta) / 2);
    Real tol = pow(Real(2), -static_cast<int>(bits) - 8);
    QuadResult q = exp_sinh([&](const Real& s) { return exp(-(a * (s * s))) * F(dir * s); }, Real(0), tol,
                            cfg.max_levels);
    if (!q.converged) throw QuadratureFailure("lateral Laplace integral did not converge");
    BigComplex pref = sqrt(a) * (Real(2) / boost::multiprecision::sqrt(pi_real()));
    result = q.value * pref;
    out.error = q.error * abs(pref);
    out.evaluations = q.evaluations;
  }
  out.value = BigComplex(Real(result.re), Real(result.im));
  out.error = Real(out.error);
  return out;
}

LateralValue median_sum(const PartialThetaSpec& spec, const Rational& alpha, const BigComplex& t,
                        const LaplaceConfig& cfg) {
  Real eps = Real(cfg.epsilon);
  LateralValue a = lateral_sum(spec, alpha, pi_real() / 2 - eps, t, cfg);
  LateralValue b = lateral_sum(spec, alpha, pi_real() / 2 + eps, t, cfg);
  LateralValue out;
  out.value = (a.value + b.value) / Real(2);
  out.error = (a.error + b.error) / 2;
  out.evaluations = a.evaluations + b.evaluations;
  return out;
}

StokesCheck stokes_check(const PartialThetaSpec& spec, const BigComplex& tau, int sign, const LaplaceConfig& cfg) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  check_parity(spec);
  if (!spec.f.mean_value().is_zero()) throw LimitDoesNotExist("f has non-zero mean value");
  if (tau.im <= 0) throw DomainError("tau must lie in the upper half-plane");
  StokesCheck out;
  out.sign = sign;
  const int j = spec.j;
  const long M = spec.M();
  out.theta = theta_eval(spec, tau).value;
  LateralValue lat = lateral_sum(spec, Rational(0), pi_real() / 2 + Real(sign) * Real(cfg.epsilon), tau, cfg);
  out.lateral = lat.value;
  out.quadrature_error = lat.error;

  auto P = stokes_polynomials(j);
  PeriodicSequence fh = dft(spec.f);
  BigComplex minus_inv = -BigComplex(Real(1)) / tau;
  BigComplex rt = sqrt(tau);
  BigComplex sum;
  for (int nu = j % 2; nu <= j; nu += 2) {
    Integer c = P[j].at(nu);
    if (c == 0) continue;
    PartialThetaSpec s{nu, fh, false};
    BigComplex th = theta_eval(s, minus_inv).value;
    // (M / (pi i))^{(j - nu)/2}
    int m = (j - nu) / 2;
    BigComplex f = pow(BigComplex(Real(M) / pi_real()) * (-imag_unit()), m);
    sum += f * real_from(c) * pow(rt, -(j + nu + 1)) * th;
  }
  sum = sum * expipi(Rational(1, 4)) / pow(Real(2), j / 2);
  out.correction = sign < 0 ? -sum : sum;
  out.residual = abs(out.theta - (out.lateral + out.correction));
  return out;
}

DefectCheck modularity_defect(const PartialThetaSpec& spec, const ModularMatrix& g, long n0,
                              const std::vector<BigComplex>& grid, int sign, std::optional<int> branch,
                              const LaplaceConfig& cfg) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  if (spec.j != 0 && spec.j != 1) throw InvalidArgument("modularity defect is implemented for j = 0, 1");
  check_parity(spec);
  const long M = spec.M();
  if (Integer(g.a) * g.d - Integer(g.b) * g.c != 1) throw InvalidArgument("gamma is not in SL(2, Z)");
  if (mod_floor(g.c, 2 * M) != 0 || mod_floor(g.a - 1, 2 * M) != 0 || mod_floor(g.d - 1, 2 * M) != 0)
    throw InvalidArgument("gamma is not in Gamma_1(2M)");
  if (g.c < 0) throw InvalidArgument("use the representative with c >= 0");
  int expected = sign < 0 ? 1 : -1;
  if (branch && *branch != expected)
    throw BranchMismatch(std::string("ray pi/2 ") + (sign < 0 ? "- eps needs the principal" : "+ eps needs the negated") +
                         " branch of J^{1/2}");
  for (long n : spec.f.support())
    if (mod_floor(Integer(n) * n - Integer(n0) * n0, Integer(2 * M)) != 0)
      throw DomainError("support condition fails at n = " + std::to_string(n));

  DefectCheck out;
  out.gamma = g;
  out.sign = sign;
  out.n0 = n0;
  out.weight = Rational(2 * spec.j + 1, 2);
  out.kronecker = kronecker_symbol(Integer(2 * M * g.c), Integer(std::labs(g.d)));
  Rational ph = Rational(-Integer(n0) * n0 * g.b, M);
  BigComplex eps_g = expipi(ph) * Real(out.kronecker);
  out.max_residual = 0;
  for (const BigComplex& tau : grid) {
    if (tau.im <= 0) throw DomainError("grid points must lie in the upper half-plane");
    DefectSample smp;
    smp.tau = tau;
    BigComplex J = tau * Real(g.c) + BigComplex(Real(g.d));
    BigComplex gt = (tau * Real(g.a) + BigComplex(Real(g.b))) / J;
    BigComplex rj = sqrt(J);
    if (expected < 0) rj = -rj;
    smp.defect = theta_eval(spec, tau).value - eps_g * pow(rj, -(2 * spec.j + 1)) * theta_eval(spec, gt).value;
    if (g.c == 0) {
      smp.lateral = BigComplex();
    } else {
      Rational alpha(-g.d, g.c);
      alpha.canonicalize();
      BigComplex t = tau + BigComplex(real_from(Rational(g.d, g.c)));
      smp.lateral = lateral_sum(spec, alpha, pi_real() / 2 + Real(sign) * Real(cfg.epsilon), t, cfg).value;
    }
    smp.residual = abs(smp.defect - smp.lateral);
    out.max_residual = std::max(out.max_residual, smp.residual);
    out.samples.push_back(smp);
  }
  return out;
}

}  // namespace seifertq
