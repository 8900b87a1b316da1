#include "seifertq/wrt.hpp"

#include <algorithm>
#include <numeric>

#include "seifertq/errors.hpp"
#include "seifertq/gppv.hpp"
#include "seifertq/quadrature.hpp"
#include "seifertq/series.hpp"

namespace seifertq {

Rational rademacher_phi(const Mat2& g_in) {
  if (g_in.det() != 1) throw InvalidArgument("matrix is not in SL(2, Z)");
  Mat2 g = g_in;
  if (g.b < 0) g = {-g.a, -g.c, -g.b, -g.d};
  if (g.b != 0) {
    Rational v = Rational(g.a + g.d, g.b) - 12 * dedekind_sum(mod_floor(Integer(g.a), Integer(g.b)), Integer(g.b));
    v.canonicalize();
    return v;
  }
  Rational v(g.c, g.d);
  v.canonicalize();
  return v;
}

std::vector<WordLetter> st_word(const Mat2& g) {
  if (g.det() != 1) throw InvalidArgument("matrix is not in SL(2, Z)");
  long a = g.a, b = g.b, c = g.c, d = g.d;
  std::vector<WordLetter> w;
  while (b != 0) {
    long n = floor_div(Integer(a), Integer(b)).get_si();
    w.push_back({false, n});
    a -= n * b;
    c -= n * d;
    w.push_back({true, 0});
    long na = b, nb = -a, nc = d, nd = -c;
    a = na, b = nb, c = nc, d = nd;
  }
  if (a == 1) {
    w.push_back({false, c});
  } else {
    w.push_back({true, 0});
    w.push_back({true, 0});
    w.push_back({false, -c});
  }
  return w;
}

Real quantum_integer(long k, long m) {
  Real pk = pi_real() / Real(k);
  return sin(pk * Real(m)) / sin(pk);
}

Cyclotomic quantum_integer_exact(long k, long m) {
  unsigned long n = static_cast<unsigned long>(2 * k);
  Cyclotomic num = Cyclotomic::zeta(n, m) - Cyclotomic::zeta(n, -m);
  // 1/(zeta - zeta^{-1}) = zeta (1/k) sum_j j zeta^{2j}
  CyclotomicAccumulator inv(n);
  for (long j = 0; j < k; ++j) inv.add(1 + 2 * j, Rational(j, k));
  return num * inv.reduce();
}

unsigned long wrt_field_order(long k) { return static_cast<unsigned long>(lcm_long(8, 4 * k)); }

namespace {

void check_level(long k) {
  if (k < 2) throw InvalidArgument("level k must be at least 2");
}

ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B) {
  std::size_t n = A.size();
  ComplexMatrix C(n, std::vector<BigComplex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (A[i][l].re.is_zero() && A[i][l].im.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

BigComplex t_phase(long k, long j, long n) {
  // (e^{-i pi/4} zeta_{4k}^{j^2})^n
  Rational e = Rational(n) * (Rational(-1, 4) + Rational(j * j, 2 * k));
  return expipi(e);
}

// multiply by zeta_N^e
Cyclotomic rotate(const Cyclotomic& x, long e, unsigned long N) {
  CyclotomicAccumulator acc(N);
  acc.add(x, e);
  return acc.reduce();
}

// 1/(zeta_{2k}^n - zeta_{2k}^{-n}) in order N
Cyclotomic inverse_sine_factor(long k, long n, unsigned long N) {
  long nn = mod_floor(n, 2 * k);
  long m = k / gcd_long(nn, k);
  if (m == 1) throw DegenerateColor("quantum integer vanishes at n = " + std::to_string(n));
  long u = static_cast<long>(N) / (2 * k);
  CyclotomicAccumulator acc(N);
  for (long j = 0; j < m; ++j) acc.add((nn + 2 * nn * j) * u, Rational(j, m));
  return acc.reduce();
}

Cyclotomic pow_cyc(const Cyclotomic& x, int e, unsigned long N) {
  Cyclotomic r(N, Rational(1));
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Cyclotomic sqrt_two_over_k_power(long k, int count, unsigned long N) {
  Rational q = 1;
  for (int i = 0; i < count / 2; ++i) q *= Rational(2, k);
  Cyclotomic v(N, q);
  if (count % 2 == 1) v = v * cyclotomic_sqrt(static_cast<unsigned long>(2 * k), N) * Rational(1, k);
  return v;
}

Cyclotomic phase_exact(long k, const Rational& Phi, unsigned long N) {
  if (Phi.get_den() != 1) throw DomainError("Rademacher sum is not an integer: " + to_string(Phi));
  Rational e = Rational(k - 2) * Phi * Rational(static_cast<long>(N), 8 * k);
  e.canonicalize();
  if (e.get_den() != 1) throw DomainError("phase does not lie in the WRT field");
  return Cyclotomic::zeta(N, mod_floor(e.get_num(), Integer(static_cast<long>(N))).get_si());
}

}  // namespace

ComplexMatrix rho_S(long k) {
  check_level(k);
  Real f = boost::multiprecision::sqrt(Real(2) / Real(k));
  ComplexMatrix S(k - 1, std::vector<BigComplex>(k - 1));
  for (long j = 1; j < k; ++j)
    for (long l = 1; l < k; ++l) S[j - 1][l - 1] = BigComplex(f * sin(pi_real() * Real(j * l) / Real(k)));
  return S;
}

ComplexMatrix rho_T(long k, long n) {
  check_level(k);
  ComplexMatrix T(k - 1, std::vector<BigComplex>(k - 1));
  for (long j = 1; j < k; ++j) T[j - 1][j - 1] = t_phase(k, j, n);
  return T;
}

ComplexMatrix rho_matrix(long k, const Mat2& g) {
  ComplexMatrix R(k - 1, std::vector<BigComplex>(k - 1));
  for (long j = 0; j < k - 1; ++j) R[j][j] = BigComplex(1);
  ComplexMatrix S = rho_S(k);
  for (auto& w : st_word(g)) R = matmul(R, w.is_S ? S : rho_T(k, w.power));
  return R;
}

std::vector<BigComplex> rho_column(long k, const Mat2& g) {
  check_level(k);
  auto word = st_word(g);
  std::vector<BigComplex> v(k - 1);
  v[0] = BigComplex(1);
  ComplexMatrix S = rho_S(k);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->is_S) {
      std::vector<BigComplex> nv(k - 1);
      for (long j = 0; j < k - 1; ++j)
        for (long l = 0; l < k - 1; ++l) nv[j] += S[j][l] * v[l];
      v.swap(nv);
    } else {
      for (long j = 1; j < k; ++j) v[j - 1] *= t_phase(k, j, it->power);
    }
  }
  return v;
}

ExactColumn rho_column_exact(long k, const Mat2& g) {
  check_level(k);
  const unsigned long N = wrt_field_order(k);
  const long n = static_cast<long>(N);
  const long u2k = n / (2 * k);
  auto word = st_word(g);
  ExactColumn out;
  out.column.assign(k - 1, Cyclotomic(N));
  out.column[0] = Cyclotomic(N, Rational(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto& v = out.column;
    if (it->is_S) {
      // sum_l sin(pi j l/k) v_l with sin = (zeta_{2k}^{jl} - zeta_{2k}^{-jl}) / (2i)
      std::vector<Cyclotomic> nv;
      nv.reserve(k - 1);
      for (long j = 1; j < k; ++j) {
        CyclotomicAccumulator acc(N);
        for (long l = 1; l < k; ++l) {
          if (v[l - 1].is_zero()) continue;
          acc.add(v[l - 1], j * l * u2k - n / 4, Rational(1, 2));
          acc.add(v[l - 1], -j * l * u2k - n / 4, Rational(-1, 2));
        }
        nv.push_back(acc.reduce());
      }
      v.swap(nv);
      ++out.s_count;
    } else {
      for (long j = 1; j < k; ++j) {
        // exponent of (zeta_8^{-1} zeta_{4k}^{j^2})^power in order N
        long e = mod_floor(it->power * mod_floor(-n / 8 + j * j * (n / (4 * k)), n), n);
        v[j - 1] = rotate(v[j - 1], e, N);
      }
    }
  }
  return out;
}

SurgeryPresentation make_presentation(const SeifertData& d, const std::vector<long>& shifts) {
  if (!shifts.empty() && static_cast<int>(shifts.size()) != d.r)
    throw InvalidArgument("need one shift per fiber");
  SurgeryPresentation sp;
  for (int j = 0; j < d.r; ++j) {
    long p = d.p[j], q = d.q[j];
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(p).get_mpz_t(), Integer(q).get_mpz_t());
    // p s + q t = 1, so (p, -t; q, s) has determinant 1
    Integer dd = s, cc = -t;
    Integer aq = abs(Integer(q));
    Integer dn = mod_floor(dd, aq);
    Integer t0 = (dn - dd) / q;
    dd = dn;
    cc += t0 * p;
    long sh = shifts.empty() ? 0 : shifts[j];
    Mat2 B{p, cc.get_si() + sh * p, q, dd.get_si() + sh * q};
    if (B.det() != 1) throw OracleDisagreement("surgery matrix has determinant != 1");
    sp.B.push_back(B);
    if (q > 0)
      ++sp.n_plus;
    else
      ++sp.n_minus;
  }
  sp.n_minus += 1;
  Rational Phi = rademacher_phi(sp.hub) - Rational(3 * (sp.n_plus - sp.n_minus));
  for (auto& B : sp.B) Phi += rademacher_phi(B);
  Phi.canonicalize();
  sp.Phi = Phi;
  return sp;
}

WrtValue wrt_level_k(const SeifertData& d, long k, bool exact, const std::vector<long>& shifts) {
  check_level(k);
  SurgeryPresentation sp = make_presentation(d, shifts);
  WrtValue out;
  out.k = k;
  const int r = d.r;
  if (exact) {
    const unsigned long N = wrt_field_order(k);
    const long u = static_cast<long>(N) / (2 * k);
    std::vector<ExactColumn> cols;
    int s_total = 1;  // hub column
    for (auto& B : sp.B) {
      cols.push_back(rho_column_exact(k, B));
      s_total += cols.back().s_count;
    }
    CyclotomicAccumulator total(N);
    for (long n = 1; n < k; ++n) {
      Cyclotomic prod(N, Rational(1));
      for (auto& c : cols) {
        CyclotomicAccumulator x(N);
        for (long m = 1; m < k; ++m) {
          if (c.column[m - 1].is_zero()) continue;
          x.add(c.column[m - 1], n * m * u);
          x.add(c.column[m - 1], -n * m * u, -1);
        }
        prod *= x.reduce();
      }
      if (r > 2) prod *= pow_cyc(inverse_sine_factor(k, n, N), r - 2, N);
      total.add(prod);
    }
    // sqrt(2/k)^{s_total} / (2 i (zeta - zeta^{-1})) and the framing phase
    Cyclotomic v = total.reduce() * inverse_sine_factor(k, 1, N) *
                   Cyclotomic::zeta(N, -static_cast<long>(N) / 4, Rational(1, 2)) *
                   sqrt_two_over_k_power(k, s_total, N) * phase_exact(k, sp.Phi, N);
    out.value = v.to_complex();
    out.exact = std::move(v);
    return out;
  }
  PrecisionScope guard(working_bits() + 24);
  std::vector<std::vector<BigComplex>> cols;
  for (auto& B : sp.B) cols.push_back(rho_column(k, B));
  std::vector<BigComplex> hub = rho_column(k, sp.hub);
  std::vector<Real> qi(k);
  for (long m = 1; m < k; ++m) qi[m] = quantum_integer(k, m);
  BigComplex total;
  for (long n = 1; n < k; ++n) {
    BigComplex term = hub[n - 1] / pow(BigComplex(qi[n]), r - 1);
    for (auto& c : cols) {
      BigComplex s;
      for (long m = 1; m < k; ++m) s += c[m - 1] * quantum_integer(k, n * m);
      term *= s;
    }
    total += term;
  }
  BigComplex v = total * expipi(Rational(k - 2) * sp.Phi / Rational(4 * k));
  out.value = BigComplex(Real(v.re), Real(v.im));
  return out;
}

BigComplex wrt_naive(const SeifertData& d, long k) {
  check_level(k);
  SurgeryPresentation sp = make_presentation(d);
  std::vector<std::vector<BigComplex>> cols;
  for (auto& B : sp.B) cols.push_back(rho_column(k, B));
  std::vector<BigComplex> hub = rho_column(k, sp.hub);
  const int r = d.r;
  BigComplex total;
  std::vector<long> col(r, 1);
  for (long n = 1; n < k; ++n) {
    std::fill(col.begin(), col.end(), 1);
    while (true) {
      // colored Jones of the star link: prod_j [n n_j] / [n]^{r-1}
      BigComplex term = hub[n - 1] / pow(BigComplex(quantum_integer(k, n)), r - 1);
      for (int j = 0; j < r; ++j) term *= cols[j][col[j] - 1] * quantum_integer(k, n * col[j]);
      total += term;
      int j = r - 1;
      while (j >= 0 && col[j] == k - 1) col[j--] = 1;
      if (j < 0) break;
      ++col[j];
    }
  }
  return total * expipi(Rational(k - 2) * sp.Phi / Rational(4 * k));
}

long galois_lift(long l, long k, unsigned long field_order) {
  const long N = static_cast<long>(field_order);
  for (long u = mod_floor(l, k); u < N * k + k; u += k)
    if (u > 0 && gcd_long(u, N) == 1) return u;
  throw NotCoprime("no unit lifts " + std::to_string(l) + " mod " + std::to_string(k));
}

WrtValue wrt_at_root(const SeifertData& d, long l, long k, long lift) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (gcd_long(l, k) != 1) throw NotCoprime("gcd(" + std::to_string(l) + ", " + std::to_string(k) + ") != 1");
  WrtValue out;
  out.k = k;
  if (k == 1) {
    out.exact = Cyclotomic(1, Rational(1));
    out.value = BigComplex(1);
    return out;
  }
  WrtValue w = wrt_level_k(d, k, true);
  unsigned long N = w.exact->order();
  long u = lift;
  if (u == 0)
    u = galois_lift(l, k, N);
  else if (mod_floor(u - l, k) != 0 || gcd_long(u, static_cast<long>(N)) != 1)
    throw NotCoprime("lift " + std::to_string(u) + " is not a unit congruent to " + std::to_string(l));
  out.exact = w.exact->galois(u);
  out.value = out.exact->to_complex();
  return out;
}

BigComplex wrt_framed_unknot(long k, long framing, const Mat2& B, int n_plus, int n_minus) {
  check_level(k);
  auto col = rho_column(k, B);
  BigComplex s;
  for (long m = 1; m < k; ++m)
    s += expipi(Rational(framing * (m * m - 1), 2 * k)) * quantum_integer(k, m) * col[m - 1];
  Rational Phi = rademacher_phi(B) - Rational(3 * (n_plus - n_minus));
  return s * expipi(Rational(k - 2) * Phi / Rational(4 * k));
}

Real gk0(long k) { return boost::multiprecision::sqrt(Real(2 * k)) / (2 * sin(pi_real() / Real(k))); }

namespace {

// G(e^u) = (2 sinh P u)^{2-r} prod_j 2 sinh(p_hat_j u)
BigComplex g_of_u(const SeifertData& d, const BigComplex& u) {
  BigComplex v = pow(sinh(u * Real(d.P)) * Real(2), 2 - d.r);
  for (long ph : d.p_hat) v *= sinh(u * Real(ph)) * Real(2);
  return v;
}

}  // namespace

BigComplex borel_b0(const SeifertData& d, const BigComplex& xi) {
  BigComplex w = sqrt(imag_unit() * pi_real() * xi * Real(2) / Real(d.P));
  return g_of_u(d, w) * Real(2) / w;
}

BigComplex borel_integral(const SeifertData& d, long k, Real* error) {
  // xi = t^2: B_0(t^2) 2t = 4 G(e^{c t}) / c with c = sqrt(2 pi i / P)
  BigComplex c = sqrt(imag_unit() * pi_real() * Real(2) / Real(d.P));
  BigComplex pref = BigComplex(4) / c;
  Real tol = pow(Real(2), -static_cast<int>(working_bits()) + 16);
  // |integrand| <= e^{-k t^2 + grow t}; beyond t_cut it is below 2^{-bits - 64}
  Real grow = abs(c) * Real(d.P * (d.r - 2) + std::accumulate(d.p_hat.begin(), d.p_hat.end(), 0L));
  Real lim = Real(working_bits() + 64) * boost::multiprecision::log(Real(2));
  Real t_cut = (grow + boost::multiprecision::sqrt(grow * grow + 4 * Real(k) * lim)) / (2 * Real(k));
  auto f = [&](const Real& t) {
    if (t > t_cut) return BigComplex();
    return g_of_u(d, c * t) * exp(Real(-k) * t * t);
  };
  QuadResult q = exp_sinh(f, Real(0), tol, 14);
  if (!q.converged) throw QuadratureFailure("Borel integral did not converge");
  if (error) *error = q.error * abs(pref);
  return q.value * pref;
}

namespace {

BigComplex lr_integrand(const SeifertData& d, long k, const BigComplex& y) {
  BigComplex g = g_of_u(d, y / Real(2 * d.P));
  BigComplex e = exp(imag_unit() * Real(k) * y * y / (pi_real() * Real(8 * d.P)));
  return g * e / (-expm1(-y * Real(k)));
}

// coefficient of h^{r-2} in the regular part at y = 2 pi i m
BigComplex lr_residue_laurent(const SeifertData& d, long k, long m) {
  const std::size_t ord = static_cast<std::size_t>(d.r - 1);
  const BigComplex I = imag_unit();
  const Real pi = pi_real();
  // (2 sinh(h/2)/h)^{2-r}
  PowerSeries sh = PowerSeries::expm1_linear_over_h(ord, BigComplex(Real(1) / 2));
  PowerSeries shm = PowerSeries::expm1_linear_over_h(ord, BigComplex(Real(-1) / 2));
  PowerSeries s2(ord);
  for (std::size_t i = 0; i < ord; ++i) s2[i] = sh[i] - shm[i];
  PowerSeries inv = s2.inverse();
  PowerSeries acc(ord, BigComplex(1));
  for (int i = 0; i < d.r - 2; ++i) acc *= inv;
  // prod_j 2 sinh(a_j + b_j h), a_j = pi i m / p_j, b_j = 1 / (2 p_j)
  for (long pj : d.p) {
    BigComplex a = I * pi * Real(m) / Real(pj);
    BigComplex b = BigComplex(Real(1) / Real(2 * pj));
    PowerSeries ep = PowerSeries::exp_linear(ord, a, b);
    PowerSeries em = PowerSeries::exp_linear(ord, -a, -b);
    PowerSeries t(ord);
    for (std::size_t i = 0; i < ord; ++i) t[i] = ep[i] - em[i];
    acc *= t;
  }
  // exp(i k y^2 / (8 pi P)) with y = 2 pi i m + h
  PowerSeries q(ord);
  Real den = Real(8 * d.P) * pi;
  q[0] = I * Real(k) * (-Real(4) * pi * pi * Real(m) * Real(m)) / den;
  if (ord > 1) q[1] = I * Real(k) * (I * Real(4) * pi * Real(m)) / den;
  if (ord > 2) q[2] = I * Real(k) / den;
  acc *= PowerSeries::exp_of(q);
  // 1/(1 - e^{-k h}) = h^{-1} [(1 - e^{-k h})/h]^{-1}
  PowerSeries dn = PowerSeries::expm1_linear_over_h(ord, BigComplex(Real(-k)));
  for (std::size_t i = 0; i < ord; ++i) dn[i] = -dn[i];
  acc *= dn.inverse();
  BigComplex v = acc[ord - 1];
  if ((m * (d.r - 2)) % 2 != 0) v = -v;
  return v;
}

}  // namespace

LrCheck lr_check(const SeifertData& d, long k) {
  check_level(k);
  LrCheck out;
  WrtValue w = wrt_level_k(d, k, true);
  const Real pi = pi_real();
  BigComplex pre = expipi(Rational(1, 4) + d.phi / Rational(2 * k));
  out.lhs = pre * w.value * (Real(4) * boost::multiprecision::sqrt(Real(d.P)) / gk0(k));
  Real qerr = 0;
  out.integral = borel_integral(d, k, &qerr);
  Real tol = pow(Real(2), -static_cast<int>(working_bits()) + 16);
  Real radius = pi / Real(2 * std::max(d.P, k));
  for (long m = 1; m < 2 * d.P; ++m) {
    BigComplex center(Real(0), Real(2) * pi * Real(m));
    QuadResult q = circle_residue([&](const BigComplex& y) { return lr_integrand(d, k, y); }, center, radius, tol);
    if (!q.converged) throw QuadratureFailure("residue contour did not converge at m = " + std::to_string(m));
    out.residues += q.value;
    qerr += q.error;
    out.residues_laurent += lr_residue_laurent(d, k, m);
  }
  out.quadrature_error = qerr;
  out.residue_method_gap = abs(out.residues - out.residues_laurent);
  out.residual = abs(out.lhs - (out.integral - out.residues));
  return out;
}

RadialCheck verify_radial(const SeifertData& d, const Rational& alpha_in) {
  RadialCheck out;
  Rational alpha = alpha_in;
  alpha.canonicalize();
  out.alpha = alpha;
  RadialLimit rl = radial_limit(d, alpha);
  out.lhs_exact = rl.psi0;
  long a = alpha.get_num().get_si(), b = alpha.get_den().get_si();
  if (b == 1) {
    out.rhs_exact = Cyclotomic(1);
  } else {
    WrtValue w = wrt_at_root(d, mod_floor(a, b), b);
    Rational x = alpha * d.phi / 2;
    x.canonicalize();
    long xd = x.get_den().get_si();
    Cyclotomic ph = Cyclotomic::zeta(static_cast<unsigned long>(2 * xd), mod_floor(x.get_num(), Integer(2 * xd)).get_si());
    Cyclotomic sn = Cyclotomic::zeta(static_cast<unsigned long>(2 * b), a) - Cyclotomic::zeta(static_cast<unsigned long>(2 * b), -a);
    out.rhs_exact = ph * sn * *w.exact * Rational(d.r % 2 == 0 ? 2 : -2);
  }
  out.exact_equal = out.lhs_exact == out.rhs_exact;
  out.lhs = out.lhs_exact.to_complex();
  out.rhs = out.rhs_exact.to_complex();
  out.residual = abs(out.lhs - out.rhs);
  return out;
}

CassonCheck casson_invariant(const SeifertData& d, const std::vector<long>& primes) {
  CassonCheck out;
  out.dedekind = casson_from_phi(d.p, phi_from_dedekind_sums(d.p));
  Integer modulus = 1, acc = 0;
  for (long k : primes) {
    if (k < 5 || gcd_long(k, 6) != 1) throw InvalidArgument("CRT levels must be coprime to 6");
    Rational alpha(1, k);
    BigComplex psi = radial_limit_numeric(d, alpha);
    BigComplex zs = psi * expipi(Rational(-d.m0 * d.m0, 2 * d.P * k));
    BigComplex zeta = expipi(Rational(2, k));
    BigComplex w = wrt_level_k(d, k, false).value;
    BigComplex ratio = zs / ((zeta - BigComplex(1)) * Real(d.r % 2 == 0 ? 2 : -2) * expipi(Rational(2 * d.n_star, k)) * w);
    Real t = arg(ratio) * Real(k) / (2 * pi_real());
    long e = mod_floor(boost::multiprecision::lround(t), k);
    if (abs(ratio - expipi(Rational(2 * e, k))) > Real(1e-10))
      throw OracleDisagreement("radial identity at k = " + std::to_string(k) + " is not a root of unity");
    // zeta^{-6 lambda} = zeta^e
    Integer inv6;
    mpz_invert(inv6.get_mpz_t(), Integer(6).get_mpz_t(), Integer(k).get_mpz_t());
    long lam = mod_floor(Integer(-e) * inv6, Integer(k)).get_si();
    out.moduli.push_back(k);
    out.residues.push_back(lam);
    // CRT step
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(modulus % k).get_mpz_t(), Integer(k).get_mpz_t());
    Integer t2 = mod_floor((Integer(lam) - acc) * inv, Integer(k));
    acc += modulus * t2;
    modulus *= k;
  }
  if (2 * acc > modulus) acc -= modulus;
  out.radial = acc.get_si();
  if (out.radial != out.dedekind)
    throw OracleDisagreement("Casson invariant: Dedekind route " + std::to_string(out.dedekind) + ", radial route " +
                             std::to_string(out.radial));
  return out;
}

}  // namespace seifertq
