#include <algorithm>
#include <map>

#include "seifertq/errors.hpp"
#include "seifertq/flat_moduli.hpp"
#include "seifertq/gppv.hpp"
#include "seifertq/hikami.hpp"
#include "seifertq/resurgence.hpp"
#include "seifertq/wrt.hpp"

namespace seifertq {

BigComplex aec_prefactor(const SeifertData& d, const BigComplex& tau) {
  BigComplex e = exp(-imag_unit() * pi_real() * tau * real_from(d.phi) / Real(2));
  BigComplex v = tau * e / (imag_unit() * Real(4) * sin(tau * pi_real()));
  return d.r % 2 == 0 ? v : -v;
}

std::map<std::pair<int, int>, Rational> q_polynomial(const SeifertData& d, int nu, int s) {
  std::map<std::pair<int, int>, Rational> out;
  auto P = stokes_polynomials(std::max(d.r - 3, 1));
  for (int j = nu; j <= d.r - 3 - s; j += 2) {
    Rational C = chi_coefficient(d, j, s);
    Integer pj = P[j].at(nu);
    if (C == 0 || pj == 0) continue;
    Rational v = -C * Rational(pj) / Rational(Integer(1) << (j / 2));
    v.canonicalize();
    out[{(j + nu) / 2, (j - nu) / 2}] += v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<LambdaValue> lambda_values(const SeifertData& d) {
  std::vector<LambdaValue> out;
  for (int s = 0; s <= d.r - 3; ++s) {
    DftDecomposition dec = dft_decomposition(d, s);
    for (int nu = 0; nu + s <= d.r - 3; ++nu) {
      if ((nu + s - (d.r - 1)) % 2 != 0) continue;
      for (const DftPiece& pc : dec.pieces) {
        if (!pc.piece.mean_value().is_zero())
          throw OracleDisagreement("restricted transform has non-zero mean value");
        LambdaValue lv;
        lv.nu = nu;
        lv.s = s;
        lv.l = pc.l;
        lv.value = l_value(pc.piece, static_cast<unsigned>(nu));
        lv.numeric = lv.value.to_complex();
        if (pc.piece.grade() == 1) lv.numeric /= boost::multiprecision::sqrt(Real(pc.piece.grade_base()));
        out.push_back(std::move(lv));
      }
    }
  }
  return out;
}

namespace {

// coefficient of k^e in H: exact parts keyed by the power m of 2P/(pi i)
using ExactPoly = std::map<std::pair<int, int>, Cyclotomic>;

int exact_degree(const ExactPoly& p) {
  int deg = -1;
  for (auto& [key, v] : p)
    if (!v.is_zero()) deg = std::max(deg, key.first);
  return deg;
}

void add_to(ExactPoly& p, const std::pair<int, int>& key, const Cyclotomic& v) {
  auto it = p.find(key);
  if (it == p.end())
    p.emplace(key, v);
  else
    it->second += v;
}

}  // namespace

AecResult aec_verify(const SeifertData& d, long k, const LaplaceConfig&) {
  if (k < 2) throw InvalidArgument("level k must be at least 2");
  AecResult out;
  out.k = k;
  const int r = d.r;
  const Real kr = Real(k);
  BigComplex E = aec_prefactor(d, BigComplex(Real(1) / kr));

  Real qerr = 0;
  BigComplex I = borel_integral(d, k, &qerr);
  BigComplex c0 = expipi(Rational(1, 4)) / boost::multiprecision::sqrt(Real(2 * d.P));
  if (r % 2 == 1) c0 = -c0;
  BigComplex pref = E * kr * c0 * boost::multiprecision::sqrt(kr);
  out.borel_term = pref * I;
  out.quadrature_error = qerr * abs(pref);

  std::map<std::vector<long>, FlatLabel> labels;
  for (auto& fl : enumerate_L(d)) labels.emplace(fl.l, fl);

  std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rational>> Q;
  for (int s = 0; s <= r - 3; ++s)
    for (int nu = 0; nu + s <= r - 3; ++nu)
      if ((nu + s - (r - 1)) % 2 == 0) Q[{nu, s}] = q_polynomial(d, nu, s);

  // (2P/(pi i))^m e^{i pi/4}
  auto qscale = [&](int m) {
    return pow(BigComplex(Real(2 * d.P) / pi_real()) * (-imag_unit()), m) * expipi(Rational(1, 4));
  };

  std::map<std::vector<long>, ExactPoly> exact;
  std::map<std::vector<long>, std::vector<BigComplex>> numeric;
  const std::vector<LambdaValue> lambdas = lambda_values(d);
  for (const LambdaValue& lv : lambdas) {
    std::vector<long> target = sigma1(d, lv.l);
    const FlatLabel& fl = labels.at(target);
    if (!fl.in_R) {
      ++out.vanishing_checked;
      if (!lv.value.is_zero())
        throw OracleDisagreement("Lambda does not vanish for a label outside R");
      continue;
    }
    auto& num = numeric[target];
    num.resize(static_cast<std::size_t>(r - 2));
    auto& ex = exact[target];
    for (auto& [key, q] : Q.at({lv.nu, lv.s})) {
      add_to(ex, key, lv.value * q);
      num[key.first] += qscale(key.second) * real_from(q) * lv.numeric;
    }
  }

  std::map<Rational, AecSTerm> by_cs;
  std::map<Rational, ExactPoly> exact_cs;
  BigComplex sum;
  const BigComplex k32 = BigComplex(kr * boost::multiprecision::sqrt(kr));
  for (const FlatLabel& fl : enumerate_R(d)) {
    AecTerm term;
    term.l = fl.l;
    term.cs = fl.cs;
    term.t = fl.t;
    term.H = numeric.count(fl.l) ? numeric[fl.l] : std::vector<BigComplex>(r - 2);
    term.degree = exact.count(fl.l) ? exact_degree(exact[fl.l]) : -1;
    if (term.degree > r - 3 - fl.t)
      throw DegreeViolation("deg H^l = " + std::to_string(term.degree) + " exceeds r - 3 - t_l = " +
                            std::to_string(r - 3 - fl.t));
    BigComplex Hk, kp(1);
    for (auto& c : term.H) {
      Hk += c * kp;
      kp *= kr;
    }
    term.contribution = expipi(Rational(2 * k) * fl.cs) * k32 * E * Hk;
    sum += term.contribution;
    auto& st = by_cs[fl.cs];
    st.cs = fl.cs;
    st.dim = std::max(st.dim, fl.dim);
    st.contribution += term.contribution;
    if (exact.count(fl.l))
      for (auto& [key, v] : exact[fl.l]) add_to(exact_cs[fl.cs], key, v);
    out.terms.push_back(std::move(term));
  }
  for (auto& [cs, st] : by_cs) {
    st.degree = exact_cs.count(cs) ? exact_degree(exact_cs[cs]) : -1;
    if (2 * st.degree > st.dim)
      throw DegreeViolation("deg H_S = " + std::to_string(st.degree) + " exceeds d_S / 2 = " +
                            std::to_string(st.dim / 2) + " at S = " + to_string(cs));
    out.by_cs.push_back(st);
  }

  // second route for the limits: L(-nu) of the full transform twisted by -k
  for (auto& [key, q] : Q) {
    if (q.empty()) continue;
    auto [nu, s] = key;
    PeriodicSequence tw = dft(ms_f_one(d, s)).twisted(Rational(-k));
    BigComplex direct = l_value(tw, static_cast<unsigned>(nu)).to_complex();
    if (tw.grade() == 1) direct /= boost::multiprecision::sqrt(Real(tw.grade_base()));
    BigComplex split;
    for (const LambdaValue& lv : lambdas)
      if (lv.nu == nu && lv.s == s) split += expipi(Rational(2 * k) * cs_action(d, sigma1(d, lv.l))) * lv.numeric;
    if (abs(direct - split) > pow(Real(2), -static_cast<int>(working_bits()) / 2))
      throw OracleDisagreement("limit at -k disagrees with the split over Hikami sets");
  }

  out.lhs = wrt_level_k(d, k, true).value;
  out.rhs = out.borel_term + sum;
  out.residual = abs(out.lhs - out.rhs);
  return out;
}

}  // namespace seifertq
