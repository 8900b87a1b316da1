#include "seifertq/theta.hpp"

#include "seifertq/errors.hpp"

namespace seifertq {

void PartialThetaSpec::validate() const {
  if (j < 0) throw InvalidArgument("j must be non-negative");
  if (M() <= 0 || M() % 2 != 0) throw InvalidArgument("period M must be positive and even");
  if (parity_flag && !f.has_parity(j % 2 == 0 ? Parity::Odd : Parity::Even))
    throw DomainError("parity condition fails: need f odd for even j and f even for odd j");
}

ThetaValue theta_eval(const PartialThetaSpec& spec, const BigComplex& tau) {
  spec.validate();
  if (tau.im <= 0) throw DomainError("theta series needs Im tau > 0");
  const long M = spec.M();
  const int j = spec.j;
  const unsigned bits = working_bits();
  ThetaValue out;
  {
    PrecisionScope guard(bits + 24);
    BigComplex t(Real(tau.re), Real(tau.im));
    std::vector<BigComplex> fv;
    Real fmax = 0;
    for (long n = 0; n < M; ++n) {
      fv.push_back(spec.f.complex_at(n));
      fmax = std::max(fmax, abs(fv.back()));
    }
    Real eps = pow(Real(2), -static_cast<int>(bits) - 8);
    BigComplex q = exp(imag_unit() * pi_real() * t / Real(M));
    BigComplex q2 = q * q;
    BigComplex w = q;  // q^{n^2}
    BigComplex u = q * q2;  // q^{2n+1}
    Real decay = pi_real() * t.im / Real(M);
    BigComplex sum;
    for (long n = 1;; ++n) {
      if (!fv[n % M].re.is_zero() || !fv[n % M].im.is_zero()) {
        Real nj = pow(Real(n), j);
        sum += fv[n % M] * w * nj;
      }
      // bound for the terms m > n: ratio of consecutive bounds at m = n + 1
      Real nn = Real(n + 1);
      Real bound_next = fmax * pow(nn, j) * exp(-decay * nn * nn);
      Real ratio = pow((nn + 1) / nn, j) * exp(-decay * (2 * nn + 1));
      if (ratio < Real(0.5) && bound_next < eps * std::max(Real(1), abs(sum))) {
        out.tail_bound = 2 * bound_next;
        out.terms = n;
        break;
      }
      w *= u;
      u *= q2;
    }
    out.value = sum;
  }
  out.value = BigComplex(Real(out.value.re), Real(out.value.im));
  return out;
}

BigComplex FormalSeries::coefficient(std::size_t p) const {
  BigComplex c = coeffs.at(p).to_complex() * pow(pi_real(), static_cast<int>(p));
  if (grade == 1) c /= boost::multiprecision::sqrt(Real(grade_base));
  return c;
}

BigComplex FormalSeries::partial_sum(const BigComplex& t, std::size_t n) const {
  BigComplex s, tp(1);
  for (std::size_t p = 0; p < n && p < coeffs.size(); ++p) {
    s += coefficient(p) * tp;
    tp *= t;
  }
  return s;
}

FormalSeries theta_asymp(const PartialThetaSpec& spec, const Rational& alpha, std::size_t n_terms) {
  spec.validate();
  const long M = spec.M();
  PeriodicSequence fa = spec.f.twisted(alpha);  // f_{alpha/M}
  Cyclotomic mean = fa.mean_value();
  if (!mean.is_zero())
    throw LimitDoesNotExist("mean value of the twisted sequence is " + mean.to_json_string() + ", not zero");
  FormalSeries s;
  s.alpha = alpha;
  s.grade = fa.grade();
  s.grade_base = fa.grade_base();
  // (i / M)^p / p!
  unsigned long order = static_cast<unsigned long>(lcm_long(static_cast<long>(fa.field_order()), 4));
  Cyclotomic factor(order, Rational(1));
  Cyclotomic i_over_M = Cyclotomic::zeta(4, 1, Rational(1, M));
  for (std::size_t p = 0; p < n_terms; ++p) {
    if (p > 0) factor = factor * i_over_M * Rational(1, static_cast<long>(p));
    s.coeffs.push_back(l_value(fa, static_cast<unsigned>(2 * p + spec.j)) * factor);
  }
  return s;
}

}  // namespace seifertq
