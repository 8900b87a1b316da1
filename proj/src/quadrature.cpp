#include "seifertq/quadrature.hpp"

#include "seifertq/errors.hpp"
#include <algorithm>

namespace seifertq {

namespace {

bool finite(const BigComplex& z) {
  return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im);
}

// nodes reach within 2^{-4 bits} of the endpoints, so integrable endpoint
// singularities like x^{-1/2} lose less than 2^{-bits}
Real tail_parameter() {
  Real b = 4 * Real(working_bits()) * boost::multiprecision::log(Real(2));
  return boost::multiprecision::asinh(b / pi_real() + 2);
}

}  // namespace

QuadResult tanh_sinh(const RealToComplex& f, const Real& a, const Real& b, const Real& tol, int max_levels) {
  QuadResult res;
  Real hw = (b - a) / 2;
  Real t_max = tail_parameter();
  Real half_pi = pi_real() / 2;

  auto node_pair = [&](const Real& t) {
    Real u = half_pi * sinh(t);
    Real d = 2 / (1 + exp(2 * u));  // 1 - tanh u without cancellation
    Real w = hw * half_pi * cosh(t) * d * (2 - d);
    BigComplex s = f(b - hw * d);
    res.evaluations++;
    if (t != 0) {
      s += f(a + hw * d);
      res.evaluations++;
    }
    if (!finite(s)) throw QuadratureFailure("non-finite integrand in tanh_sinh");
    return s * w;
  };

  BigComplex sum;
  for (long j = 0; Real(j) <= t_max; ++j) sum += node_pair(Real(j));
  BigComplex prev = sum;
  Real h = 1;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    for (Real t = h; t <= t_max; t += 2 * h) sum += node_pair(t);
    BigComplex cur = sum * h;
    res.error = abs(cur - prev);
    prev = cur;
    res.levels = level;
    if (level >= 3 && res.error <= tol) {
      res.converged = true;
      break;
    }
  }
  res.value = prev;
  return res;
}

QuadResult exp_sinh(const RealToComplex& f, const Real& a, const Real& tol, int max_levels) {
  QuadResult res;
  // left nodes a + e^{pi/2 sinh t} must reach 2^{-bits} since f need not vanish at a
  Real t_min = -boost::multiprecision::asinh(2 * Real(working_bits() + 16) * boost::multiprecision::log(Real(2)) / pi_real());
  Real half_pi = pi_real() / 2;
  Real eps = pow(Real(2), -static_cast<int>(working_bits()) - 8);

  auto term = [&](const Real& t) {
    Real e = exp(half_pi * sinh(t));
    BigComplex v = f(a + e);
    res.evaluations++;
    if (!finite(v)) throw QuadratureFailure("non-finite integrand in exp_sinh");
    return v * (half_pi * cosh(t) * e);
  };

  // right end: first of four consecutive negligible terms on a 1/8 grid
  Real t_right = 8;
  {
    Real big = 0;
    int small = 0;
    for (Real t = t_min; t < 8; t += Real(1) / 8) {
      Real av = abs(term(t));
      big = std::max(big, av);
      if (t > 0 && av <= eps * big) {
        if (++small == 1) t_right = t;
        if (small >= 4) break;
      } else {
        small = 0;
        t_right = 8;
      }
    }
  }

  BigComplex sum;
  for (Real t = 0; t <= t_right; t += 1) sum += term(t);
  for (Real t = -1; t >= t_min; t -= 1) sum += term(t);
  BigComplex prev = sum;
  Real h = 1;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    for (Real t = h; t <= t_right; t += 2 * h) sum += term(t);
    for (Real t = -h; t >= t_min; t -= 2 * h) sum += term(t);
    BigComplex cur = sum * h;
    res.error = abs(cur - prev);
    prev = cur;
    res.levels = level;
    if (level >= 3 && res.error <= tol) {
      res.converged = true;
      break;
    }
  }
  res.value = prev;
  return res;
}

QuadResult circle_residue(const ComplexToComplex& f, const BigComplex& center, const Real& radius,
                          const Real& tol, unsigned start_nodes, unsigned max_nodes) {
  QuadResult res;
  Real two_pi = 2 * pi_real();
  auto sample = [&](unsigned j, unsigned n) {
    BigComplex e = polar(radius, two_pi * Real(j) / Real(n));
    res.evaluations++;
    return f(center + e) * e;
  };
  unsigned n = start_nodes;
  BigComplex sum;
  for (unsigned j = 0; j < n; ++j) sum += sample(j, n);
  BigComplex prev = sum / Real(n);
  while (2 * n <= max_nodes) {
    for (unsigned j = 1; j < 2 * n; j += 2) sum += sample(j, 2 * n);
    n *= 2;
    BigComplex cur = sum / Real(n);
    res.error = abs(cur - prev);
    prev = cur;
    res.levels++;
    if (res.error <= tol) {
      res.converged = true;
      break;
    }
  }
  res.value = prev;
  return res;
}

}  // namespace seifertq
