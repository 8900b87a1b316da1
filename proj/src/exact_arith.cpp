#include "seifertq/exact_arith.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "seifertq/errors.hpp"

namespace seifertq {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long mod_floor(long a, long b) {
  if (b < 0) b = -b;
  long r = a % b;
  return r < 0 ? r + b : r;
}

Rational frac_part(const Rational& q) {
  Integer f = floor_div(q.get_num(), q.get_den());
  return q - Rational(f);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long squarefree_part(unsigned long n) {
  unsigned long f = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) f *= p;
  }
  return f * n;
}

Rational dedekind_sum(const Integer& a, const Integer& b) {
  if (b <= 0) throw DomainError("dedekind_sum needs b >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw NotCoprime("dedekind_sum(" + a.get_str() + ", " + b.get_str() + ")");
  // ((k/b)) ((ka/b)) = (2k - b)(2r - b) / (4 b^2) with r = ka mod b, never 0 here
  Integer am = mod_floor(a, b), total = 0, r = 0;
  for (Integer k = 1; k < b; ++k) {
    r += am;
    if (r >= b) r -= b;
    total += (2 * k - b) * (2 * r - b);
  }
  return make_rational(total, 4 * b * b);
}

int kronecker_symbol(const Integer& a, const Integer& n) {
  Integer m = abs(n);
  return mpz_kronecker(a.get_mpz_t(), m.get_mpz_t());
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational bernoulli_number(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[k];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

Rational BernoulliPolynomial::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  v.canonicalize();
  return v;
}

BernoulliPolynomial bernoulli_polynomial(unsigned n) {
  BernoulliPolynomial b;
  b.coeffs.resize(n + 1);
  for (unsigned k = 0; k <= n; ++k) b.coeffs[k] = Rational(binomial(n, k)) * bernoulli_number(n - k);
  return b;
}

std::vector<Rational> rising_factorial_coeffs(int n) {
  if (n <= 0) throw DomainError("rising_factorial_coeffs needs n >= 1");
  std::vector<Rational> c{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * m;
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

namespace {

std::vector<long> poly_exact_div(std::vector<long> a, const std::vector<long>& b) {
  // b monic with constant term +-1
  std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// Reduce an integer polynomial in place modulo the monic Phi_n; result has
// length phi(n).
void reduce_mod_phi(std::vector<Integer>& a, unsigned long n) {
  const auto& phi = cyclotomic_polynomial(n);
  std::size_t d = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    if (a[i] == 0) continue;
    Integer c = a[i];
    for (std::size_t j = 0; j < d; ++j) {
      long pj = phi[j];
      if (pj > 0)
        mpz_submul_ui(a[i - d + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(pj));
      else if (pj < 0)
        mpz_addmul_ui(a[i - d + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-pj));
    }
    a[i] = 0;
  }
  a.resize(d);
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned long order) : n_(order), num_(euler_phi(order)), den_(1) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(unsigned long order, const Rational& c) : Cyclotomic(order) {
  num_[0] = c.get_num();
  den_ = c.get_den();
}

Cyclotomic Cyclotomic::zeta(unsigned long order, long exponent, const Rational& c) {
  CyclotomicAccumulator acc(order);
  acc.add(exponent, c);
  return acc.reduce();
}

Cyclotomic Cyclotomic::from_coeffs(unsigned long order, const std::vector<Rational>& coeffs) {
  CyclotomicAccumulator acc(order);
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc.add(static_cast<long>(i), coeffs[i]);
  return acc.reduce();
}

Rational Cyclotomic::coeff(std::size_t i) const { return make_rational(num_.at(i), den_); }

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.push_back(make_rational(c, den_));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return coeff(0);
}

void Cyclotomic::normalize() {
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (is_zero()) den_ = 1;
}

void Cyclotomic::align(Cyclotomic& o) {
  if (o.n_ == n_) return;
  unsigned long l = static_cast<unsigned long>(lcm_long(static_cast<long>(n_), static_cast<long>(o.n_)));
  if (l != n_) *this = embed(l);
  if (l != o.n_) o = o.embed(l);
}

Cyclotomic Cyclotomic::embed(unsigned long order) const {
  if (order % n_ != 0) throw DomainError("embed: target order is not a multiple");
  if (order == n_) return *this;
  unsigned long step = order / n_;
  std::vector<Integer> a(order, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) a[i * step] = num_[i];
  reduce_mod_phi(a, order);
  Cyclotomic r(order);
  r.num_ = std::move(a);
  r.den_ = den_;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::galois(long u) const {
  long n = static_cast<long>(n_);
  if (gcd_long(mod_floor(u, n), n) != 1) throw NotCoprime("galois exponent " + std::to_string(u) + " not coprime to order " + std::to_string(n));
  long um = mod_floor(u, n);
  std::vector<Integer> a(n_, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    a[static_cast<std::size_t>((static_cast<long long>(um) * static_cast<long long>(i)) % n)] += num_[i];
  }
  reduce_mod_phi(a, n_);
  Cyclotomic r(n_);
  r.num_ = std::move(a);
  r.den_ = den_;
  r.normalize();
  return r;
}

Cyclotomic galois_apply(long u, const Cyclotomic& x) { return x.galois(u); }

BigComplex Cyclotomic::to_complex() const {
  unsigned bits = working_bits();
  BigComplex sum;
  {
    PrecisionScope guard(bits + 32);
    Real two_pi_over_n = 2 * pi_real() / Real(static_cast<unsigned long>(n_));
    BigComplex s;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      Real c = real_from(num_[i]);
      Real t = two_pi_over_n * Real(static_cast<unsigned long>(i));
      s += BigComplex(c * cos(t), c * sin(t));
    }
    Real d = real_from(den_);
    sum = BigComplex(s.re / d, s.im / d);
  }
  return BigComplex(Real(sum.re), Real(sum.im));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  Cyclotomic o = other;
  align(o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  Cyclotomic o = other;
  align(o);
  std::size_t d = num_.size();
  std::vector<Integer> a(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (o.num_[j] != 0) mpz_addmul(a[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  reduce_mod_phi(a, n_);
  num_ = std::move(a);
  den_ *= o.den_;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  Cyclotomic a = *this, b = other;
  a.align(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string Cyclotomic::to_json_string() const {
  std::ostringstream os;
  os << "{\"order\":" << n_ << ",\"coeffs\":[";
  for (std::size_t i = 0; i < num_.size(); ++i) os << (i ? "," : "") << '"' << to_string(coeff(i)) << '"';
  os << "]}";
  return os.str();
}

CyclotomicAccumulator::CyclotomicAccumulator(unsigned long order) : n_(order), acc_(order, Rational(0)) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
}

void CyclotomicAccumulator::add(long exponent, const Rational& c) {
  if (c == 0) return;
  acc_[static_cast<std::size_t>(mod_floor(exponent, static_cast<long>(n_)))] += c;
}

void CyclotomicAccumulator::add(const Cyclotomic& x, long shift, const Rational& scale) {
  Cyclotomic y = x;
  if (n_ % y.n_ != 0) throw DomainError("accumulator order is not a multiple of the summand order");
  if (y.n_ != n_) y = y.embed(n_);
  for (std::size_t i = 0; i < y.num_.size(); ++i)
    if (y.num_[i] != 0) add(static_cast<long>(i) + shift, make_rational(y.num_[i], y.den_) * scale);
}

Cyclotomic CyclotomicAccumulator::reduce() const {
  Integer den = 1;
  for (const auto& c : acc_)
    if (c != 0) den = lcm(den, c.get_den());
  std::vector<Integer> a(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (acc_[i] == 0) continue;
    Integer f;
    mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), acc_[i].get_den_mpz_t());
    a[i] = acc_[i].get_num() * f;
  }
  reduce_mod_phi(a, n_);
  Cyclotomic r(n_);
  r.num_ = std::move(a);
  r.den_ = den;
  r.normalize();
  return r;
}

Cyclotomic cyclotomic_sqrt(unsigned long m, unsigned long order) {
  if (m == 0) return Cyclotomic(order);
  unsigned long f = squarefree_part(m);
  unsigned long s = 1;
  while (s * s * f < m) ++s;
  if (order % (4 * f) != 0)
    throw DomainError("sqrt(" + std::to_string(m) + ") needs order divisible by " + std::to_string(4 * f));
  unsigned long step = order / (4 * f);
  CyclotomicAccumulator g(order);
  for (unsigned long n = 0; n < 4 * f; ++n) g.add(static_cast<long>(((n * n) % (4 * f)) * step), 1);
  // sqrt(f) = G(4f) (1 - i) / 4
  CyclotomicAccumulator w(order);
  w.add(0, Rational(s, 4));
  w.add(static_cast<long>(order / 4), Rational(-static_cast<long>(s), 4));
  return g.reduce() * w.reduce();
}

void poly_trim(RationalPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return c;
}

RationalPoly poly_shift_arg(const RationalPoly& p, const Rational& c) {
  RationalPoly out(p.size(), Rational(0));
  for (std::size_t n = 0; n < p.size(); ++n) {
    Rational pw = 1;  // c^(n-k)
    for (std::size_t k = n + 1; k-- > 0;) {
      out[k] += p[n] * Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * pw;
      pw *= c;
    }
  }
  return out;
}

}  // namespace seifertq
