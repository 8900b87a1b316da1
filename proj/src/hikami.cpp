#include "seifertq/hikami.hpp"

#include <algorithm>
#include <set>

#include "seifertq/errors.hpp"

namespace seifertq {

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "none";
  }
}

PeriodicSequence::PeriodicSequence(long period, std::vector<Cyclotomic> values, int grade,
                                   std::optional<Parity> declared, long grade_base)
    : M_(period), v_(std::move(values)), grade_(grade), base_(grade_base > 0 ? grade_base : period) {
  if (M_ <= 0) throw InvalidArgument("period must be positive");
  if (static_cast<long>(v_.size()) != M_) throw InvalidArgument("need exactly one value per residue");
  if (grade_ < 0 || grade_ > 1) throw InvalidArgument("grade must be 0 or 1");
  common_order();
  if (declared && !has_parity(*declared))
    throw DomainError(std::string("sequence is not ") + seifertq::to_string(*declared));
}

PeriodicSequence PeriodicSequence::from_integers(long period, const std::vector<long>& values,
                                                 std::optional<Parity> declared) {
  std::vector<Cyclotomic> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(1, Rational(x));
  return PeriodicSequence(period, std::move(v), 0, declared);
}

PeriodicSequence PeriodicSequence::zero(long period) {
  return PeriodicSequence(period, std::vector<Cyclotomic>(static_cast<std::size_t>(period), Cyclotomic(1)));
}

void PeriodicSequence::common_order() {
  unsigned long n = 1;
  for (auto& c : v_) n = static_cast<unsigned long>(lcm_long(static_cast<long>(n), static_cast<long>(c.order())));
  for (auto& c : v_)
    if (c.order() != n) c = c.embed(n);
  order_ = n;
}

const Cyclotomic& PeriodicSequence::at(long n) const { return v_[static_cast<std::size_t>(mod_floor(n, M_))]; }

BigComplex PeriodicSequence::complex_at(long n) const {
  BigComplex z = at(n).to_complex();
  if (grade_ == 1) z /= boost::multiprecision::sqrt(Real(base_));
  return z;
}

bool PeriodicSequence::has_parity(Parity p) const {
  if (p == Parity::None) return true;
  for (long n = 0; n < M_; ++n) {
    const Cyclotomic& a = at(n);
    const Cyclotomic& b = at(-n);
    if (p == Parity::Even ? a != b : a != -b) return false;
  }
  return true;
}

Parity PeriodicSequence::parity() const {
  if (has_parity(Parity::Even)) return Parity::Even;
  if (has_parity(Parity::Odd)) return Parity::Odd;
  return Parity::None;
}

std::vector<long> PeriodicSequence::support() const {
  std::vector<long> s;
  for (long n = 0; n < M_; ++n)
    if (!v_[n].is_zero()) s.push_back(n);
  return s;
}

bool PeriodicSequence::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

Cyclotomic PeriodicSequence::mean_value() const {
  Cyclotomic s(order_);
  for (auto& c : v_) s += c;
  return s * Rational(1, M_);
}

PeriodicSequence PeriodicSequence::restricted(const std::vector<long>& residues) const {
  std::vector<Cyclotomic> v(static_cast<std::size_t>(M_), Cyclotomic(order_));
  for (long n : residues) v[mod_floor(n, M_)] = at(n);
  return PeriodicSequence(M_, std::move(v), grade_, std::nullopt, base_);
}

PeriodicSequence PeriodicSequence::folded() const {
  if (grade_ == 0) return *this;
  auto b = static_cast<unsigned long>(base_);
  Cyclotomic f = cyclotomic_sqrt(b, 4 * squarefree_part(b)) * Cyclotomic(1, Rational(1, base_));
  std::vector<Cyclotomic> v = v_;
  for (auto& c : v) c *= f;
  return PeriodicSequence(M_, std::move(v), 0);
}

PeriodicSequence PeriodicSequence::composed_shift(long c) const {
  std::vector<Cyclotomic> v;
  v.reserve(v_.size());
  for (long n = 0; n < M_; ++n) v.push_back(at(n + c));
  return PeriodicSequence(M_, std::move(v), grade_, std::nullopt, base_);
}

PeriodicSequence PeriodicSequence::with_period(long period) const {
  if (period % M_ != 0) throw InvalidArgument("new period must be a multiple of the old one");
  std::vector<Cyclotomic> v;
  v.reserve(static_cast<std::size_t>(period));
  for (long n = 0; n < period; ++n) v.push_back(at(n));
  return PeriodicSequence(period, std::move(v), grade_, std::nullopt, base_);
}

PeriodicSequence PeriodicSequence::twisted(const Rational& alpha) const {
  Rational a = alpha;
  a.canonicalize();
  long b = a.get_den().get_si();
  long num = mod_floor(Integer(a.get_num()), Integer(2 * b * M_)).get_si();
  long T = M_ * b;
  long N = 2 * b * M_;  // e^{i pi n^2 a / (b M)} = zeta_N^{n^2 a}
  unsigned long order = static_cast<unsigned long>(lcm_long(static_cast<long>(order_), N));
  std::vector<Cyclotomic> v;
  v.reserve(static_cast<std::size_t>(T));
  for (long n = 0; n < T; ++n) {
    const Cyclotomic& c = at(n);
    if (c.is_zero()) {
      v.emplace_back(order);
      continue;
    }
    long long e = (static_cast<long long>(n) * n % N) * num % N;
    CyclotomicAccumulator acc(order);
    acc.add(c, static_cast<long>(e) * static_cast<long>(order / N));
    v.push_back(acc.reduce());
  }
  return PeriodicSequence(T, std::move(v), grade_, std::nullopt, base_);
}

void PeriodicSequence::check_compatible(const PeriodicSequence& o) const {
  if (M_ != o.M_) throw InvalidArgument("periods differ");
  if (grade_ != o.grade_ || (grade_ == 1 && base_ != o.base_)) throw InvalidArgument("grades differ");
}

PeriodicSequence& PeriodicSequence::operator+=(const PeriodicSequence& o) {
  check_compatible(o);
  for (long n = 0; n < M_; ++n) v_[n] += o.v_[n];
  common_order();
  return *this;
}

PeriodicSequence& PeriodicSequence::operator-=(const PeriodicSequence& o) {
  check_compatible(o);
  for (long n = 0; n < M_; ++n) v_[n] -= o.v_[n];
  common_order();
  return *this;
}

PeriodicSequence& PeriodicSequence::operator*=(const Cyclotomic& c) {
  for (auto& x : v_) x *= c;
  common_order();
  return *this;
}

bool PeriodicSequence::operator==(const PeriodicSequence& o) const {
  if (M_ != o.M_ || grade_ != o.grade_ || (grade_ == 1 && base_ != o.base_)) return false;
  for (long n = 0; n < M_; ++n)
    if (v_[n] != o.v_[n]) return false;
  return true;
}

PeriodicSequence dft(const PeriodicSequence& f_in) {
  const PeriodicSequence f = (f_in.grade() == 1 && f_in.grade_base() != f_in.period()) ? f_in.folded() : f_in;
  const long M = f.period();
  const unsigned long N = static_cast<unsigned long>(lcm_long(static_cast<long>(f.field_order()), M));
  const long step = static_cast<long>(N) / M;
  std::vector<std::pair<long, Cyclotomic>> supp;
  for (long l : f.support()) supp.emplace_back(l, f.at(l).embed(N));
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(M));
  for (long n = 0; n < M; ++n) {
    CyclotomicAccumulator acc(N);
    for (auto& [l, c] : supp) acc.add(c, -mod_floor(l * n, M) * step);
    out.push_back(acc.reduce());
  }
  if (f.grade() == 0) return PeriodicSequence(M, std::move(out), 1);
  for (auto& c : out) c *= Rational(1, M);
  return PeriodicSequence(M, std::move(out), 0);
}

Cyclotomic l_value(const PeriodicSequence& f, unsigned n) {
  const long M = f.period();
  BernoulliPolynomial B = bernoulli_polynomial(n + 1);
  CyclotomicAccumulator acc(f.field_order());
  for (long m = 1; m <= M; ++m) {
    const Cyclotomic& c = f.at(m);
    if (c.is_zero()) continue;
    acc.add(c, 0, B(Rational(m, M)));
  }
  Integer Mn;
  mpz_pow_ui(Mn.get_mpz_t(), Integer(M).get_mpz_t(), n);
  return acc.reduce() * Rational(-Mn, Integer(n + 1));
}

std::vector<Cyclotomic> moment_sums(const PeriodicSequence& f, unsigned a_max) {
  const long M = f.period();
  std::vector<CyclotomicAccumulator> acc(a_max + 1, CyclotomicAccumulator(f.field_order()));
  for (long m = 1; m <= M; ++m) {
    const Cyclotomic& c = f.at(m);
    if (c.is_zero()) continue;
    Integer w = 1;
    for (unsigned a = 0; a <= a_max; ++a, w *= m) acc[a].add(c, 0, Rational(w));
  }
  std::vector<Cyclotomic> out;
  for (auto& a : acc) out.push_back(a.reduce());
  return out;
}

HikamiTuple hikami_tuple(const SeifertData& d, const std::vector<long>& h) {
  if (static_cast<int>(h.size()) != d.r) throw InvalidArgument("tuple length differs from the number of fibers");
  HikamiTuple t;
  t.h = h;
  int nonintegral = 0;
  for (int j = 0; j < d.r; ++j) {
    if (h[j] < 0 || h[j] > d.p[j]) throw InvalidArgument("need 0 <= h_j <= p_j");
    if (h[j] % d.p[j] == 0)
      t.J_h.push_back(j);
    else
      ++nonintegral;
  }
  if (nonintegral < 3) throw InvalidArgument("need at least three h_j/p_j outside Z");
  t.t_h = static_cast<int>(t.J_h.size());
  return t;
}

std::vector<HikamiResidue> hikami_residues(const SeifertData& d, const HikamiTuple& h) {
  const long P2 = 2 * d.P;
  std::vector<bool> in_J(d.r, false);
  for (int j : h.J_h) in_J[j] = true;
  std::map<long, HikamiResidue> by_res;
  for (unsigned mask = 0; mask < (1u << d.r); ++mask) {
    std::vector<int> eps(d.r);
    long nstar = 0;
    for (int j = 0; j < d.r; ++j) {
      eps[j] = (mask >> j) & 1 ? -1 : 1;
      nstar += eps[j] * h.h[j] * d.p_hat[j];
    }
    long res = mod_floor(d.P + nstar, P2);
    for (int j : h.J_h) eps[j] = 1;
    auto it = by_res.find(res);
    if (it == by_res.end()) {
      HikamiResidue hr;
      hr.residue = res;
      hr.eps = eps;
      hr.preimages = 1;
      hr.n_star = 0;
      for (int j = 0; j < d.r; ++j) hr.n_star += eps[j] * h.h[j] * d.p_hat[j];
      by_res.emplace(res, hr);
    } else {
      if (it->second.eps != eps) throw OracleDisagreement("residue determines signs off J_h only up to ambiguity");
      ++it->second.preimages;
    }
  }
  std::vector<HikamiResidue> out;
  for (auto& [res, hr] : by_res) {
    if (hr.preimages != (1 << h.t_h)) throw OracleDisagreement("residue without 2^t_h preimages");
    if (res % d.P == 0) throw OracleDisagreement("a multiple of P lies in a Hikami set");
    out.push_back(hr);
  }
  return out;
}

std::vector<long> hikami_set(const SeifertData& d, const HikamiTuple& h) {
  std::vector<long> s;
  for (auto& hr : hikami_residues(d, h)) s.push_back(hr.residue);
  return s;
}

PeriodicSequence s_hikami(const SeifertData& d, int s, const HikamiTuple& h) {
  if (h.t_h != 0) throw InvalidArgument("s-Hikami functions need t_h = 0");
  if (s < 0) throw InvalidArgument("s must be non-negative");
  std::vector<Cyclotomic> v(static_cast<std::size_t>(2 * d.P), Cyclotomic(1));
  for (auto& hr : hikami_residues(d, h)) {
    int sign = 1;
    for (int e : hr.eps) sign *= e;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), Integer(hr.n_star).get_mpz_t(), static_cast<unsigned long>(s));
    v[hr.residue] = Cyclotomic(1, Rational(-sign * pw));
  }
  return PeriodicSequence(2 * d.P, std::move(v), 0, (d.r - s) % 2 == 0 ? Parity::Even : Parity::Odd);
}

PeriodicSequence gen_hikami(const SeifertData& d, const HikamiTuple& h, const std::vector<int>& J) {
  for (int j : J) {
    if (j < 0 || j >= d.r) throw InvalidArgument("index out of range in J");
    if (std::find(h.J_h.begin(), h.J_h.end(), j) != h.J_h.end())
      throw InvalidArgument("J must be disjoint from J_h");
  }
  std::vector<Cyclotomic> v(static_cast<std::size_t>(2 * d.P), Cyclotomic(1));
  for (auto& hr : hikami_residues(d, h)) {
    int sign = 1;
    for (int j : J) sign *= hr.eps[j];
    v[hr.residue] = Cyclotomic(1, Rational(sign));
  }
  return PeriodicSequence(2 * d.P, std::move(v), 0, J.size() % 2 == 0 ? Parity::Even : Parity::Odd);
}

namespace {

using Laurent = std::map<long, Integer>;

Laurent laurent_mul_binomial(const Laurent& a, long e, int sign) {
  // a * (z^e + sign z^{-e})
  Laurent out;
  for (auto& [k, c] : a) {
    out[k + e] += c;
    out[k - e] += sign * c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

bool s_hikami_generating_identity(const SeifertData& d, int s, const HikamiTuple& h) {
  PeriodicSequence f = s_hikami(d, s, h);
  Laurent lhs;
  for (unsigned mask = 0; mask < (1u << d.r); ++mask) {
    long n = d.P;
    for (int j = 0; j < d.r; ++j) n += ((mask >> j) & 1 ? -1 : 1) * h.h[j] * d.p_hat[j];
    lhs[n] += f.at(n).to_rational().get_num();
  }
  Laurent rhs{{0, Integer(1)}};
  for (int j = 0; j < d.r; ++j) rhs = laurent_mul_binomial(rhs, h.h[j] * d.p_hat[j], -1);
  Laurent shifted;
  for (auto& [k, c] : rhs) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), Integer(k).get_mpz_t(), static_cast<unsigned long>(s));
    shifted[k + d.P] = -c * pw;
  }
  auto clean = [](Laurent& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  clean(lhs);
  clean(shifted);
  return lhs == shifted;
}

bool gen_hikami_generating_identity(const SeifertData& d, const HikamiTuple& h, const std::vector<int>& J) {
  PeriodicSequence g = gen_hikami(d, h, J);
  const long P2 = 2 * d.P;
  std::vector<Integer> rhs(static_cast<std::size_t>(P2), 0);
  Laurent poly{{0, Integer(1)}};
  for (int j = 0; j < d.r; ++j) {
    bool inJ = std::find(J.begin(), J.end(), j) != J.end();
    poly = laurent_mul_binomial(poly, h.h[j] * d.p_hat[j], inJ ? -1 : 1);
  }
  for (auto& [k, c] : poly) rhs[mod_floor(k + d.P, P2)] += c;
  for (long n = 0; n < P2; ++n)
    if (Rational(rhs[n]) != Rational(1 << h.t_h) * g.at(n).to_rational()) return false;
  return true;
}

PeriodicSequence tau_shift(const SeifertData& d, const PeriodicSequence& f) {
  return d.r % 2 == 1 ? f : f.composed_shift(-d.P);
}

PeriodicSequence ms_f_one(const SeifertData& d, int s) {
  return tau_shift(d, s_hikami(d, s, hikami_tuple(d, std::vector<long>(d.r, 1))));
}

std::map<std::vector<int>, Cyclotomic> hikami_coefficients(const SeifertData& d, const HikamiTuple& h,
                                                           const PeriodicSequence& f) {
  auto residues = hikami_residues(d, h);
  std::vector<int> free;
  for (int j = 0; j < d.r; ++j)
    if (std::find(h.J_h.begin(), h.J_h.end(), j) == h.J_h.end()) free.push_back(j);
  const Rational norm(1, static_cast<long>(residues.size()));
  std::map<std::vector<int>, Cyclotomic> out;
  std::vector<Cyclotomic> rebuilt_vals(static_cast<std::size_t>(f.period()), Cyclotomic(f.field_order()));
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1) J.push_back(free[i]);
    Cyclotomic c(f.field_order());
    for (auto& hr : residues) {
      int sign = 1;
      for (int j : J) sign *= hr.eps[j];
      if (sign > 0)
        c += f.at(hr.residue);
      else
        c -= f.at(hr.residue);
    }
    c *= norm;
    if (c.is_zero()) continue;
    for (auto& hr : residues) {
      int sign = 1;
      for (int j : J) sign *= hr.eps[j];
      rebuilt_vals[hr.residue] += sign > 0 ? c : -c;
    }
    out.emplace(J, c);
  }
  for (auto& hr : residues)
    if (rebuilt_vals[hr.residue] != f.at(hr.residue))
      throw OracleDisagreement("character expansion does not reproduce the restriction");
  return out;
}

bool admissible_J(const SeifertData& d, int s, const std::vector<int>& J, const HikamiTuple& h) {
  int n = static_cast<int>(J.size());
  if (n < d.r - s || (n - (d.r - s)) % 2 != 0) return false;
  for (int j : J)
    if (std::find(h.J_h.begin(), h.J_h.end(), j) != h.J_h.end()) return false;
  return true;
}

namespace {

// Splits a 2P-periodic sequence over the Hikami sets of L; returns residues
// left over.
std::vector<long> split_over_L(const SeifertData& d, const PeriodicSequence& f, int s, bool require_admissible,
                               std::vector<DftPiece>* pieces, int t_max) {
  std::vector<bool> covered(static_cast<std::size_t>(2 * d.P), false);
  for (auto& lab : enumerate_L(d)) {
    if (lab.t > t_max) continue;
    HikamiTuple h = hikami_tuple(d, lab.l);
    auto set = hikami_set(d, h);
    for (long n : set) {
      if (covered[n]) throw OracleDisagreement("Hikami sets of L overlap");
      covered[n] = true;
    }
    PeriodicSequence piece = f.restricted(set);
    auto coeffs = hikami_coefficients(d, h, piece);
    if (require_admissible)
      for (auto& [J, c] : coeffs)
        if (!admissible_J(d, s, J, h)) throw OracleDisagreement("transform leaves the span V_s");
    if (!piece.mean_value().is_zero()) throw OracleDisagreement("restricted transform has nonzero mean");
    if (pieces) pieces->push_back({lab.l, std::move(piece), std::move(coeffs)});
  }
  std::vector<long> outside;
  for (long n = 0; n < 2 * d.P; ++n)
    if (!covered[n]) outside.push_back(n);
  return outside;
}

}  // namespace

DftDecomposition dft_decomposition(const SeifertData& d, int s) {
  if (s < 0 || s > d.r - 3) throw InvalidArgument("need 0 <= s <= r - 3");
  DftDecomposition out;
  out.s = s;
  out.transform = dft(ms_f_one(d, s));
  out.outside = split_over_L(d, out.transform, s, true, &out.pieces, s);
  for (long n : out.outside)
    if (!out.transform.at(n).is_zero()) throw OracleDisagreement("transform does not vanish off the Hikami sets");
  PeriodicSequence sum(2 * d.P, std::vector<Cyclotomic>(2 * d.P, Cyclotomic(1)), 1);
  for (auto& p : out.pieces) sum += p.piece;
  if (sum != out.transform) throw OracleDisagreement("pieces do not add up to the transform");
  return out;
}

int check_dft_closure(const SeifertData& d, int s) {
  int count = 0;
  for (auto& lab : enumerate_L(d)) {
    HikamiTuple h = hikami_tuple(d, lab.l);
    std::vector<int> free;
    for (int j = 0; j < d.r; ++j)
      if (std::find(h.J_h.begin(), h.J_h.end(), j) == h.J_h.end()) free.push_back(j);
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
      std::vector<int> J;
      for (std::size_t i = 0; i < free.size(); ++i)
        if ((mask >> i) & 1) J.push_back(free[i]);
      if (!admissible_J(d, s, J, h)) continue;
      PeriodicSequence gh = dft(gen_hikami(d, h, J));
      auto outside = split_over_L(d, gh, s, true, nullptr, d.r);
      for (long n : outside)
        if (!gh.at(n).is_zero()) throw OracleDisagreement("generator transform leaves the Hikami sets");
      ++count;
    }
  }
  return count;
}

}  // namespace seifertq
