#include "seifertq/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seifertq/errors.hpp"

namespace seifertq {

std::string SeifertData::label() const {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < r; ++j) os << (j ? "," : "") << p[j];
  os << ")";
  return os.str();
}

namespace {

long product(const std::vector<long>& p) {
  Integer P = 1;
  for (long x : p) P *= x;
  if (!P.fits_slong_p()) throw DomainError("product of multiplicities overflows");
  return P.get_si();
}

void check_multiplicities(const std::vector<long>& p) {
  if (p.size() < 3) throw TooFewFibers("need at least three exceptional fibers, got " + std::to_string(p.size()));
  for (long x : p)
    if (x < 2) throw InvalidArgument("multiplicities must be >= 2, got " + std::to_string(x));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (std::gcd(p[i], p[j]) != 1)
        throw NonCoprime("p_" + std::to_string(i + 1) + " = " + std::to_string(p[i]) + " and p_" +
                         std::to_string(j + 1) + " = " + std::to_string(p[j]) + " share a factor");
}

long inverse_mod(long a, long m) {
  Integer inv, A = a, M = m;
  if (mpz_invert(inv.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()) == 0) throw NonCoprime("no inverse");
  return inv.get_si();
}

// canonical order: the even entry (else the first) leads, the rest ascending
std::vector<int> canonical_order(const std::vector<long>& p) {
  std::vector<int> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t j = 1; j < p.size(); ++j)
    if (p[j] % 2 == 0) std::swap(idx[0], idx[j]);
  std::sort(idx.begin() + 1, idx.end(), [&](int a, int b) { return p[a] < p[b]; });
  return idx;
}

std::vector<long> solve_q_canonical(const std::vector<long>& p) {
  const int r = static_cast<int>(p.size());
  const long P = product(p);
  std::vector<long> base(r), step(r);
  for (int j = 0; j < r; ++j) {
    long ph = P / p[j];
    long a = mod_floor(inverse_mod(mod_floor(ph, p[j]), p[j]), p[j]);
    bool want_odd = (j == 0);
    if (p[j] % 2 == 0) {
      step[j] = p[j];  // residue a is forced odd here
    } else {
      step[j] = 2 * p[j];
      if ((mod_floor(a, 2) == 1) != want_odd) a += p[j];
    }
    // representative of smallest absolute value
    a = mod_floor(a, step[j]);
    if (2 * a > step[j]) a -= step[j];
    base[j] = a;
  }
  // sum_j q_j p_hat_j = 1 with q_j = base_j + step_j t_j; step_j p_hat_j is P or 2P
  Integer target = 1;
  for (int j = 0; j < r; ++j) target -= Integer(base[j]) * (P / p[j]);
  const long unit_last = step[r - 1] * (P / p[r - 1]);
  const int w = 3;
  std::vector<long> best, t(r - 1, -w), q(r);
  Integer best_cost = -1;
  while (true) {
    Integer rest = target;
    for (int j = 0; j + 1 < r; ++j) rest -= Integer(t[j]) * step[j] * (P / p[j]);
    if (mod_floor(rest, Integer(unit_last)) == 0) {
      Integer tl = rest / unit_last;
      Integer cost = 0;
      for (int j = 0; j + 1 < r; ++j) {
        q[j] = base[j] + step[j] * t[j];
        cost += std::labs(q[j]);
      }
      Integer ql = base[r - 1] + step[r - 1] * tl;
      if (ql.fits_slong_p()) {
        q[r - 1] = ql.get_si();
        cost += abs(ql);
        if (best_cost < 0 || cost < best_cost || (cost == best_cost && q < best)) {
          best_cost = cost;
          best = q;
        }
      }
    }
    int k = 0;
    while (k < r - 1 && t[k] == w) t[k++] = -w;
    if (k == r - 1) break;
    ++t[k];
  }
  if (best.empty()) throw SeifertRelationViolated("no normalized q found in the search window");
  return best;
}

}  // namespace

std::vector<long> solve_q(const std::vector<long>& p) {
  check_multiplicities(p);
  if (std::count_if(p.begin(), p.end(), [](long x) { return x % 2 == 0; }) > 1)
    throw ParityViolation("more than one even multiplicity");
  auto order = canonical_order(p);
  std::vector<long> pc(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) pc[j] = p[order[j]];
  auto qc = solve_q_canonical(pc);
  std::vector<long> q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) q[order[j]] = qc[j];
  return q;
}

long n_star(const SeifertData& d) {
  Integer lhs = -Integer(d.r - 1) * (d.r - 2) / 2 * d.P;
  for (long ph : d.p_hat) lhs += Integer(d.r - 2) * ph;
  for (int i = 0; i < d.r; ++i)
    for (int j = i + 1; j < d.r; ++j) lhs -= Integer(d.P / d.p[i] / d.p[j]);
  if (mod_floor(lhs, Integer(2)) != 1) throw OracleDisagreement("n* defining expression is even: " + lhs.get_str());
  return Integer((lhs - 1) / 2).get_si();
}

Rational phi_from_dedekind_sums(const std::vector<long>& p) {
  long P = product(p);
  Rational phi = Rational(3) - Rational(1, P);
  for (long pj : p) phi += 12 * dedekind_sum(Integer(P / pj), Integer(pj));
  phi.canonicalize();
  return phi;
}

namespace {
Rational fiber_term(const std::vector<long>& p) {
  long P = product(p);
  Rational c = Rational(static_cast<long>(p.size()) - 2);
  for (long pj : p) c -= Rational(1, pj * pj);
  return Rational(P) * c;
}
}  // namespace

long casson_from_phi(const std::vector<long>& p, const Rational& phi) {
  Rational lam = (-phi - fiber_term(p)) / 24;
  lam.canonicalize();
  if (lam.get_den() != 1) throw OracleDisagreement("Dedekind-sum route gives non-integral lambda " + to_string(lam));
  return lam.get_num().get_si();
}

Rational phi_from_casson(const std::vector<long>& p, long casson) {
  Rational phi = Rational(-24 * casson) - fiber_term(p);
  phi.canonicalize();
  return phi;
}

Rational consistency_residual(const SeifertData& d) {
  Rational v = -d.phi - Rational(24 * d.casson) + Rational(Integer(d.m0) * d.m0, d.P) + Rational(2 * (2 * d.n_star + 1));
  v.canonicalize();
  return v;
}

SeifertData new_seifert(const std::vector<long>& p_in, const std::optional<std::vector<long>>& q_in,
                        const SeifertOptions& opts) {
  check_multiplicities(p_in);
  const int r = static_cast<int>(p_in.size());
  int evens = 0, even_at = -1;
  for (int j = 0; j < r; ++j)
    if (p_in[j] % 2 == 0) ++evens, even_at = j;
  if (evens > 1) throw ParityViolation("more than one even multiplicity");
  if (even_at > 0 && !opts.reorder_even_first)
    throw ParityViolation("p_" + std::to_string(even_at + 1) + " = " + std::to_string(p_in[even_at]) +
                          " is even but not in first position");
  if (q_in && q_in->size() != p_in.size()) throw InvalidArgument("p and q have different lengths");

  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (even_at > 0) std::swap(idx[0], idx[even_at]);  // keep the relative order of the rest as given

  SeifertData d;
  d.r = r;
  d.input_index = idx;
  for (int j = 0; j < r; ++j) d.p.push_back(p_in[idx[j]]);
  d.P = product(d.p);
  for (long pj : d.p) d.p_hat.push_back(d.P / pj);

  if (q_in) {
    for (int j = 0; j < r; ++j) d.q.push_back((*q_in)[idx[j]]);
    Integer rel = 0;
    for (int j = 0; j < r; ++j) {
      if (d.q[j] == 0 || std::gcd(d.p[j], d.q[j]) != 1)
        throw NonCoprime("gcd(p, q) != 1 for fiber " + std::to_string(idx[j] + 1));
      rel += Integer(d.q[j]) * d.p_hat[j];
    }
    if (rel != 1) throw SeifertRelationViolated("P * sum q_j/p_j = " + rel.get_str() + ", expected 1");
    if (mod_floor(d.q[0], 2L) != 1) throw ParityViolation("q_1 must be odd");
    for (int j = 1; j < r; ++j)
      if (d.q[j] % 2 != 0) throw ParityViolation("q_" + std::to_string(j + 1) + " must be even");
  } else {
    d.q = solve_q(d.p);
  }

  Integer m0 = Integer(r - 2) * d.P;
  for (long ph : d.p_hat) m0 -= ph;
  d.m0 = m0.get_si();
  d.n_star = n_star(d);

  long lam = casson_from_phi(d.p, phi_from_dedekind_sums(d.p));
  if (opts.casson_override) {
    for (long prime : {11L, 13L})
      if (mod_floor(*opts.casson_override - lam, prime) != 0)
        throw OracleDisagreement("casson override " + std::to_string(*opts.casson_override) +
                                 " disagrees with the computed value modulo " + std::to_string(prime));
    lam = *opts.casson_override;
  }
  d.casson = lam;
  d.phi = phi_from_casson(d.p, lam);
  if (consistency_residual(d) != 0) throw OracleDisagreement("phi/lambda/m0/n* consistency identity fails");
  return d;
}

}  // namespace seifertq
