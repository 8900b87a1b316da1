#include "seifertq/flat_moduli.hpp"

#include <algorithm>

#include "seifertq/errors.hpp"

namespace seifertq {

namespace {

constexpr int kMaxFibers = 12;

int divisible_count(const SeifertData& d, const std::vector<long>& l) {
  int t = 0;
  for (int j = 0; j < d.r; ++j)
    if (l[j] % d.p[j] == 0) ++t;
  return t;
}

Rational cs_unchecked(const SeifertData& d, const std::vector<long>& l) {
  Integer s = 0;
  for (int j = 0; j < d.r; ++j) s += Integer(l[j]) * d.p_hat[j];
  return frac_part(Rational(-s * s, Integer(4 * d.P)));
}

FlatLabel make_label(const SeifertData& d, const std::vector<long>& l) {
  FlatLabel f;
  f.l = l;
  f.t = divisible_count(d, l);
  f.in_R = in_R_odd_subsets(d, l);
  f.cs = cs_unchecked(d, l);
  f.dim = 2 * (d.r - 3 - f.t);
  return f;
}

}  // namespace

bool in_L(const SeifertData& d, const std::vector<long>& l) {
  if (static_cast<int>(l.size()) != d.r) return false;
  for (int j = 0; j < d.r; ++j) {
    if (l[j] < 0 || l[j] > d.p[j]) return false;
    if (j > 0 && l[j] % 2 != 0) return false;
  }
  return divisible_count(d, l) <= d.r - 3;
}

bool in_R_odd_subsets(const SeifertData& d, const std::vector<long>& l) {
  if (d.r > kMaxFibers) throw DomainError("R enumeration is capped at 12 fibers");
  for (unsigned mask = 0; mask < (1u << d.r); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    Rational s = 0;
    for (int j = 0; j < d.r; ++j) s += Rational((mask >> j) & 1 ? d.p[j] - l[j] : l[j], d.p[j]);
    if (s <= 1) return false;
  }
  return true;
}

bool in_R_flips(const SeifertData& d, const std::vector<long>& l) {
  if (d.r > kMaxFibers) throw DomainError("R enumeration is capped at 12 fibers");
  auto h0 = sigma1(d, l);
  for (unsigned mask = 0; mask < (1u << d.r); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Rational s = 0;
    for (int j = 0; j < d.r; ++j) s += Rational((mask >> j) & 1 ? d.p[j] - h0[j] : h0[j], d.p[j]);
    if (s <= 1) return false;
  }
  return true;
}

std::vector<long> sigma1(const SeifertData& d, const std::vector<long>& l) {
  auto h = l;
  h[0] = d.p[0] - l[0];
  return h;
}

std::vector<FlatLabel> enumerate_L(const SeifertData& d) {
  std::vector<FlatLabel> out;
  std::vector<long> l(d.r, 0);
  // odometer over 0 <= l_j <= p_j, last index fastest
  while (true) {
    if (in_L(d, l)) out.push_back(make_label(d, l));
    int j = d.r - 1;
    while (j >= 0) {
      l[j] += (j > 0) ? 2 : 1;
      if (l[j] <= d.p[j]) break;
      l[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

std::vector<FlatLabel> enumerate_R(const SeifertData& d) {
  std::vector<FlatLabel> out;
  for (auto& f : enumerate_L(d)) {
    if (f.in_R != in_R_flips(d, f.l))
      throw OracleDisagreement("R membership routes disagree");
    if (f.in_R) out.push_back(f);
  }
  return out;
}

Rational cs_action(const SeifertData& d, const std::vector<long>& l) {
  if (!in_L(d, l)) throw InvalidArgument("label is not in L");
  return cs_unchecked(d, l);
}

Rational signed_cs(const Rational& s) {
  Rational v = frac_part(s);
  if (v != 0) v -= 1;
  return v;
}

std::vector<Rational> cs_set(const SeifertData& d) {
  std::vector<Rational> out{Rational(0)};
  for (auto& f : enumerate_R(d)) out.push_back(f.cs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace seifertq
