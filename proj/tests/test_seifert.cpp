#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "seifertq/errors.hpp"
#include "seifertq/seifert.hpp"

using namespace seifertq;

namespace {

struct Row {
  std::vector<long> p;
  long m0;
  Rational phi;
  long casson;
};

}  // namespace

TEST_CASE("invariant table") {
  // reference values from an independent Dedekind-sum implementation
  const std::vector<Row> rows = {
      {{2, 3, 5}, -1, Rational(181, 30), -1},
      {{2, 3, 7}, 1, Rational(-83, 42), -1},
      {{4, 3, 5}, 13, Rational(49, 60), -2},
      {{2, 3, 5, 7}, 173, Rational(949, 210), -14},
      {{2, 5, 7}, 11, Rational(-19, 70), -2},
      {{3, 5, 7}, 34, Rational(946, 105), -4},
      {{2, 3, 5, 7, 11}, 4003, Rational(34189, 2310), -248},
  };
  for (const Row& row : rows) {
    SeifertData d = new_seifert(row.p);
    CAPTURE(d.label());
    CHECK(d.m0 == row.m0);
    CHECK(d.phi == row.phi);
    CHECK(d.casson == row.casson);
    CHECK(consistency_residual(d) == 0);
    CHECK(mod_floor(d.n_star, 2L) == 1);
  }
}

TEST_CASE("poincare sphere data") {
  SeifertData d = new_seifert({2, 3, 5});
  CHECK(d.P == 30);
  CHECK(d.p_hat == std::vector<long>{15, 10, 6});
  CHECK(d.q == std::vector<long>{-1, -2, 6});
  CHECK(d.n_star == -5);
  CHECK(d.label() == "(2,3,5)");
}

TEST_CASE("q normalization") {
  for (auto p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 3, 5, 7}, {5, 7, 9, 11}}) {
    auto q = solve_q(p);
    long P = std::accumulate(p.begin(), p.end(), 1L, std::multiplies<long>());
    long rel = 0;
    int odd = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      rel += q[j] * (P / p[j]);
      if (mod_floor(q[j], 2L) == 1) ++odd;
    }
    CHECK(rel == 1);
    CHECK(odd == 1);
  }
}

TEST_CASE("even fiber is moved first") {
  SeifertData d = new_seifert({3, 4, 5});
  CHECK(d.p == std::vector<long>{4, 3, 5});
  CHECK(d.input_index == std::vector<int>{1, 0, 2});
  SeifertOptions strict;
  strict.reorder_even_first = false;
  CHECK_THROWS_AS(new_seifert({3, 4, 5}, std::nullopt, strict), ParityViolation);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(new_seifert({2, 3}), TooFewFibers);
  CHECK_THROWS_AS(new_seifert({2, 4, 5}), NonCoprime);
  CHECK_THROWS_AS(new_seifert({1, 3, 5}), InvalidArgument);
  CHECK_THROWS_AS(new_seifert({2, 3, 5}, std::vector<long>{1, -2, 6}), SeifertRelationViolated);
  CHECK_THROWS_AS(new_seifert({2, 3, 5}, std::vector<long>{-1, -2}), InvalidArgument);
  // relation holds but q_2 is odd
  CHECK_THROWS_AS(new_seifert({2, 3, 5}, std::vector<long>{1, 1, -4}), ParityViolation);
  CHECK_NOTHROW(new_seifert({2, 3, 5}, std::vector<long>{-1, -2, 6}));
}

TEST_CASE("casson override is validated") {
  SeifertOptions ok;
  ok.casson_override = -1;
  CHECK(new_seifert({2, 3, 5}, std::nullopt, ok).casson == -1);
  SeifertOptions bad;
  bad.casson_override = 3;
  CHECK_THROWS_AS(new_seifert({2, 3, 5}, std::nullopt, bad), OracleDisagreement);
}

TEST_CASE("phi, lambda, m0 and n* identity on random tuples") {
  const std::vector<long> pool = {2, 3, 4, 5, 7, 8, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31};
  std::mt19937 rng(20261016);
  int tested = 0;
  while (tested < 50) {
    std::uniform_int_distribution<int> rdist(3, 6);
    int r = rdist(rng);
    std::vector<long> p;
    std::vector<long> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (long x : shuffled) {
      if (static_cast<int>(p.size()) == r) break;
      bool ok = std::all_of(p.begin(), p.end(), [&](long y) { return std::gcd(x, y) == 1; });
      if (ok) p.push_back(x);
    }
    if (static_cast<int>(p.size()) != r) continue;
    SeifertData d = new_seifert(p);
    CAPTURE(d.label());
    CHECK(consistency_residual(d) == 0);
    CHECK(phi_from_casson(d.p, d.casson) == phi_from_dedekind_sums(d.p));
    ++tested;
  }
}
