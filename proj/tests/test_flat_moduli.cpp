#include <doctest.h>

#include "seifertq/errors.hpp"
#include "seifertq/flat_moduli.hpp"

using namespace seifertq;

namespace {

const FlatLabel* find(const std::vector<FlatLabel>& v, const std::vector<long>& l) {
  for (const FlatLabel& f : v)
    if (f.l == l) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("poincare sphere labels") {
  SeifertData d = new_seifert({2, 3, 5});
  auto R = enumerate_R(d);
  REQUIRE(R.size() == 2);
  CHECK(R[0].l == std::vector<long>{1, 2, 2});
  CHECK(R[1].l == std::vector<long>{1, 2, 4});
  CHECK(signed_cs(R[0].cs) == Rational(-49, 120));
  CHECK(signed_cs(R[1].cs) == Rational(-1, 120));
  CHECK(enumerate_L(d).size() == 2);
  CHECK(cs_set(d) == std::vector<Rational>{0, Rational(71, 120), Rational(119, 120)});
}

TEST_CASE("brieskorn (2,3,7) labels") {
  SeifertData d = new_seifert({2, 3, 7});
  auto R = enumerate_R(d);
  REQUIRE(R.size() == 2);
  CHECK(signed_cs(find(R, {1, 2, 2})->cs) == Rational(-25, 168));
  CHECK(signed_cs(find(R, {1, 2, 4})->cs) == Rational(-121, 168));
  auto L = enumerate_L(d);
  const FlatLabel* extra = find(L, {1, 2, 6});
  REQUIRE(extra != nullptr);
  CHECK_FALSE(extra->in_R);
  CHECK(signed_cs(extra->cs) == Rational(-1, 168));
}

TEST_CASE("four fibers") {
  SeifertData d = new_seifert({2, 3, 5, 7});
  auto R = enumerate_R(d);
  auto L = enumerate_L(d);
  CHECK(R.size() == 22);
  CHECK(L.size() == 29);
  for (const FlatLabel& f : L) CHECK(f.dim == 2 * (d.r - 3 - f.t));
}

TEST_CASE("both membership tests agree") {
  for (auto p : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 3, 5, 7}, {3, 5, 7, 11}, {2, 3, 5, 7, 11}}) {
    SeifertData d = new_seifert(p);
    CAPTURE(d.label());
    for (const FlatLabel& f : enumerate_L(d)) {
      CHECK(in_L(d, f.l));
      CHECK(in_R_odd_subsets(d, f.l) == in_R_flips(d, f.l));
      CHECK(f.in_R == in_R_odd_subsets(d, f.l));
      CHECK(cs_action(d, f.l) == f.cs);
    }
  }
}

TEST_CASE("labels outside L are rejected") {
  SeifertData d = new_seifert({2, 3, 5});
  CHECK_FALSE(in_L(d, {1, 1, 2}));
  CHECK_THROWS(cs_action(d, {1, 1, 2}));
}
