#pragma once

#include <vector>

#include "seifertq/exact_arith.hpp"
#include "seifertq/seifert.hpp"

namespace seifertq {

// Label of a component of the moduli space of flat SL(2,C) connections.
// Entries of l follow the fiber order of SeifertData (even multiplicity first).
struct FlatLabel {
  std::vector<long> l;
  int t = 0;          // #{j : p_j | l_j}
  bool in_R = false;  // component meets the SU(2) part
  Rational cs;        // S_l mod 1, in [0, 1)
  int dim = 0;        // 2 (r - 3 - t)
};

bool in_L(const SeifertData& d, const std::vector<long>& l);

// Lexicographic order over l.
std::vector<FlatLabel> enumerate_L(const SeifertData& d);
std::vector<FlatLabel> enumerate_R(const SeifertData& d);

// The two membership tests for R: odd subsets J, and the sum over every
// tuple obtained from sigma_1(l) by flipping an even number of entries.
bool in_R_odd_subsets(const SeifertData& d, const std::vector<long>& l);
bool in_R_flips(const SeifertData& d, const std::vector<long>& l);

std::vector<long> sigma1(const SeifertData& d, const std::vector<long>& l);

Rational cs_action(const SeifertData& d, const std::vector<long>& l);  // throws unless l in L
Rational signed_cs(const Rational& s);  // representative in (-1, 0]
// {0} together with S_l for l in R, sorted, duplicates merged.
std::vector<Rational> cs_set(const SeifertData& d);

}  // namespace seifertq
