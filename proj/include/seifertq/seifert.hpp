#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifertq/exact_arith.hpp"

namespace seifertq {

// Validated data of the homology sphere Sigma(p_1, ..., p_r).
//
// The fibers are stored with the (at most one) even multiplicity first, as the
// normalization q_1 odd, q_j even (j >= 2) requires. `input_index[j]` records
// where fiber j sat in the caller's list.
struct SeifertData {
  int r = 0;
  std::vector<long> p;
  std::vector<long> q;
  long P = 0;
  std::vector<long> p_hat;
  long m0 = 0;
  long n_star = 0;
  long casson = 0;
  Rational phi;
  std::vector<int> input_index;

  std::string label() const;  // "(2,3,5)"
};

struct SeifertOptions {
  bool reorder_even_first = true;
  std::optional<long> casson_override;
};

SeifertData new_seifert(const std::vector<long>& p, const std::optional<std::vector<long>>& q = std::nullopt,
                        const SeifertOptions& opts = {});

// q with sum q_j p_hat_j = 1, q_1 odd, q_j even for j >= 2. Among candidates the
// minimum of (sum |q_j|, then q lexicographically, fibers in canonical order) is
// returned; the search covers three residue-class steps on either side of the
// smallest representative of every q_j.
std::vector<long> solve_q(const std::vector<long>& p);

long n_star(const SeifertData& d);

// phi from Dedekind sums: 3 - 1/P + 12 sum_j s(p_hat_j, p_j).
Rational phi_from_dedekind_sums(const std::vector<long>& p);
// lambda = (-phi - P (r - 2 - sum 1/p_j^2)) / 24
long casson_from_phi(const std::vector<long>& p, const Rational& phi);
Rational phi_from_casson(const std::vector<long>& p, long casson);

// Exact residual of -phi - 24 lambda + m0^2/P + 2(2 n* + 1); zero for valid data.
Rational consistency_residual(const SeifertData& d);

}  // namespace seifertq
