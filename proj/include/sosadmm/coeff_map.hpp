#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sosadmm/basis.hpp"

namespace sosadmm {

// For a Gram representation p(x) = v(x)' X v(x) with v the monomial basis of
// degree half_degree, records for every candidate monomial x^alpha (degree up
// to 2*half_degree) the Gram positions (i, j) with v_i * v_j = x^alpha. Each
// unordered pair appears twice, as (i, j) and (j, i), except diagonal hits.
class CoefficientMap {
 public:
  CoefficientMap(int num_vars, int half_degree);

  const MonomialBasis& gram_basis() const { return gram_basis_; }
  const MonomialBasis& match_basis() const { return match_basis_; }

  std::size_t num_matches() const { return pairs_.size(); }
  // Pairs for the alpha at position `alpha_index` in match_basis().
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs(std::size_t alpha_index) const {
    return pairs_[alpha_index];
  }
  // Number of Gram entries hitting this alpha; always >= 1.
  std::size_t multiplicity(std::size_t alpha_index) const { return pairs_[alpha_index].size(); }

 private:
  MonomialBasis gram_basis_;   // degree half_degree, size N
  MonomialBasis match_basis_;  // degree 2*half_degree, size m
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs_;
};

CoefficientMap coefficient_map(int num_vars, int half_degree);

}  // namespace sosadmm
