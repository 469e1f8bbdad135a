#include "sosadmm/coeff_map.hpp"

namespace sosadmm {

CoefficientMap::CoefficientMap(int num_vars, int half_degree)
    : gram_basis_(num_vars, half_degree), match_basis_(num_vars, 2 * half_degree) {
  pairs_.resize(match_basis_.size());
  const std::size_t n = gram_basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = match_basis_.index_of(gram_basis_[i] + gram_basis_[j]);
      pairs_[a].emplace_back(i, j);
    }
  }
}

CoefficientMap coefficient_map(int num_vars, int half_degree) {
  return CoefficientMap(num_vars, half_degree);
}

}  // namespace sosadmm
