#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sosadmm/poly.hpp"

namespace sosadmm {

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// All monomials in n variables of total degree <= max_degree, in graded
// lexicographic order, with O(1) lookup from exponent vector to position.
class MonomialBasis {
 public:
  MonomialBasis(int num_vars, int max_degree);

  int num_vars() const { return num_vars_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return entries_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<MultiIndex>& entries() const { return entries_; }

  bool contains(const MultiIndex& alpha) const;
  // Position of alpha in the basis; throws std::out_of_range if absent.
  std::size_t index_of(const MultiIndex& alpha) const;

 private:
  int num_vars_;
  int max_degree_;
  std::vector<MultiIndex> entries_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index_;
};

// Requires num_vars >= 1 and max_degree >= 0. The size is always
// binomial(num_vars + max_degree, max_degree).
MonomialBasis monomial_basis(int num_vars, int max_degree);

}  // namespace sosadmm
