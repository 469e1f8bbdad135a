#include "sosadmm/basis.hpp"

#include <stdexcept>

namespace sosadmm {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // r * num / i is exact at every step; guard the multiply.
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial: result exceeds 64 bits");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

// Exponent vectors of total degree exactly `deg` over vars [pos, n), with the
// leading variable taking the largest exponent first (descending lex).
void emit_degree(std::vector<int>& exps, std::size_t pos, int deg,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = deg;
    out.emplace_back(exps);
    exps[pos] = 0;
    return;
  }
  for (int e = deg; e >= 0; --e) {
    exps[pos] = e;
    emit_degree(exps, pos + 1, deg - e, out);
  }
  exps[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (num_vars < 1) throw std::invalid_argument("MonomialBasis: num_vars must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("MonomialBasis: max_degree must be >= 0");
  entries_.reserve(binomial(num_vars + max_degree, max_degree));
  std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
  for (int d = 0; d <= max_degree; ++d) emit_degree(exps, 0, d, entries_);
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i], i);
}

bool MonomialBasis::contains(const MultiIndex& alpha) const {
  return index_.find(alpha) != index_.end();
}

std::size_t MonomialBasis::index_of(const MultiIndex& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: monomial not in basis");
  return it->second;
}

MonomialBasis monomial_basis(int num_vars, int max_degree) {
  return MonomialBasis(num_vars, max_degree);
}

}  // namespace sosadmm
