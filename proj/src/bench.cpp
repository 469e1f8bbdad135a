#include "sosadmm/bench.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "sosadmm/basis.hpp"
#include "sosadmm/rng.hpp"

namespace sosadmm::bench {

Polynomial gen_random_polymin(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("gen_random_polymin: need n >= 1 and d >= 1");
  Rng rng(seed);
  Polynomial p(n);
  const MonomialBasis low_order = monomial_basis(n, 2 * d - 1);
  for (const MultiIndex& alpha : low_order.entries()) p.add_term(alpha, rng.uniform(-1.0, 1.0));
  for (int i = 0; i < n; ++i) p.add_term(MultiIndex::unit(n, i, 2 * d), 1.0);
  return p;
}

std::vector<Polynomial> gen_random_stable_system(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_stable_system: need n >= 1");
  Rng rng(seed);

  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rng.uniform(-1.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (b + b.transpose()));
  const double shift = eig.eigenvalues().maxCoeff() + 0.5;
  Eigen::MatrixXd a = b - shift * Eigen::MatrixXd::Identity(n, n);

  std::vector<Polynomial> f(static_cast<std::size_t>(n), Polynomial(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(i)].add_term(MultiIndex::unit(n, j), a(i, j));

  // ~3n higher-order terms, alternating degrees 2 and 3 so a cubic term is
  // always present.
  const int draws = 3 * n;
  for (int t = 0; t < draws; ++t) {
    const int degree = 2 + (t % 2);
    const int comp = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    MultiIndex mono = MultiIndex::zero(n);
    for (int k = 0; k < degree; ++k)
      mono = mono + MultiIndex::unit(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    double coeff = 0.0;
    while (coeff == 0.0) coeff = rng.uniform(-0.1, 0.1);
    f[static_cast<std::size_t>(comp)].add_term(mono, coeff);
  }
  return f;
}

}  // namespace sosadmm::bench
