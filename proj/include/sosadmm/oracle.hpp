#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sosadmm/basis.hpp"
#include "sosadmm/poly.hpp"

// Brute-force checks kept deliberately independent of the compilation and
// solver code paths: coefficient expansion goes through polynomial
// multiplication (not CoefficientMap) and the eigensolver is a hand-rolled
// Jacobi iteration (not Eigen's).
namespace sosadmm::oracle {

// max_alpha | coefficient of x^alpha in v'Xv - p |, where v is the given
// monomial basis. 0 means X is an exact Gram representation of p.
double verify_gram(const Polynomial& p, const Eigen::MatrixXd& x, const MonomialBasis& basis);

// Global minimum of a univariate polynomial with even degree and positive
// leading coefficient (constants allowed), via stationary-point bracketing on
// a coefficient-bound interval plus bisection on p'. Accurate to ~1e-9 on
// desk-scale inputs.
double univariate_min(const Polynomial& p);

struct LyapunovSample {
  double min_v = 0.0;
  double max_vdot = 0.0;
};

// Samples `samples` points uniformly in the ball ||x||^2 <= radius_sq
// (excluding a 1e-6 neighborhood of the origin) and evaluates V and
// V̇ = sum_i dV/dx_i * f_num[i]/f_den[i] pointwise. Denominators are
// evaluated, not cleared; a denominator <= 0 at any sample is an error.
// f_den may be empty (all ones). Deterministic in seed.
LyapunovSample check_lyapunov_sampled(const Polynomial& v, const std::vector<Polynomial>& f_num,
                                      const std::vector<Polynomial>& f_den, double radius_sq,
                                      int samples, std::uint64_t seed);

// Minimum of p over `samples` points drawn uniformly from the box
// [-half_width, half_width]^n. An upper bound on the true minimum, so any
// sound lower bound must sit below it. Deterministic in seed.
double sample_min(const Polynomial& p, int samples, std::uint64_t seed, double half_width = 2.0);

// Minimum eigenvalue via cyclic Jacobi sweeps (row-cyclic order). Sweeps stop
// once the off-diagonal mass falls below max(1e-4 * tol, 1e-15) relative to
// the matrix scale, so the eigenvalue error is well under tol; callers
// compare the result against -tol.
double psd_check(const Eigen::MatrixXd& m, double tol);

// All eigenvalues from the same Jacobi iteration, ascending.
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& m, double tol);

}  // namespace sosadmm::oracle
