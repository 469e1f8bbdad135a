#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <iosfwd>
#include <vector>

#include "sosadmm/conic_program.hpp"

namespace sosadmm::admm {

struct AdaptOptions {
  double mu = 10.0;       // residual imbalance ratio that triggers a change
  double tau_incr = 2.0;  // multiplicative increase of rho
  double tau_decr = 2.0;  // multiplicative decrease of rho
  double rho_min = 1e-6;
  double rho_max = 1e6;
};

struct SolverOptions {
  double rho_init = 1.0;
  double tol = 1e-4;
  int max_iter = 2000;
  AdaptOptions adapt;
  // CSV iteration log `iter, rho, primal, dual, constraint, objective`,
  // written to *log_stream every log_every iterations (0 disables).
  int log_every = 0;
  std::ostream* log_stream = nullptr;
  bool record_history = false;

  void validate() const;
};

// Iterates of the splitting. Row-local copies z and multipliers mu are stored
// concatenated; row i occupies [row_offset[i], row_offset[i+1]). Multipliers
// are unscaled: rho enters the update formulas only, so a rho change needs no
// rescaling here.
struct SolverState {
  Eigen::VectorXd x;
  Eigen::VectorXd x_prev;
  Eigen::VectorXd u;   // slack copy kept inside the cone
  Eigen::VectorXd xi;  // multiplier for u = x
  Eigen::VectorXd z;
  Eigen::VectorXd mu;
  std::vector<int> row_offset;
  Eigen::VectorXd d_diag;     // 1 + (number of rows covering each variable)
  Eigen::VectorXd row_norm2;  // squared 2-norm of each row's values
  double rho = 1.0;
  int iter = 0;
};

struct Residuals {
  double primal = 0.0;
  double dual = 0.0;
  double constraint = 0.0;

  double max() const { return std::max(primal, std::max(dual, constraint)); }
};

enum class Status { Solved, MaxIters };

const char* to_string(Status s);

struct IterationRecord {
  int iter = 0;
  double rho = 0.0;
  Residuals res;
  double objective = 0.0;
};

struct Solution {
  Eigen::VectorXd x;
  Eigen::VectorXd u;  // conic copy at exit; Gram extraction reads this
  double objective = 0.0;
  Status status = Status::MaxIters;
  int iterations = 0;
  Residuals residuals;
  std::vector<IterationRecord> history;  // filled when record_history
};

// Zero-initialized state with d_diag and row norms precomputed in one pass.
SolverState init(const ConicProgram& prog, const SolverOptions& opts = {});

// x <- D^{-1} [ sum_i H_i'(z_i + mu_i/rho) + (u + xi/rho) - c/rho ] with the
// diagonal D applied as an elementwise divide; saves the previous x.
void x_update(SolverState& s, const ConicProgram& prog);

// Closed-form equality-constrained least squares for row i:
//   w = row values; omega = (-b_i + w'(H_i x) - w'mu_i/rho) / ||w||^2;
//   z_i = H_i x - mu_i/rho - w * omega,  so w'z_i = b_i to roundoff.
void z_update_row(SolverState& s, const ConicProgram& prog, std::size_t i);
void z_update(SolverState& s, const ConicProgram& prog);

// u <- projection of (x - xi/rho) onto the cone product.
void u_update(SolverState& s, const ConicProgram& prog);

// mu_i += rho (z_i - H_i x); xi += rho (u - x).
void dual_update(SolverState& s, const ConicProgram& prog);

// primal  = max(max_i ||z_i - H_i x||_inf, ||u - x||_inf) / (1 + ||x||_inf)
// dual    = rho ||x - x_prev||_inf / (1 + ||x||_inf)
// constr. = ||A x - b||_inf / (1 + ||b||_inf)
Residuals residuals(const SolverState& s, const ConicProgram& prog);

// Runs the full loop from a zero start. Never throws on non-convergence;
// status is MaxIters with the final residuals instead.
Solution solve(const ConicProgram& prog, const SolverOptions& opts = {});

// Same loop from a caller-prepared state (opts.rho_init is ignored in favor
// of s.rho). Runs at most opts.max_iter further iterations.
Solution solve_from(SolverState& s, const ConicProgram& prog, const SolverOptions& opts);

}  // namespace sosadmm::admm
