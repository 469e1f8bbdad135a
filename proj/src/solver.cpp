#include "sosadmm/solver.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sosadmm::admm {

void SolverOptions::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("SolverOptions: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("SolverOptions: max_iter must be >= 1");
  if (!(adapt.rho_min <= rho_init && rho_init <= adapt.rho_max))
    throw std::invalid_argument("SolverOptions: need rho_min <= rho_init <= rho_max");
  if (!(adapt.mu > 1.0) || !(adapt.tau_incr >= 1.0) || !(adapt.tau_decr >= 1.0))
    throw std::invalid_argument("SolverOptions: adapt parameters out of range");
  if (log_every < 0) throw std::invalid_argument("SolverOptions: log_every must be >= 0");
}

const char* to_string(Status s) { return s == Status::Solved ? "Solved" : "MaxIters"; }

SolverState init(const ConicProgram& prog, const SolverOptions& opts) {
  opts.validate();
  prog.validate();
  SolverState s;
  const Eigen::Index n = prog.num_vars;
  s.x = Eigen::VectorXd::Zero(n);
  s.x_prev = Eigen::VectorXd::Zero(n);
  s.u = Eigen::VectorXd::Zero(n);
  s.xi = Eigen::VectorXd::Zero(n);
  s.row_offset.resize(prog.rows.size() + 1);
  s.row_offset[0] = 0;
  for (std::size_t i = 0; i < prog.rows.size(); ++i)
    s.row_offset[i + 1] = s.row_offset[i] + static_cast<int>(prog.rows[i].size());
  const Eigen::Index total = s.row_offset.back();
  s.z = Eigen::VectorXd::Zero(total);
  s.mu = Eigen::VectorXd::Zero(total);
  s.d_diag = Eigen::VectorXd::Ones(n);
  s.row_norm2 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(prog.rows.size()));
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    double nrm2 = 0.0;
    for (std::size_t k = 0; k < prog.rows[i].size(); ++k) {
      s.d_diag[prog.rows[i].indices[k]] += 1.0;
      nrm2 += prog.rows[i].values[k] * prog.rows[i].values[k];
    }
    s.row_norm2[static_cast<Eigen::Index>(i)] = nrm2;
  }
  s.rho = opts.rho_init;
  s.iter = 0;
  return s;
}

void x_update(SolverState& s, const ConicProgram& prog) {
  s.x_prev = s.x;
  const double inv_rho = 1.0 / s.rho;
  // Scatter-accumulate sum_i H_i'(z_i + mu_i/rho) over the row supports.
  Eigen::VectorXd acc = s.u + inv_rho * s.xi - inv_rho * prog.c;
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    const RowData& row = prog.rows[i];
    const int off = s.row_offset[i];
    for (std::size_t k = 0; k < row.size(); ++k)
      acc[row.indices[k]] += s.z[off + static_cast<int>(k)] + inv_rho * s.mu[off + static_cast<int>(k)];
  }
  s.x = acc.cwiseQuotient(s.d_diag);
}

void z_update_row(SolverState& s, const ConicProgram& prog, std::size_t i) {
  const RowData& row = prog.rows[i];
  const int off = s.row_offset[i];
  const double inv_rho = 1.0 / s.rho;
  double w_dot_hx = 0.0;
  double w_dot_mu = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) {
    w_dot_hx += row.values[k] * s.x[row.indices[k]];
    w_dot_mu += row.values[k] * s.mu[off + static_cast<int>(k)];
  }
  const double omega =
      (-prog.b[static_cast<Eigen::Index>(i)] + w_dot_hx - inv_rho * w_dot_mu) /
      s.row_norm2[static_cast<Eigen::Index>(i)];
  for (std::size_t k = 0; k < row.size(); ++k) {
    s.z[off + static_cast<int>(k)] =
        s.x[row.indices[k]] - inv_rho * s.mu[off + static_cast<int>(k)] - row.values[k] * omega;
  }
}

void z_update(SolverState& s, const ConicProgram& prog) {
  for (std::size_t i = 0; i < prog.rows.size(); ++i) z_update_row(s, prog, i);
}

void u_update(SolverState& s, const ConicProgram& prog) {
  s.u = s.x - (1.0 / s.rho) * s.xi;
  cones::project_product_inplace(s.u, prog.cones);
}

void dual_update(SolverState& s, const ConicProgram& prog) {
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    const RowData& row = prog.rows[i];
    const int off = s.row_offset[i];
    for (std::size_t k = 0; k < row.size(); ++k)
      s.mu[off + static_cast<int>(k)] += s.rho * (s.z[off + static_cast<int>(k)] - s.x[row.indices[k]]);
  }
  s.xi += s.rho * (s.u - s.x);
}

Residuals residuals(const SolverState& s, const ConicProgram& prog) {
  Residuals r;
  const double x_inf = s.x.size() ? s.x.cwiseAbs().maxCoeff() : 0.0;
  double consensus = (s.u - s.x).cwiseAbs().maxCoeff();
  double constraint_num = 0.0;
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    const RowData& row = prog.rows[i];
    const int off = s.row_offset[i];
    double ax = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const double gap = std::abs(s.z[off + static_cast<int>(k)] - s.x[row.indices[k]]);
      if (gap > consensus) consensus = gap;
      ax += row.values[k] * s.x[row.indices[k]];
    }
    const double viol = std::abs(ax - prog.b[static_cast<Eigen::Index>(i)]);
    if (viol > constraint_num) constraint_num = viol;
  }
  const double b_inf = prog.b.size() ? prog.b.cwiseAbs().maxCoeff() : 0.0;
  r.primal = consensus / (1.0 + x_inf);
  r.dual = s.rho * (s.x - s.x_prev).cwiseAbs().maxCoeff() / (1.0 + x_inf);
  r.constraint = constraint_num / (1.0 + b_inf);
  return r;
}

namespace {

void log_line(std::ostream& out, int iter, double rho, const Residuals& res, double objective) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%d, %.9g, %.9g, %.9g, %.9g, %.9g\n", iter, rho, res.primal,
                res.dual, res.constraint, objective);
  out << buf;
}

}  // namespace

Solution solve_from(SolverState& s, const ConicProgram& prog, const SolverOptions& opts) {
  opts.validate();
  const bool logging = opts.log_every > 0 && opts.log_stream != nullptr;
  if (logging) *opts.log_stream << "iter, rho, primal, dual, constraint, objective\n";

  Solution sol;
  sol.status = Status::MaxIters;
  Residuals res;
  int done = 0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    x_update(s, prog);
    z_update(s, prog);
    u_update(s, prog);
    dual_update(s, prog);
    res = residuals(s, prog);
    ++s.iter;
    done = it;
    const bool solved = res.max() <= opts.tol;
    if (opts.record_history || (logging && (it % opts.log_every == 0 || solved || it == opts.max_iter))) {
      const double obj = prog.c.dot(s.x);
      if (opts.record_history) sol.history.push_back({s.iter, s.rho, res, obj});
      if (logging && (it % opts.log_every == 0 || solved || it == opts.max_iter))
        log_line(*opts.log_stream, s.iter, s.rho, res, obj);
    }
    if (solved) {
      sol.status = Status::Solved;
      break;
    }
    // Residual balancing; multipliers are stored unscaled so no rescale here.
    if (res.primal > opts.adapt.mu * res.dual) {
      s.rho = std::min(s.rho * opts.adapt.tau_incr, opts.adapt.rho_max);
    } else if (res.dual > opts.adapt.mu * res.primal) {
      s.rho = std::max(s.rho / opts.adapt.tau_decr, opts.adapt.rho_min);
    }
  }
  sol.x = s.x;
  sol.u = s.u;
  sol.objective = prog.c.dot(s.x);
  sol.iterations = done;
  sol.residuals = res;
  return sol;
}

Solution solve(const ConicProgram& prog, const SolverOptions& opts) {
  SolverState s = init(prog, opts);
  return solve_from(s, prog, opts);
}

}  // namespace sosadmm::admm
