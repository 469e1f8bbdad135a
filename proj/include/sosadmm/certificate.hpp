#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sosadmm/conic_program.hpp"
#include "sosadmm/solver.hpp"

namespace sosadmm {

// Solution unpacked along the program layout. Gram blocks are read from the
// conic copy u (which the cone projection keeps PSD up to eigensolver
// roundoff) and symmetrized; parameters come from the primal iterate x. The
// two agree to within the primal residual at exit.
struct Certificate {
  Eigen::VectorXd params;
  std::vector<Eigen::MatrixXd> grams;
  // Per source constraint: max_alpha |row residual| of the matching rows,
  // evaluated on the extracted params/Grams.
  std::vector<double> coeff_residuals;
  // Per Gram block, from the oracle eigensolver.
  std::vector<double> min_eigs;
};

Certificate extract_certificate(const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                                const ConicProgram& prog);
Certificate extract_certificate(const admm::Solution& sol, const ConicProgram& prog);

}  // namespace sosadmm
