#include "sosadmm/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "sosadmm/oracle.hpp"

namespace sosadmm {

Certificate extract_certificate(const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                                const ConicProgram& prog) {
  if (x.size() != prog.num_vars || u.size() != prog.num_vars)
    throw std::invalid_argument("extract_certificate: solution length does not match layout");

  Certificate cert;
  cert.params = x.head(prog.layout.free_size);

  // Composite vector the residuals are evaluated on: parameters from x,
  // Gram entries from u.
  Eigen::VectorXd composite = x;
  for (const GramBlockInfo& g : prog.layout.grams) {
    const Eigen::Index off = g.offset;
    const Eigen::Index len = static_cast<Eigen::Index>(g.side) * g.side;
    Eigen::MatrixXd mat = Eigen::Map<const Eigen::MatrixXd>(u.data() + off, g.side, g.side);
    mat = 0.5 * (mat + mat.transpose()).eval();
    composite.segment(off, len) = Eigen::Map<const Eigen::VectorXd>(mat.data(), len);
    cert.min_eigs.push_back(oracle::psd_check(mat, 1e-9));
    cert.grams.push_back(std::move(mat));
  }

  for (auto [begin, end] : prog.layout.constraint_rows) {
    double worst = 0.0;
    for (int r = begin; r < end; ++r) {
      const RowData& row = prog.rows[static_cast<std::size_t>(r)];
      double lhs = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) lhs += row.values[k] * composite[row.indices[k]];
      worst = std::max(worst, std::abs(lhs - prog.b[r]));
    }
    cert.coeff_residuals.push_back(worst);
  }
  return cert;
}

Certificate extract_certificate(const admm::Solution& sol, const ConicProgram& prog) {
  return extract_certificate(sol.x, sol.u, prog);
}

}  // namespace sosadmm
