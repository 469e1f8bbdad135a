#include "sosadmm/cones.hpp"

#include <cmath>
#include <stdexcept>

namespace sosadmm::cones {

int total_vec_len(const std::vector<ConeSpec>& cones) {
  int n = 0;
  for (const ConeSpec& c : cones) n += c.vec_len();
  return n;
}

Eigen::VectorXd project_nonneg(const Eigen::VectorXd& v) {
  return v.cwiseMax(0.0);
}

Eigen::VectorXd project_soc(const Eigen::VectorXd& v) {
  if (v.size() < 2) throw std::invalid_argument("project_soc: length must be >= 2");
  const double t = v[0];
  const double ynorm = v.tail(v.size() - 1).norm();
  if (ynorm <= t) return v;                       // already inside
  if (ynorm <= -t) return Eigen::VectorXd::Zero(v.size());  // polar cone
  const double scale = (t + ynorm) / (2.0 * ynorm);
  Eigen::VectorXd out(v.size());
  out[0] = (t + ynorm) / 2.0;
  out.tail(v.size() - 1) = scale * v.tail(v.size() - 1);
  return out;
}

Eigen::VectorXd project_psd(const Eigen::VectorXd& v) {
  const auto len = v.size();
  const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(len))));
  if (static_cast<Eigen::Index>(side) * side != len)
    throw std::invalid_argument("project_psd: length is not a perfect square");
  if (side == 0) return v;
  Eigen::MatrixXd m = Eigen::Map<const Eigen::MatrixXd>(v.data(), side, side);
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) throw std::runtime_error("project_psd: eigendecomposition failed");
  Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd proj = eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
  // Return an exactly symmetric vectorization regardless of rounding.
  proj = 0.5 * (proj + proj.transpose());
  return Eigen::Map<const Eigen::VectorXd>(proj.data(), len);
}

void project_product_inplace(Eigen::VectorXd& v, const std::vector<ConeSpec>& cones) {
  if (total_vec_len(cones) != v.size())
    throw std::invalid_argument("project_product: cone lengths do not match vector");
  Eigen::Index at = 0;
  for (const ConeSpec& c : cones) {
    const Eigen::Index len = c.vec_len();
    switch (c.kind) {
      case ConeSpec::Kind::Free:
        break;
      case ConeSpec::Kind::NonNeg:
        v.segment(at, len) = v.segment(at, len).cwiseMax(0.0);
        break;
      case ConeSpec::Kind::SecondOrder:
        v.segment(at, len) = project_soc(v.segment(at, len));
        break;
      case ConeSpec::Kind::Psd:
        v.segment(at, len) = project_psd(v.segment(at, len));
        break;
    }
    at += len;
  }
}

Eigen::VectorXd project_product(const Eigen::VectorXd& v, const std::vector<ConeSpec>& cones) {
  Eigen::VectorXd out = v;
  project_product_inplace(out, cones);
  return out;
}

}  // namespace sosadmm::cones
