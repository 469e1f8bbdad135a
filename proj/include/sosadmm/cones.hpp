#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sosadmm::cones {

// One factor of a product cone over a stacked variable vector. Psd factors
// hold a dim x dim symmetric matrix stored column-major as dim^2 entries.
struct ConeSpec {
  enum class Kind { Free, NonNeg, SecondOrder, Psd };

  Kind kind = Kind::Free;
  int dim = 0;

  // Number of scalar variables this factor occupies.
  int vec_len() const { return kind == Kind::Psd ? dim * dim : dim; }

  static ConeSpec free(int dim) { return {Kind::Free, dim}; }
  static ConeSpec nonneg(int dim) { return {Kind::NonNeg, dim}; }
  static ConeSpec second_order(int dim) { return {Kind::SecondOrder, dim}; }
  static ConeSpec psd(int side) { return {Kind::Psd, side}; }

  friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

int total_vec_len(const std::vector<ConeSpec>& cones);

// Componentwise max with zero.
Eigen::VectorXd project_nonneg(const Eigen::VectorXd& v);

// Projection onto { (t, y) : ||y||_2 <= t }. Empty input is rejected.
Eigen::VectorXd project_soc(const Eigen::VectorXd& v);

// Projection of a vectorized square matrix onto the PSD cone: symmetrize,
// then drop negative eigenvalues. Input length must be a perfect square.
Eigen::VectorXd project_psd(const Eigen::VectorXd& v);

// Applies the factor projections block by block; Free blocks pass through.
Eigen::VectorXd project_product(const Eigen::VectorXd& v, const std::vector<ConeSpec>& cones);
void project_product_inplace(Eigen::VectorXd& v, const std::vector<ConeSpec>& cones);

}  // namespace sosadmm::cones
