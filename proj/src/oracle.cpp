#include "sosadmm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sosadmm/rng.hpp"

namespace sosadmm::oracle {

double verify_gram(const Polynomial& p, const Eigen::MatrixXd& x, const MonomialBasis& basis) {
  const auto side = static_cast<Eigen::Index>(basis.size());
  if (x.rows() != side || x.cols() != side)
    throw std::invalid_argument("verify_gram: matrix side must equal basis size");
  // v'Xv assembled with polynomial products only.
  Polynomial q(basis.num_vars());
  for (Eigen::Index i = 0; i < side; ++i) {
    Polynomial row(basis.num_vars());
    for (Eigen::Index j = 0; j < side; ++j) {
      if (x(i, j) == 0.0) continue;
      row += x(i, j) * Polynomial::monomial(basis[static_cast<std::size_t>(j)]);
    }
    q += Polynomial::monomial(basis[static_cast<std::size_t>(i)]) * row;
  }
  q -= p;
  double worst = 0.0;
  for (const auto& [alpha, coeff] : q.terms()) worst = std::max(worst, std::abs(coeff));
  return worst;
}

namespace {

double eval_univariate(const std::vector<double>& coeffs, double t) {
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
  return v;
}

}  // namespace

double univariate_min(const Polynomial& p) {
  if (p.num_vars() != 1) throw std::invalid_argument("univariate_min: polynomial must be univariate");
  const int deg = p.degree();
  std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1, 0.0);
  for (const auto& [alpha, c] : p.terms()) coeffs[static_cast<std::size_t>(alpha[0])] = c;
  if (deg == 0) return coeffs[0];
  if (deg % 2 != 0)
    throw std::invalid_argument("univariate_min: odd degree, unbounded below");
  if (coeffs.back() <= 0.0)
    throw std::invalid_argument("univariate_min: nonpositive leading coefficient, unbounded below");

  // p' and a Cauchy bound enclosing all its roots.
  std::vector<double> dp(static_cast<std::size_t>(deg), 0.0);
  for (int k = 1; k <= deg; ++k) dp[static_cast<std::size_t>(k - 1)] = k * coeffs[static_cast<std::size_t>(k)];
  double ratio = 0.0;
  for (std::size_t k = 0; k + 1 < dp.size(); ++k) ratio = std::max(ratio, std::abs(dp[k] / dp.back()));
  const double radius = 1.0 + ratio;

  const int intervals = 20000;
  double best = std::min(eval_univariate(coeffs, -radius), eval_univariate(coeffs, radius));
  double t_prev = -radius;
  double d_prev = eval_univariate(dp, t_prev);
  for (int i = 1; i <= intervals; ++i) {
    const double t = -radius + 2.0 * radius * i / intervals;
    const double d = eval_univariate(dp, t);
    best = std::min(best, eval_univariate(coeffs, t));
    if ((d_prev <= 0.0 && d >= 0.0) || (d_prev >= 0.0 && d <= 0.0)) {
      double lo = t_prev, hi = t, dlo = d_prev;
      for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dmid = eval_univariate(dp, mid);
        if ((dlo <= 0.0) == (dmid <= 0.0)) {
          lo = mid;
          dlo = dmid;
        } else {
          hi = mid;
        }
      }
      best = std::min(best, eval_univariate(coeffs, 0.5 * (lo + hi)));
    }
    t_prev = t;
    d_prev = d;
  }
  return best;
}

LyapunovSample check_lyapunov_sampled(const Polynomial& v, const std::vector<Polynomial>& f_num,
                                      const std::vector<Polynomial>& f_den, double radius_sq,
                                      int samples, std::uint64_t seed) {
  const int n = v.num_vars();
  if (static_cast<int>(f_num.size()) != n)
    throw std::invalid_argument("check_lyapunov_sampled: field size must equal num_vars");
  if (!f_den.empty() && f_den.size() != f_num.size())
    throw std::invalid_argument("check_lyapunov_sampled: f_den must be empty or match f_num");
  if (!(radius_sq > 0.0) || !std::isfinite(radius_sq))
    throw std::invalid_argument("check_lyapunov_sampled: radius_sq must be positive and finite");
  if (samples < 1) throw std::invalid_argument("check_lyapunov_sampled: samples must be >= 1");

  std::vector<Polynomial> dv;
  dv.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dv.push_back(derivative(v, i));

  Rng rng(seed);
  std::vector<double> point(static_cast<std::size_t>(n));
  LyapunovSample out;
  bool first = true;
  const double radius = std::sqrt(radius_sq);
  for (int s = 0; s < samples; ++s) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& xi : point) {
        xi = rng.normal();
        norm += xi * xi;
      }
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        const double r = radius * std::pow(rng.uniform01(), 1.0 / n);
        for (double& xi : point) xi *= r / norm;
        norm = r;
      }
    } while (norm <= 1e-6);

    const double vv = eval(v, point);
    double vdot = 0.0;
    for (int i = 0; i < n; ++i) {
      double term = eval(dv[static_cast<std::size_t>(i)], point) *
                    eval(f_num[static_cast<std::size_t>(i)], point);
      if (!f_den.empty()) {
        const double den = eval(f_den[static_cast<std::size_t>(i)], point);
        if (den <= 0.0)
          throw std::runtime_error("check_lyapunov_sampled: denominator is not positive at a sample");
        term /= den;
      }
      vdot += term;
    }
    if (first) {
      out.min_v = vv;
      out.max_vdot = vdot;
      first = false;
    } else {
      out.min_v = std::min(out.min_v, vv);
      out.max_vdot = std::max(out.max_vdot, vdot);
    }
  }
  return out;
}

double sample_min(const Polynomial& p, int samples, std::uint64_t seed, double half_width) {
  if (samples < 1) throw std::invalid_argument("sample_min: samples must be >= 1");
  if (!(half_width > 0.0)) throw std::invalid_argument("sample_min: half_width must be positive");
  Rng rng(seed);
  std::vector<double> point(static_cast<std::size_t>(p.num_vars()));
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (double& xi : point) xi = rng.uniform(-half_width, half_width);
    const double v = eval(p, point);
    if (s == 0 || v < best) best = v;
  }
  return best;
}

std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jacobi_eigenvalues: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) throw std::invalid_argument("jacobi_eigenvalues: empty matrix");
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  const double scale = a.norm();
  if (scale == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);
  const double eff_tol = std::max(tol * 1e-4, 1e-15) * scale;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off2 = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off2 += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off2) <= eff_tol) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigs(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double psd_check(const Eigen::MatrixXd& m, double tol) {
  return jacobi_eigenvalues(m, tol).front();
}

}  // namespace sosadmm::oracle
