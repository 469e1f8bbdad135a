#include "sosadmm/compile.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "sosadmm/coeff_map.hpp"

namespace sosadmm {

namespace {

// Vectorized position of Gram entry (row i, col j) in a side-N column-major block.
inline int vec_pos(std::size_t i, std::size_t j, std::size_t side) {
  return static_cast<int>(j * side + i);
}

}  // namespace

ConicProgram compile_sos_feasibility(const Polynomial& p, int half_degree) {
  if (p.num_vars() < 1)
    throw std::invalid_argument("compile_sos_feasibility: polynomial needs at least one variable");
  if (half_degree < 0) throw std::invalid_argument("compile_sos_feasibility: negative half_degree");
  if (p.degree() > 2 * half_degree)
    throw std::invalid_argument("compile_sos_feasibility: deg(p) = " + std::to_string(p.degree()) +
                                " exceeds 2*half_degree = " + std::to_string(2 * half_degree));

  const CoefficientMap cm(p.num_vars(), half_degree);
  const std::size_t side = cm.gram_basis().size();
  const std::size_t m = cm.num_matches();

  ConicProgram prog;
  prog.num_vars = static_cast<int>(side * side);
  prog.cones = {cones::ConeSpec::psd(static_cast<int>(side))};
  prog.b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
  prog.c = Eigen::VectorXd::Zero(prog.num_vars);
  prog.rows.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    RowData row;
    row.indices.reserve(cm.pairs(a).size());
    for (auto [i, j] : cm.pairs(a)) row.indices.push_back(vec_pos(i, j, side));
    std::sort(row.indices.begin(), row.indices.end());
    row.values.assign(row.indices.size(), 1.0);
    prog.rows.push_back(std::move(row));
    prog.b[static_cast<Eigen::Index>(a)] = p.coeff(cm.match_basis()[a]);
  }
  prog.layout.free_size = 0;
  prog.layout.grams = {{0, static_cast<int>(side), p.num_vars(), half_degree}};
  prog.layout.constraint_rows = {{0, static_cast<int>(m)}};
  prog.validate();
  return prog;
}

ConicProgram compile_sos_program(const SosProgram& sos) {
  sos.validate();
  const int t = sos.num_params;

  std::vector<CoefficientMap> maps;
  maps.reserve(sos.constraints.size());
  int num_vars = t;
  for (const SosConstraint& c : sos.constraints) {
    maps.emplace_back(c.num_vars, c.half_degree);
    const std::size_t side = maps.back().gram_basis().size();
    num_vars += static_cast<int>(side * side);
  }

  ConicProgram prog;
  prog.num_vars = num_vars;
  prog.layout.free_size = t;
  if (t > 0) prog.cones.push_back(cones::ConeSpec::free(t));

  std::vector<double> bvals;
  int offset = t;
  for (std::size_t k = 0; k < sos.constraints.size(); ++k) {
    const SosConstraint& c = sos.constraints[k];
    const CoefficientMap& cm = maps[k];
    const std::size_t side = cm.gram_basis().size();
    prog.cones.push_back(cones::ConeSpec::psd(static_cast<int>(side)));
    prog.layout.grams.push_back({offset, static_cast<int>(side), c.num_vars, c.half_degree});

    const int row_begin = static_cast<int>(prog.rows.size());
    for (std::size_t a = 0; a < cm.num_matches(); ++a) {
      RowData row;
      double constant = 0.0;
      auto it = c.table.find(cm.match_basis()[a]);
      if (it != c.table.end()) {
        constant = it->second.constant;
        // Parameter columns first (they sit below the Gram offsets).
        for (const auto& [pidx, coeff] : it->second.coeffs) {
          row.indices.push_back(pidx);
          row.values.push_back(-coeff);
        }
      }
      std::vector<int> gpos;
      gpos.reserve(cm.pairs(a).size());
      for (auto [i, j] : cm.pairs(a)) gpos.push_back(offset + vec_pos(i, j, side));
      std::sort(gpos.begin(), gpos.end());
      for (int g : gpos) {
        row.indices.push_back(g);
        row.values.push_back(1.0);
      }
      prog.rows.push_back(std::move(row));
      bvals.push_back(constant);
    }
    prog.layout.constraint_rows.emplace_back(row_begin, static_cast<int>(prog.rows.size()));
    offset += static_cast<int>(side * side);
  }

  prog.b = Eigen::Map<const Eigen::VectorXd>(bvals.data(), static_cast<Eigen::Index>(bvals.size()));
  prog.c = Eigen::VectorXd::Zero(num_vars);
  for (int p = 0; p < t; ++p) prog.c[p] = -sos.objective[static_cast<std::size_t>(p)];
  prog.validate();
  return prog;
}

SosProgram compile_polymin(const Polynomial& p) {
  if (p.num_vars() < 1)
    throw std::invalid_argument("compile_polymin: polynomial needs at least one variable");
  const int deg = p.degree();
  if (deg % 2 != 0)
    throw std::invalid_argument("compile_polymin: degree " + std::to_string(deg) +
                                " is odd; no sum-of-squares lower bound exists");
  SosProgram sos;
  sos.num_params = 1;          // the lower bound gamma
  sos.objective = {1.0};       // maximize gamma
  SosConstraint c;
  c.num_vars = p.num_vars();
  c.half_degree = deg / 2;
  for (const auto& [alpha, coeff] : p.terms()) c.table[alpha].constant = coeff;
  c.table[MultiIndex::zero(p.num_vars())].coeffs[0] = -1.0;  // p(x) - gamma
  sos.constraints.push_back(std::move(c));
  return sos;
}

std::vector<MultiIndex> diagonal_quadratic_template(int n) {
  if (n < 1) throw std::invalid_argument("diagonal_quadratic_template: n must be >= 1");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(MultiIndex::unit(n, i, 2));
  return out;
}

std::vector<MultiIndex> full_quadratic_template(int n) {
  if (n < 1) throw std::invalid_argument("full_quadratic_template: n must be >= 1");
  std::vector<MultiIndex> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      MultiIndex m = MultiIndex::unit(n, i);
      out.push_back(m + MultiIndex::unit(n, j));
    }
  }
  return out;
}

namespace {

void prune_zero_coeffs(SosConstraint& c) {
  for (auto it = c.table.begin(); it != c.table.end();) {
    auto& coeffs = it->second.coeffs;
    for (auto jt = coeffs.begin(); jt != coeffs.end();) {
      if (jt->second == 0.0) {
        jt = coeffs.erase(jt);
      } else {
        ++jt;
      }
    }
    if (it->second.constant == 0.0 && coeffs.empty()) {
      it = c.table.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

SosProgram compile_lyapunov(const std::vector<Polynomial>& f_num,
                            const std::vector<Polynomial>& f_den, double radius_sq,
                            const std::vector<MultiIndex>& v_template, double eps) {
  const int n = static_cast<int>(f_num.size());
  if (n < 1) throw std::invalid_argument("compile_lyapunov: empty vector field");
  if (!f_den.empty() && f_den.size() != f_num.size())
    throw std::invalid_argument("compile_lyapunov: f_den must be empty or match f_num in length");
  for (const Polynomial& p : f_num) {
    if (p.num_vars() != n)
      throw std::invalid_argument("compile_lyapunov: component num_vars must equal the state dimension");
  }
  for (const Polynomial& p : f_den) {
    if (p.num_vars() != n)
      throw std::invalid_argument("compile_lyapunov: denominator num_vars must equal the state dimension");
    if (p.is_zero()) throw std::invalid_argument("compile_lyapunov: zero denominator");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("compile_lyapunov: eps must be positive");
  if (!(radius_sq > 0.0)) throw std::invalid_argument("compile_lyapunov: radius_sq must be positive");
  if (v_template.empty()) throw std::invalid_argument("compile_lyapunov: empty template");
  {
    std::set<MultiIndex, GradedLexLess> seen;
    for (const MultiIndex& tau : v_template) {
      if (tau.num_vars() != n)
        throw std::invalid_argument("compile_lyapunov: template monomial has wrong dimension");
      if (tau.degree() < 1)
        throw std::invalid_argument("compile_lyapunov: template monomials need degree >= 1 (V(0) = 0)");
      if (!seen.insert(tau).second)
        throw std::invalid_argument("compile_lyapunov: duplicate template monomial");
    }
  }
  const bool global = std::isinf(radius_sq);
  const int t_v = static_cast<int>(v_template.size());

  std::vector<Polynomial> dens(f_den.begin(), f_den.end());
  if (dens.empty()) dens.assign(static_cast<std::size_t>(n), Polynomial::constant(n, 1.0));

  // cleared[i] = f_num[i] * prod_{l != i} dens[l], via prefix/suffix products.
  std::vector<Polynomial> prefix(static_cast<std::size_t>(n) + 1, Polynomial::constant(n, 1.0));
  std::vector<Polynomial> suffix(static_cast<std::size_t>(n) + 1, Polynomial::constant(n, 1.0));
  for (int i = 0; i < n; ++i)
    prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] * dens[static_cast<std::size_t>(i)];
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] * dens[static_cast<std::size_t>(i)];
  std::vector<Polynomial> cleared;
  cleared.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    cleared.push_back(f_num[static_cast<std::size_t>(i)] *
                      (prefix[static_cast<std::size_t>(i)] * suffix[static_cast<std::size_t>(i) + 1]));

  // Cleared Lie derivative of each template monomial.
  std::vector<Polynomial> lie;
  lie.reserve(v_template.size());
  int lie_deg = 0;
  for (const MultiIndex& tau : v_template) {
    Polynomial q = sosadmm::lie_derivative(Polynomial::monomial(tau), cleared);
    lie_deg = std::max(lie_deg, q.is_zero() ? 0 : q.degree());
    lie.push_back(std::move(q));
  }
  if (lie_deg % 2 != 0)
    throw std::invalid_argument(
        "compile_lyapunov: cleared decrease condition has odd degree " + std::to_string(lie_deg) +
        "; no sum-of-squares representation exists for this template/system pair");

  const int sigma_deg = global ? 0 : std::max(lie_deg - 2, 0);
  std::vector<MultiIndex> sigma_monos;
  if (!global) sigma_monos = monomial_basis(n, sigma_deg).entries();
  const int t_sigma = static_cast<int>(sigma_monos.size());

  SosProgram sos;
  sos.num_params = t_v + t_sigma;
  sos.objective.assign(static_cast<std::size_t>(sos.num_params), 0.0);

  // (i) V - eps * ||x||^2 is SOS.
  {
    SosConstraint c;
    c.num_vars = n;
    int deg_v = 2;
    for (const MultiIndex& tau : v_template) deg_v = std::max(deg_v, tau.degree());
    if (deg_v % 2 != 0)
      throw std::invalid_argument("compile_lyapunov: template degree " + std::to_string(deg_v) +
                                  " is odd; V cannot be SOS-bounded below");
    c.half_degree = deg_v / 2;
    for (int j = 0; j < t_v; ++j) c.table[v_template[static_cast<std::size_t>(j)]].coeffs[j] += 1.0;
    for (int i = 0; i < n; ++i) c.table[MultiIndex::unit(n, i, 2)].constant -= eps;
    prune_zero_coeffs(c);
    sos.constraints.push_back(std::move(c));
  }

  // (ii) -(cleared Lie derivative of V) - sigma * (radius_sq - ||x||^2) is SOS;
  // the sigma term is omitted for a global certificate.
  {
    SosConstraint c;
    c.num_vars = n;
    c.half_degree = std::max(lie_deg, global ? 0 : sigma_deg + 2) / 2;
    for (int j = 0; j < t_v; ++j) {
      for (const auto& [alpha, coeff] : lie[static_cast<std::size_t>(j)].terms())
        c.table[alpha].coeffs[j] -= coeff;
    }
    if (!global) {
      Polynomial ball = Polynomial::constant(n, radius_sq);
      for (int i = 0; i < n; ++i) ball.add_term(MultiIndex::unit(n, i, 2), -1.0);
      for (int s = 0; s < t_sigma; ++s) {
        Polynomial prod = Polynomial::monomial(sigma_monos[static_cast<std::size_t>(s)]) * ball;
        for (const auto& [alpha, coeff] : prod.terms()) c.table[alpha].coeffs[t_v + s] -= coeff;
      }
    }
    prune_zero_coeffs(c);
    sos.constraints.push_back(std::move(c));
  }

  // (iii) sigma itself is SOS.
  if (!global) {
    SosConstraint c;
    c.num_vars = n;
    c.half_degree = sigma_deg / 2;
    for (int s = 0; s < t_sigma; ++s) c.table[sigma_monos[static_cast<std::size_t>(s)]].coeffs[t_v + s] += 1.0;
    sos.constraints.push_back(std::move(c));
  }

  sos.validate();
  return sos;
}

}  // namespace sosadmm
