#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sosadmm/coeff_map.hpp"
#include "sosadmm/compile.hpp"
#include "sosadmm/poly_text.hpp"
#include "sosadmm/rng.hpp"
#include "sosadmm/sos_program.hpp"

using namespace sosadmm;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd gram_product(const ConicProgram& prog) {
  const auto m = static_cast<Eigen::Index>(prog.rows.size());
  Eigen::MatrixXd aat = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const RowData& a = prog.rows[static_cast<std::size_t>(i)];
      const RowData& b = prog.rows[static_cast<std::size_t>(j)];
      double dot = 0.0;
      std::size_t ka = 0, kb = 0;
      while (ka < a.size() && kb < b.size()) {
        if (a.indices[ka] < b.indices[kb]) {
          ++ka;
        } else if (a.indices[ka] > b.indices[kb]) {
          ++kb;
        } else {
          dot += a.values[ka] * b.values[kb];
          ++ka;
          ++kb;
        }
      }
      aat(i, j) = dot;
      aat(j, i) = dot;
    }
  }
  return aat;
}

double apply_row(const RowData& row, const Eigen::VectorXd& x) {
  double out = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) out += row.values[k] * x[row.indices[k]];
  return out;
}

}  // namespace

TEST_CASE("coefficient map enumerates gram positions per candidate monomial") {
  const CoefficientMap cm = coefficient_map(2, 1);
  CHECK(cm.gram_basis().size() == 3);
  CHECK(cm.match_basis().size() == 6);
  REQUIRE(cm.num_matches() == 6);

  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(cm.pairs(0) == Pairs{{0, 0}});          // 1
  CHECK(cm.pairs(1) == Pairs{{0, 1}, {1, 0}});  // x1
  CHECK(cm.pairs(2) == Pairs{{0, 2}, {2, 0}});  // x2
  CHECK(cm.pairs(3) == Pairs{{1, 1}});          // x1^2
  CHECK(cm.pairs(4) == Pairs{{1, 2}, {2, 1}});  // x1*x2
  CHECK(cm.pairs(5) == Pairs{{2, 2}});          // x2^2
  CHECK(cm.multiplicity(1) == 2);
  CHECK(cm.multiplicity(3) == 1);
}

TEST_CASE("feasibility compile of a perfect square") {
  const ConicProgram prog = compile_sos_feasibility(parse_polynomial("x1^2 + 2*x1 + 1"), 1);
  CHECK(prog.num_vars == 4);
  REQUIRE(prog.cones.size() == 1);
  CHECK(prog.cones[0] == cones::ConeSpec::psd(2));
  REQUIRE(prog.rows.size() == 3);

  CHECK(prog.rows[0].indices == std::vector<int>{0});     // constant: X(0,0)
  CHECK(prog.rows[1].indices == std::vector<int>{1, 2});  // x: X(1,0), X(0,1)
  CHECK(prog.rows[2].indices == std::vector<int>{3});     // x^2: X(1,1)
  for (const RowData& row : prog.rows)
    for (double v : row.values) CHECK(v == 1.0);

  CHECK(prog.b[0] == 1.0);
  CHECK(prog.b[1] == 2.0);
  CHECK(prog.b[2] == 1.0);
  CHECK(prog.c.isZero(0.0));
  CHECK(prog.nnz() == 4);

  REQUIRE(prog.layout.grams.size() == 1);
  CHECK(prog.layout.grams[0].offset == 0);
  CHECK(prog.layout.grams[0].side == 2);
  CHECK(prog.layout.free_size == 0);

  CHECK_THROWS_AS(compile_sos_feasibility(parse_polynomial("x1^4"), 1), std::invalid_argument);
}

TEST_CASE("pure matching rows are mutually orthogonal with known row norms") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      const Polynomial one = Polynomial::constant(n, 1.0);
      const ConicProgram prog = compile_sos_feasibility(one, d);
      const CoefficientMap cm = coefficient_map(n, d);
      const Eigen::MatrixXd aat = gram_product(prog);
      for (Eigen::Index i = 0; i < aat.rows(); ++i) {
        for (Eigen::Index j = 0; j < aat.cols(); ++j) {
          const double expected =
              i == j ? static_cast<double>(cm.multiplicity(static_cast<std::size_t>(i))) : 0.0;
          CHECK(aat(i, j) == expected);
        }
      }
      // Every Gram entry is hit exactly once, so the pattern has N^2 nonzeros.
      const std::size_t side = cm.gram_basis().size();
      CHECK(prog.nnz() == side * side);
    }
  }
}

TEST_CASE("matching rows reproduce polynomial multiplication") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int d = 1 + static_cast<int>(rng.below(2));
    const MonomialBasis gram = monomial_basis(n, d);
    const auto side = static_cast<Eigen::Index>(gram.size());

    Eigen::MatrixXd x(side, side);
    for (Eigen::Index i = 0; i < side; ++i)
      for (Eigen::Index j = i; j < side; ++j) {
        x(i, j) = rng.uniform(-1.0, 1.0);
        x(j, i) = x(i, j);
      }

    // p = v'Xv assembled by explicit polynomial products.
    Polynomial p(n);
    for (Eigen::Index i = 0; i < side; ++i)
      for (Eigen::Index j = 0; j < side; ++j)
        p += x(i, j) * (Polynomial::monomial(gram[static_cast<std::size_t>(i)]) *
                        Polynomial::monomial(gram[static_cast<std::size_t>(j)]));

    // The compiled rows applied to vec(X) must produce exactly those
    // coefficients.
    const ConicProgram prog = compile_sos_feasibility(p, d);
    const Eigen::VectorXd xvec =
        Eigen::Map<const Eigen::VectorXd>(x.data(), side * side);
    REQUIRE(prog.rows.size() == static_cast<std::size_t>(prog.b.size()));
    for (std::size_t r = 0; r < prog.rows.size(); ++r) {
      CHECK(apply_row(prog.rows[r], xvec) ==
            doctest::Approx(prog.b[static_cast<Eigen::Index>(r)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("polymin template targets the lower bound parameter") {
  const SosProgram sos = compile_polymin(parse_polynomial("x1^4 - 3*x1^2 + 2"));
  CHECK(sos.num_params == 1);
  CHECK(sos.objective == std::vector<double>{1.0});
  REQUIRE(sos.constraints.size() == 1);
  const SosConstraint& c = sos.constraints[0];
  CHECK(c.num_vars == 1);
  CHECK(c.half_degree == 2);

  const AffineTerm& t0 = c.table.at(MultiIndex::zero(1));
  CHECK(t0.constant == 2.0);
  CHECK(t0.coeffs.at(0) == -1.0);
  CHECK(c.table.at(MultiIndex::unit(1, 0, 2)).constant == -3.0);
  CHECK(c.table.at(MultiIndex::unit(1, 0, 4)).constant == 1.0);
  CHECK(c.table.count(MultiIndex::unit(1, 0, 1)) == 0);
  CHECK(c.table.count(MultiIndex::unit(1, 0, 3)) == 0);

  CHECK_THROWS_AS(compile_polymin(parse_polynomial("x1^3")), std::invalid_argument);
}

TEST_CASE("compiled polymin program structure") {
  const ConicProgram prog =
      compile_sos_program(compile_polymin(parse_polynomial("x1^4 - 3*x1^2 + 2")));
  CHECK(prog.num_vars == 10);  // gamma + 3x3 Gram
  REQUIRE(prog.cones.size() == 2);
  CHECK(prog.cones[0] == cones::ConeSpec::free(1));
  CHECK(prog.cones[1] == cones::ConeSpec::psd(3));
  REQUIRE(prog.rows.size() == 5);

  // Constant coefficient: +gamma column (from -(-1)) plus X(0,0).
  CHECK(prog.rows[0].indices == std::vector<int>{0, 1});
  CHECK(prog.rows[0].values == std::vector<double>{1.0, 1.0});
  CHECK(prog.rows[1].indices == std::vector<int>{2, 4});     // x
  CHECK(prog.rows[2].indices == std::vector<int>{3, 5, 7});  // x^2
  CHECK(prog.rows[3].indices == std::vector<int>{6, 8});     // x^3
  CHECK(prog.rows[4].indices == std::vector<int>{9});        // x^4

  Eigen::VectorXd expected_b(5);
  expected_b << 2.0, 0.0, -3.0, 0.0, 1.0;
  CHECK((prog.b - expected_b).cwiseAbs().maxCoeff() == 0.0);

  CHECK(prog.c[0] == -1.0);  // minimize -gamma = maximize gamma
  CHECK(prog.c.tail(9).isZero(0.0));

  CHECK(prog.layout.free_size == 1);
  REQUIRE(prog.layout.grams.size() == 1);
  CHECK(prog.layout.grams[0].offset == 1);
  CHECK(prog.layout.grams[0].side == 3);
  REQUIRE(prog.layout.constraint_rows.size() == 1);
  CHECK(prog.layout.constraint_rows[0] == std::pair<int, int>{0, 5});
}

TEST_CASE("parameter-free assembly matches the feasibility compiler") {
  const Polynomial p = parse_polynomial("x1^2 + 2*x1*x2 + x2^2 + 1", 2);
  SosProgram sos;
  sos.num_params = 0;
  SosConstraint c;
  c.num_vars = 2;
  c.half_degree = 1;
  for (const auto& [alpha, coeff] : p.terms()) c.table[alpha].constant = coeff;
  sos.constraints.push_back(c);

  CHECK(compile_sos_program(sos) == compile_sos_feasibility(p, 1));
}

TEST_CASE("shared parameters couple matching rows across constraints") {
  // a*x^4 + b*x^2 + x + 1 and b*x^4 + a*x^2 + x + 1 both SOS: the parameter
  // columns make rows from different constraints non-orthogonal.
  SosProgram sos;
  sos.num_params = 2;
  sos.objective = {0.0, 0.0};
  for (int swap = 0; swap < 2; ++swap) {
    SosConstraint c;
    c.num_vars = 1;
    c.half_degree = 2;
    c.table[MultiIndex::zero(1)].constant = 1.0;
    c.table[MultiIndex::unit(1, 0, 1)].constant = 1.0;
    c.table[MultiIndex::unit(1, 0, 2)].coeffs[swap == 0 ? 1 : 0] = 1.0;
    c.table[MultiIndex::unit(1, 0, 4)].coeffs[swap == 0 ? 0 : 1] = 1.0;
    sos.constraints.push_back(std::move(c));
  }
  const ConicProgram prog = compile_sos_program(sos);
  CHECK(prog.num_vars == 2 + 9 + 9);
  REQUIRE(prog.rows.size() == 10);

  const Eigen::MatrixXd aat = gram_product(prog);
  double max_off = 0.0;
  for (Eigen::Index i = 0; i < aat.rows(); ++i)
    for (Eigen::Index j = 0; j < aat.cols(); ++j)
      if (i != j) max_off = std::max(max_off, std::abs(aat(i, j)));
  CHECK(max_off > 0.0);
}

TEST_CASE("quadratic templates") {
  const std::vector<MultiIndex> diag = diagonal_quadratic_template(3);
  REQUIRE(diag.size() == 3);
  CHECK(diag[0] == MultiIndex({2, 0, 0}));
  CHECK(diag[1] == MultiIndex({0, 2, 0}));
  CHECK(diag[2] == MultiIndex({0, 0, 2}));

  const std::vector<MultiIndex> full = full_quadratic_template(2);
  REQUIRE(full.size() == 3);
  CHECK(full[0] == MultiIndex({2, 0}));
  CHECK(full[1] == MultiIndex({1, 1}));
  CHECK(full[2] == MultiIndex({0, 2}));
}

TEST_CASE("global certificate search compiles to two constraints") {
  // f = (-x): V = t*x^2 gives V - eps*x^2 = (t - eps) x^2 and -Vdot = 2t x^2.
  Polynomial f(1);
  f.add_term(MultiIndex::unit(1, 0), -1.0);
  const SosProgram sos = compile_lyapunov({f}, {}, kInf, {MultiIndex::unit(1, 0, 2)}, 1e-3);

  CHECK(sos.num_params == 1);
  CHECK(sos.objective == std::vector<double>{0.0});
  REQUIRE(sos.constraints.size() == 2);

  const SosConstraint& pos = sos.constraints[0];
  CHECK(pos.half_degree == 1);
  REQUIRE(pos.table.size() == 1);
  const AffineTerm& pterm = pos.table.at(MultiIndex::unit(1, 0, 2));
  CHECK(pterm.constant == -1e-3);
  CHECK(pterm.coeffs.at(0) == 1.0);

  const SosConstraint& dec = sos.constraints[1];
  CHECK(dec.half_degree == 1);
  REQUIRE(dec.table.size() == 1);
  CHECK(dec.table.at(MultiIndex::unit(1, 0, 2)).coeffs.at(0) == 2.0);
}

TEST_CASE("ball-restricted search appends one multiplier block") {
  Polynomial f(1);
  f.add_term(MultiIndex::unit(1, 0), -1.0);
  const SosProgram sos = compile_lyapunov({f}, {}, 0.1, {MultiIndex::unit(1, 0, 2)}, 1e-3);

  // Degree-0 multiplier: one extra parameter and a third constraint.
  CHECK(sos.num_params == 2);
  REQUIRE(sos.constraints.size() == 3);

  const SosConstraint& dec = sos.constraints[1];
  CHECK(dec.table.at(MultiIndex::zero(1)).coeffs.at(1) == doctest::Approx(-0.1));
  CHECK(dec.table.at(MultiIndex::unit(1, 0, 2)).coeffs.at(0) == 2.0);
  CHECK(dec.table.at(MultiIndex::unit(1, 0, 2)).coeffs.at(1) == 1.0);

  const SosConstraint& mult = sos.constraints[2];
  CHECK(mult.half_degree == 0);
  CHECK(mult.table.at(MultiIndex::zero(1)).coeffs.at(1) == 1.0);
}

TEST_CASE("denominators are cleared through the other components") {
  // f1 = -x1, f2 = -x2/(x2^2 + 1). Clearing multiplies component 1 by the
  // other denominator, so the Lie derivative of x1^2 becomes
  // 2 x1 * (-x1) * (x2^2 + 1).
  Polynomial f1(2), f2(2), den1(2), den2(2);
  f1.add_term(MultiIndex({1, 0}), -1.0);
  f2.add_term(MultiIndex({0, 1}), -1.0);
  den1.add_term(MultiIndex::zero(2), 1.0);
  den2.add_term(MultiIndex({0, 2}), 1.0);
  den2.add_term(MultiIndex::zero(2), 1.0);

  const SosProgram sos =
      compile_lyapunov({f1, f2}, {den1, den2}, kInf, diagonal_quadratic_template(2), 1e-3);
  const SosConstraint& dec = sos.constraints[1];
  // -Lie(x1^2) = 2 x1^2 (x2^2 + 1) contributes to alpha = x1^2 and x1^2 x2^2.
  CHECK(dec.table.at(MultiIndex({2, 0})).coeffs.at(0) == 2.0);
  CHECK(dec.table.at(MultiIndex({2, 2})).coeffs.at(0) == 2.0);
  // -Lie(x2^2) = 2 x2^2 (only den2's numerator is cleared into row 2's slot).
  CHECK(dec.table.at(MultiIndex({0, 2})).coeffs.at(1) == 2.0);
}

TEST_CASE("degree and input validation of the certificate compiler") {
  Polynomial f(1), fsq(1);
  f.add_term(MultiIndex::unit(1, 0), -1.0);
  fsq.add_term(MultiIndex::unit(1, 0, 2), 1.0);
  const std::vector<MultiIndex> tmpl = {MultiIndex::unit(1, 0, 2)};

  // Lie derivative 2x * x^2 = 2x^3 has odd degree.
  CHECK_THROWS_WITH_AS(compile_lyapunov({fsq}, {}, kInf, tmpl),
                       doctest::Contains("odd"), std::invalid_argument);

  CHECK_THROWS_AS(compile_lyapunov({}, {}, kInf, tmpl), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {fsq, fsq}, kInf, tmpl), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, kInf, tmpl, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, -1.0, tmpl), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, kInf, {}), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, kInf, {MultiIndex::zero(1)}), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, kInf, {tmpl[0], tmpl[0]}), std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {}, kInf, {MultiIndex::unit(2, 0, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compile_lyapunov({f}, {Polynomial(1)}, kInf, tmpl), std::invalid_argument);
}

TEST_CASE("sos program json round trip") {
  const SosProgram sos = compile_polymin(parse_polynomial("x1^4 - 3*x1^2 + 2"));
  const SosProgram back = sos_program_from_json(to_json(sos));
  CHECK(back == sos);
  CHECK(compile_sos_program(back) == compile_sos_program(sos));

  Polynomial f(1);
  f.add_term(MultiIndex::unit(1, 0), -1.0);
  const SosProgram lyap = compile_lyapunov({f}, {}, 0.1, {MultiIndex::unit(1, 0, 2)});
  CHECK(sos_program_from_json(to_json(lyap)) == lyap);
}

TEST_CASE("sos program json rejects malformed input") {
  const SosProgram sos = compile_polymin(parse_polynomial("x1^2 + 1"));
  nlohmann::json j = to_json(sos);

  nlohmann::json dup = j;
  dup["constraints"][0]["terms"].push_back(dup["constraints"][0]["terms"][0]);
  CHECK_THROWS(sos_program_from_json(dup));

  nlohmann::json bad_param = j;
  bad_param["constraints"][0]["terms"][0]["linear"] =
      nlohmann::json::array({nlohmann::json::array({7, 1.0})});
  CHECK_THROWS(sos_program_from_json(bad_param));

  nlohmann::json bad_alpha = j;
  bad_alpha["constraints"][0]["terms"][0]["alpha"] = {1, 2};
  CHECK_THROWS(sos_program_from_json(bad_alpha));
}

TEST_CASE("sos program file round trip") {
  const SosProgram sos = compile_polymin(parse_polynomial("x1^2 + 2*x1 + 1"));
  const std::string path = "sos_roundtrip_tmp.json";
  save_sos_program(sos, path);
  const SosProgram back = load_sos_program(path);
  CHECK(back == sos);
  std::remove(path.c_str());
}
