#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sosadmm/basis.hpp"
#include "sosadmm/poly.hpp"
#include "sosadmm/poly_text.hpp"
#include "sosadmm/rng.hpp"

using namespace sosadmm;

TEST_CASE("binomial exact values and overflow") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(24, 4) == 10626);
  CHECK(binomial(24, 12) == 2704156);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("multi index basics") {
  const MultiIndex a({1, 0, 2});
  CHECK(a.num_vars() == 3);
  CHECK(a.degree() == 3);
  CHECK(a[2] == 2);
  CHECK(MultiIndex::zero(2).degree() == 0);
  CHECK(MultiIndex::unit(3, 1, 4)[1] == 4);
  CHECK((a + MultiIndex::unit(3, 0)) == MultiIndex({2, 0, 2}));
  CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(a + MultiIndex::zero(2), std::invalid_argument);
}

TEST_CASE("graded lex order matches the documented basis layout") {
  // 1, x1, x2, x1^2, x1*x2, x2^2 for two variables up to degree 2.
  const MonomialBasis b = monomial_basis(2, 2);
  const std::vector<std::vector<int>> expected = {
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  REQUIRE(b.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(b[i].exponents() == expected[i]);

  GradedLexLess less;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    CHECK(less(b[i], b[i + 1]));
    CHECK_FALSE(less(b[i + 1], b[i]));
  }
}

TEST_CASE("basis sizes and lookup") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 4; ++d) {
      const MonomialBasis b = monomial_basis(n, d);
      CHECK(b.size() == binomial(n + d, d));
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.contains(b[i]));
        CHECK(b.index_of(b[i]) == i);
      }
    }
  }
  const MonomialBasis b = monomial_basis(2, 1);
  CHECK_FALSE(b.contains(MultiIndex({1, 1})));
  CHECK_THROWS_AS(b.index_of(MultiIndex({1, 1})), std::out_of_range);
  CHECK_THROWS_AS(monomial_basis(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_basis(2, -1), std::invalid_argument);
}

TEST_CASE("univariate basis is the power sequence") {
  const MonomialBasis b = monomial_basis(1, 3);
  REQUIRE(b.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(b[static_cast<std::size_t>(k)][0] == k);
}

TEST_CASE("polynomial term accumulation prunes exact zeros") {
  Polynomial p(2);
  p.add_term(MultiIndex({1, 1}), 2.0);
  p.add_term(MultiIndex({1, 1}), -2.0);
  CHECK(p.is_zero());
  CHECK(p.degree() == 0);
  p.add_term(MultiIndex({0, 2}), 1.5);
  CHECK(p.term_count() == 1);
  CHECK(p.coeff(MultiIndex({0, 2})) == 1.5);
  CHECK(p.coeff(MultiIndex({2, 0})) == 0.0);
  CHECK(p.degree() == 2);
  CHECK_THROWS_AS(p.add_term(MultiIndex::zero(3), 1.0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x1 = Polynomial::variable(2, 0);
  const Polynomial x2 = Polynomial::variable(2, 1);
  const Polynomial sum = x1 + x2;
  const Polynomial sq = sum * sum;
  CHECK(sq.coeff(MultiIndex({2, 0})) == 1.0);
  CHECK(sq.coeff(MultiIndex({1, 1})) == 2.0);
  CHECK(sq.coeff(MultiIndex({0, 2})) == 1.0);
  CHECK(sq.term_count() == 3);

  CHECK((sq - sq).is_zero());
  CHECK((-sq).coeff(MultiIndex({1, 1})) == -2.0);
  CHECK((3.0 * x1).coeff(MultiIndex({1, 0})) == 3.0);
  CHECK(Polynomial::constant(2, 0.0).is_zero());
  CHECK_THROWS_AS(x1 + Polynomial::variable(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(x1 * Polynomial::variable(3, 0), std::invalid_argument);
}

TEST_CASE("evaluation") {
  // x1*x2 - 3 at (2, 5) = 7
  Polynomial p(2);
  p.add_term(MultiIndex({1, 1}), 1.0);
  p.add_term(MultiIndex::zero(2), -3.0);
  const std::vector<double> pt = {2.0, 5.0};
  CHECK(eval(p, pt) == doctest::Approx(7.0));

  Polynomial q(1);
  q.add_term(MultiIndex::unit(1, 0, 4), 2.0);
  const std::vector<double> pt1 = {-1.5};
  CHECK(eval(q, pt1) == doctest::Approx(2.0 * 5.0625));
}

TEST_CASE("derivative") {
  // d/dx1 (x1^3 x2) = 3 x1^2 x2; d/dx2 = x1^3
  Polynomial p(2);
  p.add_term(MultiIndex({3, 1}), 1.0);
  CHECK(derivative(p, 0).coeff(MultiIndex({2, 1})) == 3.0);
  CHECK(derivative(p, 0).term_count() == 1);
  CHECK(derivative(p, 1).coeff(MultiIndex({3, 0})) == 1.0);
  CHECK(derivative(Polynomial::constant(2, 4.0), 0).is_zero());
  CHECK_THROWS_AS(derivative(p, 2), std::invalid_argument);
}

TEST_CASE("lie derivative along a field") {
  // V = x1^2 along (-x1^3): dV/dx1 * f1 = 2 x1 * (-x1^3) = -2 x1^4
  Polynomial v(1);
  v.add_term(MultiIndex::unit(1, 0, 2), 1.0);
  Polynomial f(1);
  f.add_term(MultiIndex::unit(1, 0, 3), -1.0);
  const Polynomial lie = lie_derivative(v, {f});
  CHECK(lie.term_count() == 1);
  CHECK(lie.coeff(MultiIndex::unit(1, 0, 4)) == -2.0);

  // V = x1^2 + x2^2 along (-x2, x1) vanishes identically.
  Polynomial v2(2);
  v2.add_term(MultiIndex({2, 0}), 1.0);
  v2.add_term(MultiIndex({0, 2}), 1.0);
  Polynomial f1(2), f2(2);
  f1.add_term(MultiIndex({0, 1}), -1.0);
  f2.add_term(MultiIndex({1, 0}), 1.0);
  CHECK(lie_derivative(v2, {f1, f2}).is_zero());

  CHECK_THROWS_AS(lie_derivative(v2, {f1}), std::invalid_argument);
}

TEST_CASE("parser accepts the documented grammar") {
  const Polynomial p = parse_polynomial("2*x1^2*x2 - 3*x3 + 1");
  CHECK(p.num_vars() == 3);
  CHECK(p.coeff(MultiIndex({2, 1, 0})) == 2.0);
  CHECK(p.coeff(MultiIndex({0, 0, 1})) == -3.0);
  CHECK(p.coeff(MultiIndex::zero(3)) == 1.0);

  CHECK(parse_polynomial("-x1^4").coeff(MultiIndex::unit(1, 0, 4)) == -1.0);
  CHECK(parse_polynomial("+0.5*x1").coeff(MultiIndex::unit(1, 0)) == 0.5);
  CHECK(parse_polynomial("1e-3").coeff(MultiIndex::zero(1)) == 1e-3);
  CHECK(parse_polynomial("x1*x1").coeff(MultiIndex::unit(1, 0, 2)) == 1.0);
  CHECK(parse_polynomial("3 - 3").is_zero());
  // Explicit width beats inference.
  CHECK(parse_polynomial("x1 + 1", 4).num_vars() == 4);
}

TEST_CASE("parser rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_polynomial(""), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 + 1"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("2x1"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^-2"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +"), PolyParseError);
  CHECK_THROWS_AS(parse_polynomial("* x1"), PolyParseError);
  try {
    parse_polynomial("x1 + y");
    FAIL("expected a parse error");
  } catch (const PolyParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("printer round-trips through the parser") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    Polynomial p(n);
    const MonomialBasis b = monomial_basis(n, 3);
    for (const MultiIndex& alpha : b.entries()) {
      if (rng.uniform01() < 0.4) p.add_term(alpha, rng.uniform(-5.0, 5.0));
    }
    const Polynomial q = parse_polynomial(to_string(p), n);
    REQUIRE(q.term_count() == p.term_count());
    for (const auto& [alpha, coeff] : p.terms())
      CHECK(q.coeff(alpha) == doctest::Approx(coeff).epsilon(1e-9));
  }
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(parse_polynomial("x1^2 - x2")) == "x1^2 - x2");
}
