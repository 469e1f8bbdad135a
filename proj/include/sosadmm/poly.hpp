#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sosadmm {

// Exponent vector of a monomial in variables x1..xn.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zero(int num_vars);
  // x_var^power (var is 0-based).
  static MultiIndex unit(int num_vars, int var, int power = 1);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Componentwise sum; operands must agree on num_vars.
  MultiIndex operator+(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exps_;
};

// Graded lexicographic order: lower total degree first, ties broken so that
// within a degree the first variable dominates (1, x1, x2, x1^2, x1*x2, x2^2, ...).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const;
};

// Sparse polynomial with real coefficients. Terms with zero coefficient are
// never stored, so equality of the term maps is equality of polynomials.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, double, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(int num_vars);

  static Polynomial constant(int num_vars, double value);
  static Polynomial variable(int num_vars, int var);
  static Polynomial monomial(MultiIndex alpha, double coeff = 1.0);

  int num_vars() const { return num_vars_; }
  int degree() const;  // 0 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  double coeff(const MultiIndex& alpha) const;

  // Accumulates c * x^alpha, dropping the term if the result cancels.
  Polynomial& add_term(const MultiIndex& alpha, double c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int num_vars_ = 0;
  TermMap terms_;
};

double eval(const Polynomial& p, std::span<const double> point);

Polynomial derivative(const Polynomial& p, int var);

// Sum over i of dV/dx_i * field[i]; field must have one component per variable.
Polynomial lie_derivative(const Polynomial& v, const std::vector<Polynomial>& field);

}  // namespace sosadmm
