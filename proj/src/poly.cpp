#include "sosadmm/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace sosadmm {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
  }
}

MultiIndex MultiIndex::zero(int num_vars) {
  if (num_vars < 0) throw std::invalid_argument("MultiIndex: negative num_vars");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(num_vars), 0));
}

MultiIndex MultiIndex::unit(int num_vars, int var, int power) {
  if (var < 0 || var >= num_vars) throw std::invalid_argument("MultiIndex: variable out of range");
  MultiIndex a = zero(num_vars);
  a.exps_[static_cast<std::size_t>(var)] = power;
  if (power < 0) throw std::invalid_argument("MultiIndex: negative exponent");
  return a;
}

int MultiIndex::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (exps_.size() != other.exps_.size())
    throw std::invalid_argument("MultiIndex: num_vars mismatch in sum");
  MultiIndex out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree the lexicographically larger exponent vector comes first,
  // so x1^2 precedes x1*x2 precedes x2^2.
  return a.exponents() > b.exponents();
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(a.num_vars());
  for (int e : a.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("Polynomial: negative num_vars");
}

Polynomial Polynomial::constant(int num_vars, double value) {
  Polynomial p(num_vars);
  p.add_term(MultiIndex::zero(num_vars), value);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int var) {
  Polynomial p(num_vars);
  p.add_term(MultiIndex::unit(num_vars, var), 1.0);
  return p;
}

Polynomial Polynomial::monomial(MultiIndex alpha, double coeff) {
  Polynomial p(alpha.num_vars());
  p.add_term(alpha, coeff);
  return p;
}

int Polynomial::degree() const {
  // Terms are graded-lex ordered, so the last one has maximal degree.
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();
}

double Polynomial::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

Polynomial& Polynomial::add_term(const MultiIndex& alpha, double c) {
  if (alpha.num_vars() != num_vars_)
    throw std::invalid_argument("Polynomial: term num_vars mismatch");
  if (c == 0.0) return *this;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("Polynomial: num_vars mismatch in sum");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("Polynomial: num_vars mismatch in difference");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_)
    throw std::invalid_argument("Polynomial: num_vars mismatch in product");
  Polynomial out(a.num_vars_);
  for (const auto& [ae, ac] : a.terms_)
    for (const auto& [be, bc] : b.terms_) out.add_term(ae + be, ac * bc);
  return out;
}

double eval(const Polynomial& p, std::span<const double> point) {
  if (static_cast<int>(point.size()) != p.num_vars())
    throw std::invalid_argument("eval: point dimension mismatch");
  double total = 0.0;
  for (const auto& [a, c] : p.terms()) {
    double m = c;
    for (int i = 0; i < a.num_vars(); ++i) {
      int e = a[i];
      if (e == 1) {
        m *= point[static_cast<std::size_t>(i)];
      } else if (e > 1) {
        m *= std::pow(point[static_cast<std::size_t>(i)], e);
      }
    }
    total += m;
  }
  return total;
}

Polynomial derivative(const Polynomial& p, int var) {
  if (var < 0 || var >= p.num_vars())
    throw std::invalid_argument("derivative: variable out of range");
  Polynomial out(p.num_vars());
  for (const auto& [a, c] : p.terms()) {
    int e = a[var];
    if (e == 0) continue;
    std::vector<int> exps = a.exponents();
    exps[static_cast<std::size_t>(var)] = e - 1;
    out.add_term(MultiIndex(std::move(exps)), c * e);
  }
  return out;
}

Polynomial lie_derivative(const Polynomial& v, const std::vector<Polynomial>& field) {
  if (static_cast<int>(field.size()) != v.num_vars())
    throw std::invalid_argument("lie_derivative: field size must equal num_vars");
  Polynomial out(v.num_vars());
  for (int i = 0; i < v.num_vars(); ++i) {
    out += derivative(v, i) * field[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace sosadmm
