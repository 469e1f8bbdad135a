#include "sosadmm/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <utility>
#include <vector>

namespace sosadmm {

PolyParseError::PolyParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos); }

  double number() {
    double value = 0.0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr == first) fail("expected a number");
    pos += static_cast<std::size_t>(res.ptr - first);
    return value;
  }

  int integer(const char* what) {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr == first) fail(std::string("expected ") + what);
    pos += static_cast<std::size_t>(res.ptr - first);
    return value;
  }
};

struct RawTerm {
  double coeff = 1.0;
  std::map<int, int> exps;  // 0-based variable -> exponent
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty polynomial");

  std::vector<RawTerm> terms;
  int max_var = 0;  // 1-based; 0 means no variable seen
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) {
      if (first) c.fail("expected a term");
      break;
    }
    double sign = 1.0;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1.0;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }

    RawTerm term;
    term.coeff = sign;
    bool more_factors = true;
    while (more_factors) {
      c.skip_ws();
      if (c.done()) c.fail("expected a coefficient or variable");
      char ch = c.peek();
      if (ch == 'x') {
        ++c.pos;
        int idx = c.integer("a variable index after 'x'");
        if (idx < 1) c.fail("variable indices start at x1");
        if (num_vars >= 0 && idx > num_vars) c.fail("variable index exceeds num_vars");
        int exp = 1;
        if (c.pos < text.size() && c.peek() == '^') {
          ++c.pos;
          exp = c.integer("an exponent after '^'");
          if (exp < 0) c.fail("exponent must be non-negative");
        }
        term.exps[idx - 1] += exp;
        max_var = std::max(max_var, idx);
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        term.coeff *= c.number();
      } else {
        c.fail("expected a coefficient or variable");
      }
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
      } else {
        more_factors = false;
      }
    }
    terms.push_back(std::move(term));
    first = false;
  }

  int nv = num_vars >= 0 ? num_vars : std::max(max_var, 1);
  if (nv < 1) throw PolyParseError("num_vars must be >= 1", 0);
  Polynomial p(nv);
  for (const RawTerm& t : terms) {
    std::vector<int> exps(static_cast<std::size_t>(nv), 0);
    for (auto [var, e] : t.exps) exps[static_cast<std::size_t>(var)] = e;
    p.add_term(MultiIndex(std::move(exps)), t.coeff);
  }
  return p;
}

namespace {

std::string format_coeff(double c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", c);
  return buf;
}

std::string format_monomial(const MultiIndex& a) {
  std::string s;
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<MultiIndex, double>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.degree(), db = b.first.degree();
    if (da != db) return da > db;
    return a.first.exponents() > b.first.exponents();
  });
  std::string out;
  for (const auto& [alpha, coeff] : terms) {
    std::string mono = format_monomial(alpha);
    std::string token;
    if (mono.empty()) {
      token = format_coeff(coeff);
    } else if (coeff == 1.0) {
      token = mono;
    } else if (coeff == -1.0) {
      token = "-" + mono;
    } else {
      token = format_coeff(coeff) + "*" + mono;
    }
    if (out.empty()) {
      out = token;
    } else if (token[0] == '-') {
      out += " - " + token.substr(1);
    } else {
      out += " + " + token;
    }
  }
  return out;
}

}  // namespace sosadmm
