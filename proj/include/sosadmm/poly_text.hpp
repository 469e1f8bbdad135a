#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sosadmm/poly.hpp"

namespace sosadmm {

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& msg, std::size_t pos);
  // 0-based character offset into the input where parsing failed.
  std::size_t position;
};

// Parses sums of terms over variables x1..xn, e.g. "2*x1^2*x2 - 3*x3 + 1".
// Factors within a term are joined by '*'; exponents use '^' with a
// non-negative integer; coefficients are C-locale decimals (scientific
// notation allowed). If num_vars < 0 the variable count is inferred from the
// largest index that appears (at least 1).
Polynomial parse_polynomial(std::string_view text, int num_vars = -1);

// Inverse of parse_polynomial up to coefficient rounding (%.12g). Terms are
// printed highest degree first; the zero polynomial prints as "0".
std::string to_string(const Polynomial& p);

}  // namespace sosadmm
