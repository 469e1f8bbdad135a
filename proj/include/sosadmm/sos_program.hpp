#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sosadmm/poly.hpp"

namespace sosadmm {

// Coefficient of one candidate monomial: constant + sum_k coeffs[k] * u[k],
// affine in the scalar parameters u.
struct AffineTerm {
  double constant = 0.0;
  std::map<int, double> coeffs;  // parameter index -> coefficient

  friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
};

// "q(x) is SOS" where q's coefficients are affine in the parameters: the
// table maps each monomial alpha (|alpha| <= 2*half_degree) to its affine
// coefficient. Monomials absent from the table have coefficient zero but
// still generate matching rows.
struct SosConstraint {
  int num_vars = 0;
  int half_degree = 0;
  std::map<MultiIndex, AffineTerm, GradedLexLess> table;

  friend bool operator==(const SosConstraint&, const SosConstraint&) = default;
};

// maximize objective'u subject to every constraint polynomial being SOS.
struct SosProgram {
  int num_params = 0;
  std::vector<double> objective;
  std::vector<SosConstraint> constraints;

  // Throws std::invalid_argument on inconsistent sizes, out-of-range
  // parameter indices, or table entries above the degree bound.
  void validate() const;

  friend bool operator==(const SosProgram&, const SosProgram&) = default;
};

// The constraint polynomial at a concrete parameter vector.
Polynomial constraint_polynomial(const SosConstraint& c, std::span<const double> params);

// JSON round-trip. Schema:
// {
//   "num_params": t,
//   "objective": [t reals],
//   "constraints": [
//     {"num_vars": n, "half_degree": d,
//      "terms": [{"alpha": [n ints], "constant": real,
//                 "linear": [[param_index, coeff], ...]}, ...]}
//   ]
// }
// Terms with constant 0 and empty linear part may be omitted.
nlohmann::json to_json(const SosProgram& prog);
SosProgram sos_program_from_json(const nlohmann::json& j);

void save_sos_program(const SosProgram& prog, const std::string& path);
SosProgram load_sos_program(const std::string& path);

}  // namespace sosadmm
