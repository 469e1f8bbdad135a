#include "sosadmm/sos_program.hpp"

#include <fstream>
#include <stdexcept>

namespace sosadmm {

void SosProgram::validate() const {
  if (num_params < 0) throw std::invalid_argument("SosProgram: negative num_params");
  if (static_cast<int>(objective.size()) != num_params)
    throw std::invalid_argument("SosProgram: objective length != num_params");
  if (constraints.empty()) throw std::invalid_argument("SosProgram: no constraints");
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const SosConstraint& c = constraints[k];
    const std::string where = "SosProgram: constraint " + std::to_string(k);
    if (c.num_vars < 1) throw std::invalid_argument(where + " has num_vars < 1");
    if (c.half_degree < 0) throw std::invalid_argument(where + " has negative half_degree");
    for (const auto& [alpha, term] : c.table) {
      if (alpha.num_vars() != c.num_vars)
        throw std::invalid_argument(where + " has a monomial of wrong dimension");
      if (alpha.degree() > 2 * c.half_degree)
        throw std::invalid_argument(where + " has a monomial above degree 2*half_degree");
      for (const auto& [idx, coeff] : term.coeffs) {
        if (idx < 0 || idx >= num_params)
          throw std::invalid_argument(where + " references a parameter out of range");
        if (coeff == 0.0) throw std::invalid_argument(where + " stores an explicit zero coefficient");
      }
    }
  }
}

Polynomial constraint_polynomial(const SosConstraint& c, std::span<const double> params) {
  Polynomial p(c.num_vars);
  for (const auto& [alpha, term] : c.table) {
    double value = term.constant;
    for (const auto& [idx, coeff] : term.coeffs) {
      if (idx < 0 || idx >= static_cast<int>(params.size()))
        throw std::invalid_argument("constraint_polynomial: parameter index out of range");
      value += coeff * params[static_cast<std::size_t>(idx)];
    }
    p.add_term(alpha, value);
  }
  return p;
}

nlohmann::json to_json(const SosProgram& prog) {
  nlohmann::json j;
  j["num_params"] = prog.num_params;
  j["objective"] = prog.objective;
  j["constraints"] = nlohmann::json::array();
  for (const SosConstraint& c : prog.constraints) {
    nlohmann::json jc;
    jc["num_vars"] = c.num_vars;
    jc["half_degree"] = c.half_degree;
    jc["terms"] = nlohmann::json::array();
    for (const auto& [alpha, term] : c.table) {
      nlohmann::json jt;
      jt["alpha"] = alpha.exponents();
      jt["constant"] = term.constant;
      auto linear = nlohmann::json::array();
      for (const auto& [idx, coeff] : term.coeffs) linear.push_back({idx, coeff});
      jt["linear"] = std::move(linear);
      jc["terms"].push_back(std::move(jt));
    }
    j["constraints"].push_back(std::move(jc));
  }
  return j;
}

SosProgram sos_program_from_json(const nlohmann::json& j) {
  SosProgram prog;
  prog.num_params = j.at("num_params").get<int>();
  prog.objective = j.at("objective").get<std::vector<double>>();
  for (const auto& jc : j.at("constraints")) {
    SosConstraint c;
    c.num_vars = jc.at("num_vars").get<int>();
    c.half_degree = jc.at("half_degree").get<int>();
    for (const auto& jt : jc.at("terms")) {
      MultiIndex alpha(jt.at("alpha").get<std::vector<int>>());
      AffineTerm term;
      term.constant = jt.at("constant").get<double>();
      if (jt.contains("linear")) {
        for (const auto& entry : jt.at("linear")) {
          if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("SosProgram json: linear entries must be [index, coeff]");
          int idx = entry[0].get<int>();
          double coeff = entry[1].get<double>();
          if (coeff != 0.0) term.coeffs[idx] = coeff;
        }
      }
      if (!c.table.emplace(std::move(alpha), std::move(term)).second)
        throw std::invalid_argument("SosProgram json: duplicate monomial in constraint table");
    }
    prog.constraints.push_back(std::move(c));
  }
  prog.validate();
  return prog;
}

void save_sos_program(const SosProgram& prog, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json(prog).dump(2) << "\n";
}

SosProgram load_sos_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  in >> j;
  return sos_program_from_json(j);
}

}  // namespace sosadmm
