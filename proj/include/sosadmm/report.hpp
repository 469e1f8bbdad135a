#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sosadmm/conic_program.hpp"
#include "sosadmm/solver.hpp"

namespace sosadmm {

// One solve, summarized for the JSON report and the bench CSV table.
struct RunReport {
  std::string problem;
  std::vector<int> psd_sides;  // N per PSD block
  std::size_t m = 0;           // constraint rows
  int nvars = 0;               // stacked variable count
  std::string status;
  int iters = 0;
  admm::Residuals residuals;
  double objective = 0.0;
  double time_s = 0.0;
  // Optional extras merged into the JSON verbatim (oracle post-checks,
  // extracted certificates, ...).
  nlohmann::json extra;
};

RunReport make_report(const std::string& problem, const ConicProgram& prog,
                      const admm::Solution& sol, double time_s);

// {problem, dims:{N:[...], m, nvars}, status, iters,
//  residuals:{primal,dual,constraint}, objective, time_s, ...extra}
nlohmann::json to_json(const RunReport& report);

std::string csv_header();
std::string csv_row(const RunReport& report);

}  // namespace sosadmm
