#include "sosadmm/report.hpp"

#include <cstdio>

namespace sosadmm {

RunReport make_report(const std::string& problem, const ConicProgram& prog,
                      const admm::Solution& sol, double time_s) {
  RunReport r;
  r.problem = problem;
  for (const auto& cone : prog.cones) {
    if (cone.kind == cones::ConeSpec::Kind::Psd) r.psd_sides.push_back(cone.dim);
  }
  r.m = prog.num_rows();
  r.nvars = prog.num_vars;
  r.status = admm::to_string(sol.status);
  r.iters = sol.iterations;
  r.residuals = sol.residuals;
  r.objective = sol.objective;
  r.time_s = time_s;
  return r;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json j;
  j["problem"] = report.problem;
  j["dims"] = {{"N", report.psd_sides}, {"m", report.m}, {"nvars", report.nvars}};
  j["status"] = report.status;
  j["iters"] = report.iters;
  j["residuals"] = {{"primal", report.residuals.primal},
                    {"dual", report.residuals.dual},
                    {"constraint", report.residuals.constraint}};
  j["objective"] = report.objective;
  j["time_s"] = report.time_s;
  if (report.extra.is_object()) {
    for (const auto& [key, value] : report.extra.items()) j[key] = value;
  }
  return j;
}

std::string csv_header() {
  return "problem,N,m,nvars,status,iters,primal,dual,constraint,objective,time_s";
}

std::string csv_row(const RunReport& report) {
  std::string sides;
  for (std::size_t i = 0; i < report.psd_sides.size(); ++i) {
    if (i) sides += ";";
    sides += std::to_string(report.psd_sides[i]);
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf), ",%zu,%d,%s,%d,%.6e,%.6e,%.6e,%.9g,%.3f", report.m, report.nvars,
                report.status.c_str(), report.iters, report.residuals.primal,
                report.residuals.dual, report.residuals.constraint, report.objective,
                report.time_s);
  return report.problem + "," + sides + buf;
}

}  // namespace sosadmm
