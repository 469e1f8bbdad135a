#include "sosadmm/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sosadmm/bench.hpp"
#include "sosadmm/certificate.hpp"
#include "sosadmm/compile.hpp"
#include "sosadmm/oracle.hpp"
#include "sosadmm/poly_text.hpp"
#include "sosadmm/report.hpp"
#include "sosadmm/sdpa.hpp"
#include "sosadmm/sos_program.hpp"

namespace sosadmm::cli {

namespace {

struct TimedSolve {
  admm::Solution solution;
  double time_s = 0.0;
};

TimedSolve solve_timed(const ConicProgram& prog, const SolveOpts& opts, std::ofstream* log_file) {
  admm::SolverOptions sopts;
  sopts.tol = opts.tol;
  sopts.max_iter = opts.max_iter;
  sopts.rho_init = opts.rho;
  if (log_file != nullptr) {
    sopts.log_stream = log_file;
    sopts.log_every = opts.log_every > 0 ? opts.log_every : 25;
  }
  const auto t0 = std::chrono::steady_clock::now();
  TimedSolve out{admm::solve(prog, sopts), 0.0};
  out.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

void finish_report(const RunReport& report, const SolveOpts& opts, std::ostream& out) {
  const nlohmann::json j = to_json(report);
  out << j.dump(2) << "\n";
  if (!opts.report_path.empty()) {
    std::ofstream f = open_or_throw(opts.report_path);
    f << j.dump(2) << "\n";
  }
}

int exit_code(const admm::Solution& sol) {
  return sol.status == admm::Status::Solved ? 0 : 2;
}

// Subcommand-level objective: compiled programs maximize, the solver
// minimizes c'x with c negated, so flip the sign back for reporting.
double problem_objective(const admm::Solution& sol) { return -sol.objective; }

std::vector<MultiIndex> make_template(const std::string& kind, int n) {
  if (kind == "diagonal") return diagonal_quadratic_template(n);
  if (kind == "quadratic") return full_quadratic_template(n);
  throw std::invalid_argument("unknown template kind: " + kind +
                              " (expected 'diagonal' or 'quadratic')");
}

}  // namespace

int thread_budget() {
  const char* env = std::getenv("SOSADMM_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(std::min(v, 256L));
}

int run_polymin(const PolyminSpec& spec, const SolveOpts& opts, std::ostream& out) {
  const Polynomial p = parse_polynomial(spec.poly_text, spec.num_vars);
  const SosProgram sos = compile_polymin(p);
  if (!spec.emit_sos.empty()) save_sos_program(sos, spec.emit_sos);
  const ConicProgram prog = compile_sos_program(sos);

  std::ofstream log_file;
  if (!opts.log_path.empty()) log_file = open_or_throw(opts.log_path);
  const TimedSolve ts = solve_timed(prog, opts, opts.log_path.empty() ? nullptr : &log_file);

  RunReport report = make_report("polymin", prog, ts.solution, ts.time_s);
  report.objective = problem_objective(ts.solution);

  const Certificate cert = extract_certificate(ts.solution, prog);
  const double gamma = cert.params[0];
  Polynomial shifted = p;
  shifted.add_term(MultiIndex::zero(p.num_vars()), -gamma);
  const MonomialBasis basis = monomial_basis(p.num_vars(), prog.layout.grams[0].half_degree);
  const double sampled = oracle::sample_min(p, spec.verify_samples, spec.verify_seed);
  report.extra = {{"gamma", gamma},
                  {"verify",
                   {{"coeff_residual", oracle::verify_gram(shifted, cert.grams[0], basis)},
                    {"min_gram_eig", cert.min_eigs[0]},
                    {"sampled_min", sampled},
                    {"gamma_below_sampled_min", gamma <= sampled + 1e-9}}}};
  finish_report(report, opts, out);
  return exit_code(ts.solution);
}

int run_lyapunov(const LyapunovSpec& spec, const SolveOpts& opts, std::ostream& out) {
  const int n = static_cast<int>(spec.f_num_text.size());
  if (n < 1) throw std::invalid_argument("lyapunov: at least one component required");
  if (!spec.f_den_text.empty() && static_cast<int>(spec.f_den_text.size()) != n)
    throw std::invalid_argument("lyapunov: give no denominators or one per component");

  std::vector<Polynomial> f_num, f_den;
  for (const std::string& text : spec.f_num_text) f_num.push_back(parse_polynomial(text, n));
  for (const std::string& text : spec.f_den_text) f_den.push_back(parse_polynomial(text, n));

  const std::vector<MultiIndex> tmpl = make_template(spec.template_kind, n);
  const SosProgram sos = compile_lyapunov(f_num, f_den, spec.radius_sq, tmpl, spec.eps);
  if (!spec.emit_sos.empty()) save_sos_program(sos, spec.emit_sos);
  const ConicProgram prog = compile_sos_program(sos);

  std::ofstream log_file;
  if (!opts.log_path.empty()) log_file = open_or_throw(opts.log_path);
  const TimedSolve ts = solve_timed(prog, opts, opts.log_path.empty() ? nullptr : &log_file);

  RunReport report = make_report("lyapunov", prog, ts.solution, ts.time_s);
  report.objective = problem_objective(ts.solution);

  const Certificate cert = extract_certificate(ts.solution, prog);
  Polynomial v(n);
  for (std::size_t j = 0; j < tmpl.size(); ++j)
    v.add_term(tmpl[j], cert.params[static_cast<Eigen::Index>(j)]);
  report.extra = {{"V", to_string(v)},
                  {"min_gram_eigs", cert.min_eigs},
                  {"coeff_residuals", cert.coeff_residuals}};
  if (ts.solution.status == admm::Status::Solved) {
    const double check_radius_sq = std::isfinite(spec.radius_sq) ? spec.radius_sq : 1.0;
    const oracle::LyapunovSample check = oracle::check_lyapunov_sampled(
        v, f_num, f_den, check_radius_sq, spec.verify_samples, spec.verify_seed);
    report.extra["verify"] = {{"check_radius_sq", check_radius_sq},
                              {"min_v", check.min_v},
                              {"max_vdot", check.max_vdot}};
  }
  finish_report(report, opts, out);
  return exit_code(ts.solution);
}

int run_solve_sdpa(const std::string& path, const SolveOpts& opts, std::ostream& out) {
  const ConicProgram prog = parse_sdpa_file(path);

  std::ofstream log_file;
  if (!opts.log_path.empty()) log_file = open_or_throw(opts.log_path);
  const TimedSolve ts = solve_timed(prog, opts, opts.log_path.empty() ? nullptr : &log_file);

  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  RunReport report = make_report("sdpa:" + name, prog, ts.solution, ts.time_s);
  // parse_sdpa stores c = -vec(F_0); report the maximized SDPA objective.
  report.objective = problem_objective(ts.solution);
  const Certificate cert = extract_certificate(ts.solution, prog);
  report.extra = {{"min_gram_eigs", cert.min_eigs}};
  finish_report(report, opts, out);
  return exit_code(ts.solution);
}

int run_solve_sos(const std::string& path, const SolveOpts& opts, std::ostream& out) {
  const SosProgram sos = load_sos_program(path);
  const ConicProgram prog = compile_sos_program(sos);

  std::ofstream log_file;
  if (!opts.log_path.empty()) log_file = open_or_throw(opts.log_path);
  const TimedSolve ts = solve_timed(prog, opts, opts.log_path.empty() ? nullptr : &log_file);

  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  RunReport report = make_report("sos:" + name, prog, ts.solution, ts.time_s);
  report.objective = problem_objective(ts.solution);
  const Certificate cert = extract_certificate(ts.solution, prog);
  report.extra = {{"params", std::vector<double>(cert.params.data(), cert.params.data() + cert.params.size())},
                  {"min_gram_eigs", cert.min_eigs},
                  {"coeff_residuals", cert.coeff_residuals}};
  finish_report(report, opts, out);
  return exit_code(ts.solution);
}

namespace {

RunReport bench_polymin_seed(const BenchSpec& spec, const SolveOpts& opts, int seed) {
  const Polynomial p = bench::gen_random_polymin(spec.n, spec.d, static_cast<std::uint64_t>(seed));
  const ConicProgram prog = compile_sos_program(compile_polymin(p));
  const TimedSolve ts = solve_timed(prog, opts, nullptr);
  RunReport report = make_report(
      "polymin-n" + std::to_string(spec.n) + "-d" + std::to_string(spec.d) + "-seed" +
          std::to_string(seed),
      prog, ts.solution, ts.time_s);
  report.objective = problem_objective(ts.solution);

  const Certificate cert = extract_certificate(ts.solution, prog);
  const double gamma = cert.params[0];
  Polynomial shifted = p;
  shifted.add_term(MultiIndex::zero(p.num_vars()), -gamma);
  const MonomialBasis basis = monomial_basis(p.num_vars(), prog.layout.grams[0].half_degree);
  const double sampled =
      oracle::sample_min(p, spec.verify_samples, static_cast<std::uint64_t>(seed) + 1000);
  report.extra = {{"gamma", gamma},
                  {"verify",
                   {{"coeff_residual", oracle::verify_gram(shifted, cert.grams[0], basis)},
                    {"min_gram_eig", cert.min_eigs[0]},
                    {"sampled_min", sampled},
                    {"gamma_below_sampled_min", gamma <= sampled + 1e-9}}}};
  return report;
}

RunReport bench_lyapunov_seed(const BenchSpec& spec, const SolveOpts& opts, int seed) {
  const std::vector<Polynomial> f =
      bench::gen_random_stable_system(spec.n, static_cast<std::uint64_t>(seed));
  const std::vector<MultiIndex> tmpl = make_template(spec.template_kind, spec.n);
  const ConicProgram prog =
      compile_sos_program(compile_lyapunov(f, {}, spec.radius_sq, tmpl, spec.eps));
  const TimedSolve ts = solve_timed(prog, opts, nullptr);
  RunReport report = make_report(
      "lyapunov-n" + std::to_string(spec.n) + "-seed" + std::to_string(seed), prog, ts.solution,
      ts.time_s);
  report.objective = problem_objective(ts.solution);

  const Certificate cert = extract_certificate(ts.solution, prog);
  Polynomial v(spec.n);
  for (std::size_t j = 0; j < tmpl.size(); ++j)
    v.add_term(tmpl[j], cert.params[static_cast<Eigen::Index>(j)]);
  report.extra = {{"V", to_string(v)}, {"min_gram_eigs", cert.min_eigs}};
  if (ts.solution.status == admm::Status::Solved) {
    const double check_radius_sq = std::isfinite(spec.radius_sq) ? spec.radius_sq : 1.0;
    const oracle::LyapunovSample check = oracle::check_lyapunov_sampled(
        v, f, {}, check_radius_sq, spec.verify_samples, static_cast<std::uint64_t>(seed) + 1000);
    report.extra["verify"] = {{"check_radius_sq", check_radius_sq},
                              {"min_v", check.min_v},
                              {"max_vdot", check.max_vdot}};
  }
  return report;
}

}  // namespace

int run_bench(const BenchSpec& spec, const SolveOpts& opts, std::ostream& out) {
  if (spec.mode != "polymin" && spec.mode != "lyapunov")
    throw std::invalid_argument("bench: mode must be 'polymin' or 'lyapunov'");
  if (spec.seeds < 1) throw std::invalid_argument("bench: seeds must be >= 1");
  if (spec.mode == "polymin" && spec.d < 1)
    throw std::invalid_argument("bench: polymin needs d >= 1");

  std::vector<RunReport> reports(static_cast<std::size_t>(spec.seeds));
  std::vector<std::string> errors(static_cast<std::size_t>(spec.seeds));
  const int workers = std::min(thread_budget(), spec.seeds);

  auto work = [&](int first) {
    for (int seed = first; seed < spec.seeds; seed += workers) {
      try {
        reports[static_cast<std::size_t>(seed)] = spec.mode == "polymin"
                                                      ? bench_polymin_seed(spec, opts, seed)
                                                      : bench_lyapunov_seed(spec, opts, seed);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(seed)] = e.what();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }
  for (const std::string& err : errors) {
    if (!err.empty()) throw std::runtime_error("bench: " + err);
  }

  int solved = 0;
  nlohmann::json runs = nlohmann::json::array();
  for (const RunReport& r : reports) {
    if (r.status == "Solved") ++solved;
    runs.push_back(to_json(r));
  }
  nlohmann::json j{{"problem", "bench-" + spec.mode},
                   {"runs", std::move(runs)},
                   {"solved", solved},
                   {"total", spec.seeds}};
  out << j.dump(2) << "\n";
  if (!opts.report_path.empty()) {
    std::ofstream f = open_or_throw(opts.report_path);
    f << j.dump(2) << "\n";
  }
  if (!spec.csv_path.empty()) {
    std::ofstream f = open_or_throw(spec.csv_path);
    f << csv_header() << "\n";
    for (const RunReport& r : reports) f << csv_row(r) << "\n";
  }
  return solved == spec.seeds ? 0 : 2;
}

}  // namespace sosadmm::cli
