// Command-line front end: polymin, lyapunov, solve-sdpa, solve-sos, bench.
// Prints a JSON report to stdout; exit code 0 = Solved, 2 = MaxIters,
// 1 = bad input.

#include <CLI11.hpp>
#include <iostream>
#include <limits>
#include <string>

#include "sosadmm/runner.hpp"

namespace {

void add_solve_flags(CLI::App* cmd, sosadmm::cli::SolveOpts& opts) {
  cmd->add_option("--tol", opts.tol, "Termination tolerance")->capture_default_str();
  cmd->add_option("--max-iter", opts.max_iter, "Iteration cap")->capture_default_str();
  cmd->add_option("--rho", opts.rho, "Initial penalty parameter")->capture_default_str();
  cmd->add_option("--log", opts.log_path, "Write the CSV iteration log here");
  cmd->add_option("--log-every", opts.log_every,
                  "Log every k-th iteration (default 25 when --log is set)");
  cmd->add_option("--report", opts.report_path, "Also save the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-of-squares toolkit with a row-sparse ADMM conic solver"};
  app.require_subcommand(1);

  sosadmm::cli::SolveOpts solve_opts;

  sosadmm::cli::PolyminSpec polymin;
  CLI::App* cmd_polymin =
      app.add_subcommand("polymin", "Lower-bound a polynomial via its SOS relaxation");
  cmd_polymin->add_option("--poly", polymin.poly_text, "Polynomial, e.g. \"x1^4 - 3*x1^2 + 2\"")
      ->required();
  cmd_polymin->add_option("--nvars", polymin.num_vars,
                          "Variable count (default: largest index used)");
  cmd_polymin->add_option("--emit-sos", polymin.emit_sos, "Save the compiled SOS program as JSON");
  cmd_polymin->add_option("--verify-samples", polymin.verify_samples,
                          "Sample count for the post-solve checks")
      ->capture_default_str();
  add_solve_flags(cmd_polymin, solve_opts);

  sosadmm::cli::LyapunovSpec lyap;
  double radius2 = 0.0;
  CLI::App* cmd_lyap = app.add_subcommand(
      "lyapunov", "Search for a polynomial Lyapunov function of a rational system");
  cmd_lyap->add_option("--f", lyap.f_num_text, "Component numerators (repeat per state)")
      ->required();
  cmd_lyap->add_option("--den", lyap.f_den_text,
                       "Component denominators (omit for a polynomial system)");
  CLI::Option* radius_opt = cmd_lyap->add_option(
      "--radius2", radius2, "Certify decrease on ||x||^2 <= radius2 (omit for global)");
  cmd_lyap->add_option("--template", lyap.template_kind,
                       "V candidate: 'diagonal' (sum of a_i x_i^2) or 'quadratic'")
      ->capture_default_str();
  cmd_lyap->add_option("--eps", lyap.eps, "Definiteness margin on V")->capture_default_str();
  cmd_lyap->add_option("--emit-sos", lyap.emit_sos, "Save the compiled SOS program as JSON");
  cmd_lyap->add_option("--verify-samples", lyap.verify_samples,
                       "Sample count for the post-solve checks")
      ->capture_default_str();
  add_solve_flags(cmd_lyap, solve_opts);

  std::string sdpa_path;
  CLI::App* cmd_sdpa = app.add_subcommand("solve-sdpa", "Solve a problem in SDPA sparse format");
  cmd_sdpa->add_option("--file", sdpa_path, "Input .dat-s file")->required();
  add_solve_flags(cmd_sdpa, solve_opts);

  std::string sos_path;
  CLI::App* cmd_sos = app.add_subcommand("solve-sos", "Solve an SOS program saved as JSON");
  cmd_sos->add_option("--file", sos_path, "Input JSON file (see --emit-sos)")->required();
  add_solve_flags(cmd_sos, solve_opts);

  sosadmm::cli::BenchSpec bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "Random instance sweeps with oracle checks");
  CLI::Option* bench_polymin = cmd_bench->add_flag("--polymin", "Random polynomial minimization");
  CLI::Option* bench_lyap = cmd_bench->add_flag("--lyapunov", "Random stable polynomial systems");
  cmd_bench->add_option("--n", bench.n, "Number of variables / states")->capture_default_str();
  cmd_bench->add_option("--d", bench.d, "Polymin half degree")->capture_default_str();
  cmd_bench->add_option("--seeds", bench.seeds, "Run seeds 0..seeds-1")->capture_default_str();
  cmd_bench->add_option("--radius2", bench.radius_sq, "Lyapunov ball radius^2")
      ->capture_default_str();
  cmd_bench->add_option("--template", bench.template_kind, "Lyapunov template kind")
      ->capture_default_str();
  cmd_bench->add_option("--eps", bench.eps, "Lyapunov definiteness margin")->capture_default_str();
  cmd_bench->add_option("--csv", bench.csv_path, "Write one CSV row per run here");
  cmd_bench->add_option("--verify-samples", bench.verify_samples,
                        "Sample count for the post-solve checks")
      ->capture_default_str();
  add_solve_flags(cmd_bench, solve_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_polymin->parsed()) return sosadmm::cli::run_polymin(polymin, solve_opts, std::cout);
    if (cmd_lyap->parsed()) {
      lyap.radius_sq = radius_opt->count() > 0 ? radius2
                                               : std::numeric_limits<double>::infinity();
      return sosadmm::cli::run_lyapunov(lyap, solve_opts, std::cout);
    }
    if (cmd_sdpa->parsed()) return sosadmm::cli::run_solve_sdpa(sdpa_path, solve_opts, std::cout);
    if (cmd_sos->parsed()) return sosadmm::cli::run_solve_sos(sos_path, solve_opts, std::cout);
    if (cmd_bench->parsed()) {
      if (bench_polymin->count() + bench_lyap->count() != 1)
        throw std::invalid_argument("bench: pass exactly one of --polymin or --lyapunov");
      bench.mode = bench_polymin->count() ? "polymin" : "lyapunov";
      return sosadmm::cli::run_bench(bench, solve_opts, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
