#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "sosadmm/solver.hpp"

namespace sosadmm::cli {

// Solve-phase settings shared by every subcommand. log_path/log_every drive
// the CSV iteration log; report_path additionally saves the JSON report that
// is always printed to the output stream.
struct SolveOpts {
  double tol = 1e-4;
  int max_iter = 2000;
  double rho = 1.0;
  int log_every = 0;
  std::string log_path;
  std::string report_path;
};

struct PolyminSpec {
  std::string poly_text;
  int num_vars = -1;  // -1: infer from the text
  std::string emit_sos;

  int verify_samples = 10000;
  std::uint64_t verify_seed = 1;
};

struct LyapunovSpec {
  std::vector<std::string> f_num_text;
  std::vector<std::string> f_den_text;  // empty = all ones
  double radius_sq = std::numeric_limits<double>::infinity();
  std::string template_kind = "quadratic";  // or "diagonal"
  double eps = 1e-3;
  std::string emit_sos;

  int verify_samples = 10000;
  std::uint64_t verify_seed = 1;
};

struct BenchSpec {
  std::string mode;  // "polymin" or "lyapunov"
  int n = 4;
  int d = 2;        // polymin half degree
  int seeds = 5;    // runs seeds 0 .. seeds-1
  double radius_sq = 0.1;
  std::string template_kind = "quadratic";
  double eps = 1e-3;
  std::string csv_path;

  int verify_samples = 10000;
};

// Exit codes follow the CLI contract: 0 Solved, 2 MaxIters (bench: 2 if any
// seed hit MaxIters). Input problems throw; the CLI maps exceptions to 1.
int run_polymin(const PolyminSpec& spec, const SolveOpts& opts, std::ostream& out);
int run_lyapunov(const LyapunovSpec& spec, const SolveOpts& opts, std::ostream& out);
int run_solve_sdpa(const std::string& path, const SolveOpts& opts, std::ostream& out);
int run_solve_sos(const std::string& path, const SolveOpts& opts, std::ostream& out);
int run_bench(const BenchSpec& spec, const SolveOpts& opts, std::ostream& out);

// SOSADMM_THREADS, clamped to >= 1; unset or unparsable = 1.
int thread_budget();

}  // namespace sosadmm::cli
