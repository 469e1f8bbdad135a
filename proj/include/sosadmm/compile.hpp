#pragma once

#include <vector>

#include "sosadmm/conic_program.hpp"
#include "sosadmm/poly.hpp"
#include "sosadmm/sos_program.hpp"

namespace sosadmm {

// "p is SOS" as a feasibility program: one Psd(N) block, N = binomial(n+d,d),
// one matching row per candidate monomial of degree <= 2d (all values 1),
// b_alpha = p_alpha, c = 0.
ConicProgram compile_sos_feasibility(const Polynomial& p, int half_degree);

// General assembly. Variable order: [Free(t) parameter block | vec(X_1) |
// ... | vec(X_K)]; one row per (constraint, candidate monomial); parameters
// stay in fixed columns ahead of the Gram blocks so certificates extract
// deterministically; c = -objective on the parameter block (the solver
// minimizes). layout.constraint_rows records each constraint's row range.
ConicProgram compile_sos_program(const SosProgram& prog);

// minimize p(x) via the SOS lower bound: maximize gamma s.t. p - gamma SOS.
// Requires even degree; half_degree = deg(p)/2. Parameter 0 is gamma.
SosProgram compile_polymin(const Polynomial& p);

// Templates for Lyapunov candidates in n variables.
std::vector<MultiIndex> diagonal_quadratic_template(int n);  // x_i^2
std::vector<MultiIndex> full_quadratic_template(int n);      // x_i x_j, i <= j

// Search for V(x) = sum_j u_j * x^template_j with V - eps*||x||^2 SOS and
// -V̇ SOS (after multiplying through by the product of the f_den components).
// Finite radius_sq restricts decrease to the ball ||x||^2 <= radius_sq via an
// S-procedure multiplier sigma, itself constrained SOS, whose coefficients are
// appended as parameters after the template coefficients. radius_sq may be
// +infinity for a global certificate (no multiplier). f_den may be empty
// (all denominators 1); components must be positive on the ball, which is
// the caller's assertion and is not verified here.
SosProgram compile_lyapunov(const std::vector<Polynomial>& f_num,
                            const std::vector<Polynomial>& f_den, double radius_sq,
                            const std::vector<MultiIndex>& v_template, double eps = 1e-3);

}  // namespace sosadmm
