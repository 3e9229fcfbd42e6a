#pragma once

#include <string>
#include <vector>

#include "arcwidom_cli/run_config.hpp"
#include "arcwidom_cli/solve_cache.hpp"
#include "arcwidom_cli/table.hpp"

namespace arcwidom::cli {

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
VerificationReport run_suite(const std::string& suite, const RunConfig& cfg, SolveCache& cache);

// Individual suites; `run_suite` dispatches to these.
//
// thiran-detaille  ||T_n|| against cot(alpha/4) cap^{n+1}, n = min(4, nmax)..nmax (default nmax 30).
// szego-widom      max over a 50-point set of | |b|^n |P_{n,u0}| - |F_{u0}| |, n = 5, 10, .., nmax.
// kernel           e^{-n g(u0, inf)} L_n(u0) against k(u0, u0) for every u0, n = 5, 10, .., nmax.
// finite-n         closed extremal formula against the solver for non-trivial n <= nmax (default 10).
// involution       star map identities for random polynomials and L_n(u0*) = |u0*|^n L_n(u0).
// subharmonicity   circle means of log(|b|^n L_n) against centre values, n in {5, 15} unless --n.
VerificationReport suite_thiran_detaille(const RunConfig& cfg, SolveCache& cache);
VerificationReport suite_szego_widom(const RunConfig& cfg);
VerificationReport suite_kernel(const RunConfig& cfg, SolveCache& cache);
VerificationReport suite_finite_n(const RunConfig& cfg);
VerificationReport suite_involution(const RunConfig& cfg, SolveCache& cache);
VerificationReport suite_subharmonicity(const RunConfig& cfg);

/// The 50 test points of the szego-widom suite: radii 0.3, 0.5, 2, 3.
std::vector<cplx> szego_widom_test_points();

/// Degrees step, 2 step, ..., nmax (nmax always included).
std::vector<std::size_t> degree_ladder(std::size_t step, std::size_t nmax);

}  // namespace arcwidom::cli
