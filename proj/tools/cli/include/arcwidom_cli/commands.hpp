#pragma once

#include <string>
#include <vector>

#include "arcwidom_cli/run_config.hpp"
#include "arcwidom_cli/solve_cache.hpp"
#include "arcwidom_cli/suites.hpp"
#include "arcwidom_cli/table.hpp"

namespace arcwidom::cli {

/// cap(alpha), cot(alpha/4), tan(alpha/4), z0, w0.
Table cmd_capacity(const RunConfig& cfg);
/// Extremal polynomial for the single --u0 (default 0): certificate in the
/// metadata, monomial coefficients as rows.
Table cmd_solve(const RunConfig& cfg, SolveCache& cache);
/// Limit function for the first --u0 with the kernel diagonal, over --points
/// or a default polar grid; the u0 row comes first.
Table cmd_limit(const RunConfig& cfg);
/// L_n(u) from the solver next to its asymptote, over --points or the --u0 list.
Table cmd_envelope(const RunConfig& cfg, SolveCache& cache);
VerificationReport cmd_verify(const std::string& suite, const RunConfig& cfg, SolveCache& cache);

/// Radii 0.25, 0.5, 0.75, 1.5, 2, 4 at 12 angles, plus 8 points of the complementary arc.
std::vector<ChartPoint> default_limit_grid(const ArcGeometry& geom);

}  // namespace arcwidom::cli
